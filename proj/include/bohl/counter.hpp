// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Crossing arithmetic. Roots of modulus u exist exactly when one of the two
// path values P* + omega*(u) or P* - omega*(u) is an integer, and the count
// of roots in the open disk of radius r is the number of integer crossings
// the two paths make as u sweeps (0, r). Since omega* is piecewise
// monotone, every strictly monotone piece is scanned for the integers
// strictly inside its swept value interval; each such crossing pins one
// radius by bisection and contributes one root circle (in the coprime
// reduced instance; a gcd d multiplies counts and takes d-th roots of
// radii). Integers attained exactly at piece endpoints cannot be resolved
// by the sweep itself; they are handed to a pivot-perturbation fallback
// that reruns the sweep with the pivot shifted by +-S and keeps the events
// on which both shifts agree.

#ifndef BOHL_COUNTER_HPP
#define BOHL_COUNTER_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bohl/errors.hpp"
#include "bohl/oracle.hpp"
#include "bohl/region.hpp"
#include "bohl/tolerances.hpp"
#include "bohl/triangle.hpp"
#include "bohl/trinomial.hpp"

namespace bohl {

enum class Path { Plus, Minus };

inline int path_sign(Path p) { return p == Path::Plus ? +1 : -1; }

inline const char* to_string(Path p) { return p == Path::Plus ? "+" : "-"; }

/// Which monotone piece of omega* a crossing lives on. Descending is the
/// inner piece [c_break, dip_lo], Ascending the outer [dip_hi, a_break].
enum class Piece { Descending, Ascending };

inline const char* to_string(Piece p) {
  return p == Piece::Descending ? "descending" : "ascending";
}

/// One unit of root count: at `radius` the chosen path meets the integer k.
/// Transversal events come straight from a monotone sweep; non-transversal
/// ones sit at endpoint radii and were either just detected (provisional,
/// from jump_radii) or confirmed by the perturbation fallback.
struct JumpEvent {
  double radius = 0.0;
  Path path = Path::Plus;
  long long k = 0;
  Piece piece = Piece::Ascending;
  bool transversal = true;
};

/// Where an endpoint integer hit was attained.
enum class HitKind {
  InnerEdge,  ///< value P* at c_break
  Dip,        ///< value P* +- omega_min on the dip or plateau
  OuterEdge,  ///< value P* +- n/2 at a_break
};

inline const char* to_string(HitKind k) {
  switch (k) {
    case HitKind::InnerEdge: return "inner_edge";
    case HitKind::Dip: return "dip";
    default: return "outer_edge";
  }
}

struct EndpointHit {
  Path path = Path::Plus;
  long long k = 0;
  HitKind kind = HitKind::InnerEdge;
  double radius = 0.0;  ///< endpoint radius where the value is attained
  double value = 0.0;   ///< the path value there (within tolerance of k)
};

namespace detail {

struct SweepPiece {
  double r_lo = 0.0, r_hi = 0.0;
  double w_lo = 0.0, w_hi = 0.0;  // omega* at the ends, exact constants
  Piece kind = Piece::Ascending;
};

inline std::vector<SweepPiece> monotone_pieces(const RegionProfile& p,
                                               int n) {
  std::vector<SweepPiece> out;
  if (p.dip_lo > p.c_break) {
    out.push_back({p.c_break, p.dip_lo, 0.0, p.omega_min, Piece::Descending});
  }
  out.push_back({p.dip_hi, p.a_break, p.omega_min, 0.5 * n,
                 Piece::Ascending});
  return out;
}

inline HitKind hit_kind_at(double r, const RegionProfile& p) {
  if (r == p.c_break) return HitKind::InnerEdge;
  if (r == p.a_break) return HitKind::OuterEdge;
  return HitKind::Dip;
}

struct SweepOutcome {
  std::vector<JumpEvent> transversal;
  std::vector<JumpEvent> provisional;  // endpoint hits as flagged events
  std::vector<EndpointHit> hits;
};

// Scans one path over one monotone piece for integer crossings of
// v(r) = pivot + s*omega*(r) and appends what it finds.
inline void sweep_piece(const NormalizedTrinomial& t, const SweepPiece& pc,
                        double pivot, Path path, const RegionProfile& prof,
                        const Tolerances& tol, SweepOutcome* out) {
  int s = path_sign(path);
  double v_lo = pivot + s * pc.w_lo;
  double v_hi = pivot + s * pc.w_hi;
  double vmin = std::min(v_lo, v_hi);
  double vmax = std::max(v_lo, v_hi);
  long long k_first = static_cast<long long>(std::floor(vmin)) - 1;
  long long k_last = static_cast<long long>(std::ceil(vmax)) + 1;
  for (long long k = k_first; k <= k_last; ++k) {
    double dk = static_cast<double>(k);
    if (std::abs(dk - v_lo) <= tol.integer_hit) {
      out->hits.push_back({path, k, hit_kind_at(pc.r_lo, prof), pc.r_lo,
                           v_lo});
      out->provisional.push_back({pc.r_lo, path, k, pc.kind, false});
    } else if (std::abs(dk - v_hi) <= tol.integer_hit) {
      out->hits.push_back({path, k, hit_kind_at(pc.r_hi, prof), pc.r_hi,
                           v_hi});
      out->provisional.push_back({pc.r_hi, path, k, pc.kind, false});
    } else if (dk > vmin && dk < vmax) {
      auto g = [&](double r) {
        return pivot + s * omega_star(t, r, tol) - dk;
      };
      double radius = bisect_root(g, pc.r_lo, pc.r_hi, tol).root;
      out->transversal.push_back({radius, path, k, pc.kind, true});
    }
  }
}

inline void sort_events(std::vector<JumpEvent>* events) {
  std::sort(events->begin(), events->end(),
            [](const JumpEvent& x, const JumpEvent& y) {
              if (x.radius != y.radius) return x.radius < y.radius;
              if (x.path != y.path) return x.path == Path::Plus;
              if (x.k != y.k) return x.k < y.k;
              return static_cast<int>(x.piece) < static_cast<int>(y.piece);
            });
}

inline SweepOutcome sweep_all(const NormalizedTrinomial& t,
                              const RegionProfile& prof, double pivot,
                              const Tolerances& tol) {
  SweepOutcome out;
  for (const auto& pc : monotone_pieces(prof, t.n)) {
    sweep_piece(t, pc, pivot, Path::Plus, prof, tol, &out);
    sweep_piece(t, pc, pivot, Path::Minus, prof, tol, &out);
  }
  sort_events(&out.transversal);
  sort_events(&out.provisional);
  return out;
}

// Distance from the closest perturbed sweep endpoint value to an integer;
// the fallback escalates its shift until this clears a safety margin.
inline double endpoint_integer_gap(double pivot, const RegionProfile& prof,
                                   int n) {
  double levels[3] = {0.0, prof.omega_min, 0.5 * n};
  double gap = 1.0;
  for (double v : levels) {
    for (int s : {+1, -1}) {
      double val = pivot + s * v;
      gap = std::min(gap, std::abs(val - std::round(val)));
    }
  }
  return gap;
}

inline double snap_to_breakpoint(double r, const RegionProfile& prof) {
  double candidates[4] = {prof.c_break, prof.dip_lo, prof.dip_hi,
                          prof.a_break};
  double best = candidates[0];
  for (double c : candidates) {
    if (std::abs(r - c) < std::abs(r - best)) best = c;
  }
  return best;
}

}  // namespace detail

/// All integer crossings of both pivot paths, one event per crossing per
/// strictly monotone piece. Transversal entries are final; entries with
/// transversal=false are provisional endpoint hits that must be resolved
/// through perturbation_fallback before being counted. Requires coprime
/// exponents and c > 0.
inline std::vector<JumpEvent> jump_radii(const NormalizedTrinomial& t,
                                         const Tolerances& tol = {}) {
  if (std::gcd(t.n, t.m) != 1) {
    throw NonCoprime("exponents share a factor; reduce the instance first");
  }
  PivotData pivot = pivot_data(t, tol);
  RegionProfile prof = breakpoints(t, tol);
  detail::SweepOutcome sw = detail::sweep_all(t, prof, pivot.p_star, tol);
  std::vector<JumpEvent> out = std::move(sw.transversal);
  out.insert(out.end(), sw.provisional.begin(), sw.provisional.end());
  detail::sort_events(&out);
  return out;
}

/// Genericity diagnosis: whether 2 P* is an integer (the measure-zero
/// configuration in which both paths can hit integers at the same radius
/// and degenerate circles may carry roots), plus every endpoint integer
/// hit found by the sweep. An empty hit list means the transversal events
/// are the whole story.
struct DegenerateReport {
  bool generic = true;
  double p_star = 0.0;
  std::vector<EndpointHit> hits;

  bool needs_fallback() const { return !hits.empty(); }
};

inline DegenerateReport degenerate_diagnostics(const NormalizedTrinomial& t,
                                               const Tolerances& tol = {}) {
  if (std::gcd(t.n, t.m) != 1) {
    throw NonCoprime("exponents share a factor; reduce the instance first");
  }
  PivotData pivot = pivot_data(t, tol);
  RegionProfile prof = breakpoints(t, tol);
  detail::SweepOutcome sw = detail::sweep_all(t, prof, pivot.p_star, tol);
  DegenerateReport out;
  out.generic = !pivot.two_p_star_integral;
  out.p_star = pivot.p_star;
  for (const auto& h : sw.hits) {
    bool seen = false;
    for (const auto& got : out.hits) {
      seen = seen || (got.path == h.path && got.k == h.k &&
                      got.kind == h.kind && got.radius == h.radius);
    }
    if (!seen) out.hits.push_back(h);
  }
  return out;
}

/// Final event list for one coprime instance plus how it was obtained.
struct ResolvedCrossings {
  std::vector<JumpEvent> events;
  bool fallback_engaged = false;
  bool oracle_resolved = false;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<JumpEvent> transversal_sweep(const NormalizedTrinomial& t,
                                                const RegionProfile& prof,
                                                double pivot,
                                                const Tolerances& tol) {
  return sweep_all(t, prof, pivot, tol).transversal;
}

inline bool same_key(const JumpEvent& x, const JumpEvent& y) {
  return x.path == y.path && x.k == y.k && x.piece == y.piece;
}

// Removes from `list` the event matching `key`, if present.
inline bool take_by_key(std::vector<JumpEvent>* list, const JumpEvent& key) {
  for (auto it = list->begin(); it != list->end(); ++it) {
    if (same_key(*it, key)) {
      list->erase(it);
      return true;
    }
  }
  return false;
}

// Rebuilds the event list from oracle root moduli when the perturbation
// bookkeeping cannot be reconciled. Labels are best-effort (nearest
// integer path value); radii and multiplicities come from the roots.
inline std::vector<JumpEvent> arbitrate_with_oracle(
    const NormalizedTrinomial& t, const PivotData& pivot,
    const RegionProfile& prof, const std::vector<JumpEvent>& base,
    const Tolerances& tol, const OracleParams& params) {
  HarmonicTrinomial raw{t.a, t.b, Complex{t.c, 0.0}, t.n, t.m};
  RootSet rs = find_all_roots(raw, params, tol);
  // Cluster moduli.
  std::vector<std::pair<double, int>> clusters;  // (radius, multiplicity)
  for (const auto& root : rs.roots) {
    double mod = std::abs(root.z);
    if (!clusters.empty() &&
        mod - clusters.back().first <=
            10.0 * tol.radius_cluster_rel * std::max(1.0, mod)) {
      clusters.back().second++;
    } else {
      clusters.emplace_back(mod, 1);
    }
  }
  std::vector<JumpEvent> out;
  std::vector<bool> spent(base.size(), false);
  for (auto [radius, mult] : clusters) {
    // Spend transversal base events on this cluster first.
    int remaining = mult;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (remaining > 0 && !spent[i] &&
          std::abs(base[i].radius - radius) <=
              tol.fallback_radius_match * std::max(1.0, radius)) {
        out.push_back(base[i]);
        spent[i] = true;
        --remaining;
      }
    }
    for (int i = 0; i < remaining; ++i) {
      // Label by whichever (path, integer) is nearest at this radius.
      double w = omega_star(t, radius, tol);
      JumpEvent e;
      e.radius = snap_to_breakpoint(radius, prof);
      e.transversal = false;
      e.piece = radius <= prof.dip_lo ? Piece::Descending : Piece::Ascending;
      double best = 1e9;
      for (int s : {+1, -1}) {
        double val = pivot.p_star + s * w;
        double dist = std::abs(val - std::round(val));
        if (dist < best) {
          best = dist;
          e.path = s > 0 ? Path::Plus : Path::Minus;
          e.k = static_cast<long long>(std::llround(val));
        }
      }
      out.push_back(e);
    }
  }
  sort_events(&out);
  return out;
}

inline ResolvedCrossings resolve_crossings(const NormalizedTrinomial& t,
                                           const PivotData& pivot,
                                           const RegionProfile& prof,
                                           const Tolerances& tol,
                                           bool allow_oracle,
                                           const OracleParams& params) {
  SweepOutcome base = sweep_all(t, prof, pivot.p_star, tol);
  ResolvedCrossings out;
  out.events = base.transversal;
  if (base.hits.empty()) {
    return out;
  }
  out.fallback_engaged = true;

  // Escalate the pivot shift until every perturbed sweep endpoint clears
  // the integers by a safe margin on both sides.
  double shift = tol.fallback_pivot_shift;
  bool clear = false;
  for (int i = 0; i < 40 && !clear; ++i) {
    clear = endpoint_integer_gap(pivot.p_star + shift, prof, t.n) >
                tol.fallback_endpoint_clear &&
            endpoint_integer_gap(pivot.p_star - shift, prof, t.n) >
                tol.fallback_endpoint_clear;
    if (!clear) shift *= 3.0;
  }
  bool anomalous = false;
  if (!clear || shift > 1e-2) {
    anomalous = true;
    out.notes.push_back("no clean perturbation shift found");
  }

  std::vector<JumpEvent> plus, minus;
  if (!anomalous) {
    plus = transversal_sweep(t, prof, pivot.p_star + shift, tol);
    minus = transversal_sweep(t, prof, pivot.p_star - shift, tol);
    // Events surviving from the unperturbed sweep keep their radii; drop
    // their perturbed twins from both sides.
    for (const auto& e : base.transversal) {
      take_by_key(&plus, e);
      take_by_key(&minus, e);
    }
  }

  // Pair leftovers across the two shifts by radius: a hit radius produces
  // a crossing just next to the endpoint under one shift sign per path,
  // and paired appearances pin down one real event each.
  std::vector<JumpEvent> accepted;
  auto snap_or_flag = [&](const JumpEvent& e) {
    JumpEvent snapped = e;
    snapped.radius = snap_to_breakpoint(e.radius, prof);
    snapped.transversal = false;
    if (std::abs(snapped.radius - e.radius) >
        1e-2 * std::max(1.0, snapped.radius)) {
      anomalous = true;
      out.notes.push_back("perturbed crossing too far from any endpoint");
    }
    return snapped;
  };
  if (!anomalous) {
    std::vector<JumpEvent> plus_rest;
    for (const auto& ep : plus) {
      int match = -1;
      double best = tol.fallback_radius_match * std::max(1.0, ep.radius);
      for (std::size_t j = 0; j < minus.size(); ++j) {
        if (minus[j].piece != ep.piece) continue;
        double d = std::abs(minus[j].radius - ep.radius);
        if (d <= best) {
          best = d;
          match = static_cast<int>(j);
        }
      }
      if (match >= 0) {
        accepted.push_back(snap_or_flag(ep));  // labels from the +S twin
        minus.erase(minus.begin() + match);
      } else {
        plus_rest.push_back(ep);
      }
    }
    // One-sided leftovers: a descending+ascending twin with the same path
    // and integer is a plateau (or dip) brushed exactly; a lone crossing
    // next to an edge is a root circle at that edge.
    auto handle_side = [&](std::vector<JumpEvent>& side) {
      while (!side.empty() && !anomalous) {
        JumpEvent first = side.front();
        side.erase(side.begin());
        int twin = -1;
        for (std::size_t j = 0; j < side.size(); ++j) {
          if (side[j].path == first.path && side[j].k == first.k &&
              side[j].piece != first.piece) {
            twin = static_cast<int>(j);
            break;
          }
        }
        if (twin >= 0) {
          if (prof.dip_lo == prof.dip_hi) {
            throw SingularRoot(
                "pivot path tangent to an integer at the omega* minimum; "
                "roots there have vanishing Jacobian");
          }
          JumpEvent second = side[twin];
          side.erase(side.begin() + twin);
          accepted.push_back(snap_or_flag(first));
          accepted.push_back(snap_or_flag(second));
        } else {
          accepted.push_back(snap_or_flag(first));
        }
      }
    };
    handle_side(plus_rest);
    handle_side(minus);
  }

  if (anomalous) {
    if (!allow_oracle) {
      throw FallbackDisagreement(
          "perturbation results are inconsistent and oracle arbitration "
          "is disabled");
    }
    out.events = arbitrate_with_oracle(t, pivot, prof, base.transversal,
                                       tol, params);
    out.oracle_resolved = true;
    return out;
  }

  out.events.insert(out.events.end(), accepted.begin(), accepted.end());
  sort_events(&out.events);
  return out;
}

}  // namespace detail

/// Resolves every crossing of the instance, including endpoint hits, via
/// the pivot-perturbation procedure; identity on the transversal list when
/// no endpoint is hit. `oracle_params` enables arbitration by the numeric
/// root finder when the two perturbations disagree; pass nullptr to get a
/// FallbackDisagreement throw instead.
inline ResolvedCrossings perturbation_fallback(
    const NormalizedTrinomial& t, const Tolerances& tol = {},
    const OracleParams* oracle_params = nullptr) {
  if (std::gcd(t.n, t.m) != 1) {
    throw NonCoprime("exponents share a factor; reduce the instance first");
  }
  PivotData pivot = pivot_data(t, tol);
  RegionProfile prof = breakpoints(t, tol);
  OracleParams params = oracle_params ? *oracle_params : OracleParams{};
  return detail::resolve_crossings(t, pivot, prof, tol,
                                   oracle_params != nullptr, params);
}

/// Options shared by the counting entry points.
struct CountOptions {
  Tolerances tol{};
  OracleParams oracle{};
  /// Count roots with modulus <= r instead of < r.
  bool closed_disk = false;
  /// Let the fallback consult the numeric oracle when its two perturbed
  /// sweeps cannot be reconciled.
  bool allow_oracle_fallback = true;
};

struct BoundaryWarning {
  double event_radius = 0.0;
  double distance = 0.0;
};

/// A full count: the number itself plus the evidence behind it.
struct CountResult {
  long long count = 0;
  int reduced_by = 1;    ///< exponent gcd divided out internally
  bool generic = true;   ///< 2 P* not an integer
  bool fallback_used = false;
  bool oracle_resolved = false;
  std::vector<JumpEvent> events;      ///< all crossings, caller-space radii
  std::vector<JumpEvent> jumps_used;  ///< the crossings inside the disk
  std::vector<BoundaryWarning> warnings;
  /// Set when |a| r^n > |b| r^m + |c| at the query radius: the classical
  /// dominant-term claim n + 2m and whether the actual count differs from
  /// it (it does for instances whose dip never reaches -m/2).
  std::optional<long long> dominance_claim;
  std::optional<bool> dominance_mismatch;

  bool boundary_ambiguous() const { return !warnings.empty(); }
};

namespace detail {

/// Everything later stages need about one analyzed instance.
struct Analysis {
  NormalizedTrinomial reduced;   // coprime, c > 0
  PivotData pivot;
  RegionProfile profile;         // in reduced coordinates
  ResolvedCrossings resolved;    // events in reduced coordinates
  std::vector<JumpEvent> events; // same events, caller-space radii
  int d = 1;
};

inline Analysis analyze(const HarmonicTrinomial& t,
                        const CountOptions& opts) {
  Analysis out;
  out.reduced = normalize(t);
  out.d = out.reduced.reduced_by;
  out.pivot = pivot_data(out.reduced, opts.tol);
  out.profile = breakpoints(out.reduced, opts.tol);
  out.resolved = resolve_crossings(out.reduced, out.pivot, out.profile,
                                   opts.tol, opts.allow_oracle_fallback,
                                   opts.oracle);
  out.events = out.resolved.events;
  if (out.d > 1) {
    for (auto& e : out.events) {
      e.radius = std::pow(e.radius, 1.0 / out.d);
    }
  }
  return out;
}

}  // namespace detail

/// Number of roots of f in the open disk |z| < r (closed disk behind the
/// option). Works for any valid instance; normalization, gcd reduction and
/// endpoint-hit resolution happen internally.
inline CountResult count_roots_in_disk(const HarmonicTrinomial& t, double r,
                                       const CountOptions& opts = {}) {
  if (!(r > 0.0)) {
    throw Error("query radius must be positive");
  }
  detail::Analysis an = detail::analyze(t, opts);
  CountResult out;
  out.reduced_by = an.d;
  out.generic = !an.pivot.two_p_star_integral;
  out.fallback_used = an.resolved.fallback_engaged;
  out.oracle_resolved = an.resolved.oracle_resolved;
  out.events = an.events;
  for (const auto& e : an.events) {
    double dist = std::abs(e.radius - r);
    if (dist <= opts.tol.boundary_warn_rel * r) {
      out.warnings.push_back({e.radius, dist});
    }
    bool inside = opts.closed_disk
                      ? e.radius <= r * (1.0 + opts.tol.closed_disk_rel)
                      : e.radius < r;
    if (inside) {
      out.jumps_used.push_back(e);
    }
  }
  out.count = an.d * static_cast<long long>(out.jumps_used.size());
  double lead = std::abs(t.a) * std::pow(r, t.n);
  double rest = std::abs(t.b) * std::pow(r, t.m) + std::abs(t.c);
  if (lead > rest) {
    out.dominance_claim = t.n + 2ll * t.m;
    out.dominance_mismatch = (*out.dominance_claim != out.count);
  }
  return out;
}

/// Total number of roots of f in the plane: the count beyond the outer
/// breakpoint, where the leading term dominates every circle.
inline long long total_root_count(const HarmonicTrinomial& t,
                                  const CountOptions& opts = {}) {
  detail::Analysis an = detail::analyze(t, opts);
  return an.d * static_cast<long long>(an.events.size());
}

/// One step of the count function r -> Card(Z_f(r)).
struct CountStep {
  double radius = 0.0;    ///< jump location (caller-space)
  long long count = 0;    ///< count strictly after the jump
  long long increment = 0;
};

/// The exact step-function representation of the root count: coincident
/// radii are merged, counts are cumulative, and by the open-disk
/// convention the count at a listed radius is the value before the step.
inline std::vector<CountStep> count_profile(const HarmonicTrinomial& t,
                                            const CountOptions& opts = {}) {
  detail::Analysis an = detail::analyze(t, opts);
  std::vector<CountStep> out;
  long long running = 0;
  for (const auto& e : an.events) {
    if (!out.empty() &&
        e.radius - out.back().radius <=
            opts.tol.radius_cluster_rel * std::max(1.0, e.radius)) {
      out.back().increment += an.d;
      out.back().count += an.d;
      running = out.back().count;
    } else {
      running += an.d;
      out.push_back({e.radius, running, an.d});
    }
  }
  return out;
}

/// Analytic roots on the circle |z| = e.radius, from the congruences that
/// characterize circle roots: with s the event's path sign, the argument
/// must satisfy alpha + n*theta = pi + s*omega2 and beta - m*theta =
/// pi - s*omega1 (mod 2*pi). The first congruence gives n candidates; the
/// second prunes them to the actual roots, which are then polished on the
/// circle and residual-checked. Expects the event and instance in the same
/// (coprime) coordinates.
inline std::vector<Complex> roots_on_circle(const NormalizedTrinomial& t,
                                            const JumpEvent& e,
                                            const Tolerances& tol = {}) {
  if (std::gcd(t.n, t.m) != 1) {
    throw NonCoprime("exponents share a factor; reduce the instance first");
  }
  double r = e.radius;
  TriangleAngles ang;
  try {
    ang = triangle_angles(t, r, tol);
  } catch (const NotATriangle&) {
    throw NoCandidate("no triangle at radius " + std::to_string(r) +
                      "; the circle is zero-free");
  }
  int s = path_sign(e.path);
  double scale = coefficient_scale(t, r);
  std::vector<Complex> out;
  for (int j = 0; j < t.n; ++j) {
    double theta =
        (kPi + s * ang.omega2 - t.alpha + kTwoPi * j) / t.n;
    double second = t.beta - t.m * theta;
    double want = kPi - s * ang.omega1;
    if (angle_distance(second, want) > 1e4 * tol.congruence_tol) continue;
    // Polish along the circle: one-dimensional least squares in theta.
    for (int it = 0; it < 32; ++it) {
      Complex w = std::polar(r, theta);
      Complex fv = evaluate(t, w);
      if (std::abs(fv) < 0.25 * tol.circle_residual_rel * scale) break;
      Complex dv = Complex{0.0, 1.0} *
                   (double(t.n) * t.a * pow_int(w, t.n) -
                    double(t.m) * t.b * pow_int(std::conj(w), t.m));
      double denom = std::norm(dv);
      if (denom == 0.0) break;
      double step = (std::conj(dv) * fv).real() / denom;
      theta -= step;
    }
    Complex z = std::polar(r, theta);
    if (std::abs(evaluate(t, z)) >= tol.circle_residual_rel * scale) {
      continue;
    }
    bool dup = false;
    for (const auto& got : out) {
      dup = dup || std::abs(got - z) <= 1e-9 * std::max(1.0, r);
    }
    if (!dup) out.push_back(z);
  }
  if (out.empty()) {
    throw NoCandidate("no candidate angle met the residual bound at radius " +
                      std::to_string(r));
  }
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    return std::arg(x) < std::arg(y);
  });
  return out;
}

/// The d-th roots of w, sorted by argument; maps roots of the reduced
/// instance back to the original one.
inline std::vector<Complex> dth_roots(Complex w, int d) {
  std::vector<Complex> out;
  double mod = std::pow(std::abs(w), 1.0 / d);
  double base = std::arg(w) / d;
  for (int l = 0; l < d; ++l) {
    out.push_back(std::polar(mod, base + kTwoPi * l / d));
  }
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    return std::arg(x) < std::arg(y);
  });
  return out;
}

}  // namespace bohl

#endif  // BOHL_COUNTER_HPP
