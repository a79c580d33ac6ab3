// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Radius-axis analysis. The three sign combinations
//
//   A(r) = |a| r^n - |b| r^m - |c|
//   B(r) = -|a| r^n + |b| r^m - |c|
//   C(r) = -|a| r^n - |b| r^m + |c|
//
// decide where the side lengths close a triangle: circles of radius r can
// carry zeros only when all three are negative (strictly) or zero
// (degenerately). C has a unique positive root c_break, A a unique positive
// root a_break, and B has either no positive root, a double root at r0, or
// two roots b1 < r0 < b2 depending on the sign of its maximum B(r0). The
// resulting band structure, together with the dip of the winding weight
// omega*, is captured in a RegionProfile consumed by the crossing counter.

#ifndef BOHL_REGION_HPP
#define BOHL_REGION_HPP

#include <cmath>
#include <limits>
#include <string>

#include "bohl/errors.hpp"
#include "bohl/tolerances.hpp"
#include "bohl/triangle.hpp"
#include "bohl/trinomial.hpp"

namespace bohl {

/// A(r), B(r), C(r) evaluated without rescaling.
struct SideSignValues {
  double a_val = 0.0;
  double b_val = 0.0;
  double c_val = 0.0;
};

inline SideSignValues abc_values(const NormalizedTrinomial& t, double r) {
  auto [l1, l2, l3] = side_lengths(t, r);
  auto sl = detail::slacks(l1, l2, l3);
  return {-sl.s1, -sl.s2, -sl.s3};
}

struct BisectResult {
  double root = 0.0;
  double rel_width = 0.0;  ///< final bracket width over max(1, root)
  int iterations = 0;
};

/// Bisection kernel for the breakpoint equations and crossing radii.
/// Requires f(lo) and f(hi) of opposite (or zero) sign; runs to relative
/// width bisect_rel or the iteration cap, whichever comes first.
template <typename F>
BisectResult bisect_root(F&& f, double lo, double hi,
                         const Tolerances& tol = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketFailure("no sign change on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  BisectResult out;
  for (out.iterations = 0; out.iterations < tol.bisect_max_iter;
       ++out.iterations) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol.bisect_rel * std::max(1.0, std::abs(mid))) break;
    double fmid = f(mid);
    if (fmid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  out.root = 0.5 * (lo + hi);
  out.rel_width = (hi - lo) / std::max(1.0, std::abs(out.root));
  return out;
}

/// The three band configurations, keyed by the sign of B(r0): I when the
/// middle term never dominates (B(r0) < 0), II when it dominates at the
/// single radius r0 (B(r0) = 0), III when it dominates on an interval
/// (B(r0) > 0, roots b1 < r0 < b2).
enum class BandCase { I, II, III };

inline const char* to_string(BandCase c) {
  switch (c) {
    case BandCase::I: return "I";
    case BandCase::II: return "II";
    default: return "III";
  }
}

/// Complete description of the zero-carrying band (c_break, a_break), the
/// dominance gap if any, and the piecewise-monotone shape of omega*:
/// constant 0 up to c_break, strictly decreasing to omega_min on
/// [c_break, dip_lo], constant on the plateau [dip_lo, dip_hi], strictly
/// increasing to n/2 on [dip_hi, a_break], constant n/2 beyond.
struct RegionProfile {
  BandCase case_label = BandCase::I;
  double c_break = 0.0;  ///< unique positive root of C
  double a_break = 0.0;  ///< unique positive root of A
  double r0 = 0.0;       ///< critical radius (m|b| / n|a|)^(1/(n-m))
  double b_max = 0.0;    ///< B(r0), the sign that selects the case
  /// Roots of B in case III (equal to r0 in case II, NaN in case I).
  double b1 = std::numeric_limits<double>::quiet_NaN();
  double b2 = std::numeric_limits<double>::quiet_NaN();
  double dip_lo = 0.0;     ///< start of the omega* minimum plateau
  double dip_hi = 0.0;     ///< end of the omega* minimum plateau
  double omega_min = 0.0;  ///< minimum of omega*, in [-m/2, 0]
  /// Radius in [dip_hi, a_break] where omega* returns to 0; equals c_break
  /// when omega* never goes negative. Diagnostic only.
  double r1 = 0.0;

  bool has_gap() const { return case_label != BandCase::I; }
};

namespace detail {

// Grows hi geometrically from start until pred(hi) flips, for bracketing
// the outer breakpoints. Throws once the magnitude guard is passed.
template <typename F>
double grow_until_negative(F&& f, double start, const char* what) {
  double hi = start;
  for (int i = 0; i < 400; ++i) {
    if (f(hi) < 0.0) return hi;
    hi *= 2.0;
  }
  throw BracketFailure(std::string("no sign change found for ") + what);
}

template <typename F>
double shrink_until_negative(F&& f, double start, const char* what) {
  double lo = start;
  for (int i = 0; i < 2000; ++i) {
    if (f(lo) < 0.0) return lo;
    lo *= 0.5;
  }
  throw BracketFailure(std::string("no sign change found for ") + what);
}

}  // namespace detail

/// Computes every breakpoint and the omega* piece structure.
inline RegionProfile breakpoints(const NormalizedTrinomial& t,
                                 const Tolerances& tol = {}) {
  double amod = std::abs(t.a);
  double bmod = std::abs(t.b);
  RegionProfile out;

  auto c_fn = [&](double r) { return abc_values(t, r).c_val; };
  auto a_fn = [&](double r) { return abc_values(t, r).a_val; };
  auto b_fn = [&](double r) { return abc_values(t, r).b_val; };

  // C starts at |c| > 0 and decreases strictly; bracket [0, hi].
  double c_hi = detail::grow_until_negative(
      c_fn, std::pow(t.c / (amod + bmod), 1.0 / t.n), "the inner breakpoint");
  out.c_break = bisect_root(c_fn, 0.0, c_hi, tol).root;

  // B peaks at r0; A is negative there and increases strictly beyond.
  out.r0 = std::pow(t.m * bmod / (t.n * amod), 1.0 / (t.n - t.m));
  out.b_max = b_fn(out.r0);

  double a_hi = detail::grow_until_negative(
      [&](double r) { return -a_fn(r); }, 2.0 * out.r0,
      "the outer breakpoint");
  out.a_break = bisect_root(a_fn, out.r0, a_hi, tol).root;

  double scale0 = coefficient_scale(t, out.r0);
  if (std::abs(out.b_max) <= tol.case2_rel * scale0) {
    out.case_label = BandCase::II;
    out.b1 = out.b2 = out.r0;
  } else if (out.b_max < 0.0) {
    out.case_label = BandCase::I;
  } else {
    out.case_label = BandCase::III;
    double b_lo = detail::shrink_until_negative(b_fn, 0.5 * out.r0,
                                                "the lower gap edge");
    out.b1 = bisect_root(b_fn, b_lo, out.r0, tol).root;
    double b_hi = detail::grow_until_negative(b_fn, 2.0 * out.r0,
                                              "the upper gap edge");
    out.b2 = bisect_root(b_fn, out.r0, b_hi, tol).root;
  }

  // Dip of omega*: where the minimum sits and what it is.
  if (out.case_label == BandCase::I) {
    if (out.r0 <= out.c_break) {
      // omega* is already increasing when the band opens.
      out.dip_lo = out.dip_hi = out.c_break;
      out.omega_min = 0.0;
    } else {
      out.dip_lo = out.dip_hi = out.r0;
      out.omega_min = omega_star(t, out.r0, tol);
    }
  } else {
    out.dip_lo = out.b1;
    out.dip_hi = out.b2;
    out.omega_min = -0.5 * t.m;
  }

  // Diagnostic zero of omega* on the ascending side.
  if (out.omega_min >= 0.0) {
    out.r1 = out.c_break;
  } else {
    auto w_fn = [&](double r) { return omega_star(t, r, tol); };
    out.r1 = bisect_root(w_fn, out.dip_hi, out.a_break, tol).root;
  }
  return out;
}

inline RegionProfile breakpoints(const HarmonicTrinomial& t,
                                 const Tolerances& tol = {}) {
  return breakpoints(normalize_phase(t), tol);
}

/// Where a radius sits relative to the band structure.
enum class RadiusRegion {
  BelowC,    ///< r < c_break: constant term dominates, disk is zero-free
  InsideT,   ///< strict triangle: circles here can carry zeros
  Gap,       ///< between b1 and b2: middle term dominates, zero-free
  AboveA,    ///< r > a_break: leading term dominates, all zeros inside
  Boundary,  ///< within tolerance of a breakpoint radius
};

inline const char* to_string(RadiusRegion r) {
  switch (r) {
    case RadiusRegion::BelowC: return "below_c";
    case RadiusRegion::InsideT: return "inside_t";
    case RadiusRegion::Gap: return "gap";
    case RadiusRegion::AboveA: return "above_a";
    default: return "boundary";
  }
}

struct RadiusClassification {
  RadiusRegion region = RadiusRegion::BelowC;
  double nearest_break = 0.0;
  double rel_distance = 0.0;
};

/// Tags r against the profile; callers use BelowC / Gap / AboveA as early
/// exits since those radii are provably zero-free (or zero-complete).
inline RadiusClassification zero_free_classification(
    const RegionProfile& p, double r, const Tolerances& tol = {}) {
  RadiusClassification out;
  double breaks[4] = {p.c_break, p.a_break, p.b1, p.b2};
  int n_breaks = p.has_gap() ? 4 : 2;
  out.nearest_break = breaks[0];
  for (int i = 0; i < n_breaks; ++i) {
    if (std::abs(r - breaks[i]) < std::abs(r - out.nearest_break)) {
      out.nearest_break = breaks[i];
    }
  }
  out.rel_distance = std::abs(r - out.nearest_break) / std::max(1.0, r);
  if (out.rel_distance <= tol.boundary_warn_rel) {
    out.region = RadiusRegion::Boundary;
  } else if (r < p.c_break) {
    out.region = RadiusRegion::BelowC;
  } else if (r > p.a_break) {
    out.region = RadiusRegion::AboveA;
  } else if (p.has_gap() && r > p.b1 && r < p.b2) {
    out.region = RadiusRegion::Gap;
  } else {
    out.region = RadiusRegion::InsideT;
  }
  return out;
}

}  // namespace bohl

#endif  // BOHL_REGION_HPP
