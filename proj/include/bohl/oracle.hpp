// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent numeric ground truth. Every zero of f has modulus inside the
// closed band [c_break, a_break], so a polar grid over a slightly padded
// annulus seeds Newton's method for the planar system (Re f, Im f) = 0.
// Converged points are deduplicated and cross-checked against three facts
// that hold for any harmonic trinomial with nonsingular zeros: the zero
// count has the parity of n, it never exceeds n + 2m, and the number of
// sense-preserving zeros minus sense-reversing ones equals n. A grid that
// cannot reproduce these is densified, and the oracle refuses instances
// with singular (Jacobian-zero) roots rather than miscount them.

#ifndef BOHL_ORACLE_HPP
#define BOHL_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bohl/errors.hpp"
#include "bohl/region.hpp"
#include "bohl/tolerances.hpp"
#include "bohl/trinomial.hpp"

namespace bohl {

struct FoundRoot {
  Complex z;
  double residual = 0.0;  ///< |f(z)| at the accepted point
  int jac_sign = 0;       ///< +1 sense-preserving, -1 sense-reversing
};

struct RootSet {
  std::vector<FoundRoot> roots;  ///< sorted by (modulus, argument)
  int angular_nodes = 0;
  int radial_nodes = 0;
  double annulus_lo = 0.0;
  double annulus_hi = 0.0;
  int densify_rounds = 0;  ///< extra grid refinements that were needed
  int preserving = 0;
  int reversing = 0;
};

namespace detail {

// One Newton orbit for the planar system. The complex step solves the
// linearization fz*delta + fzb*conj(delta) = f. Returns the converged
// root, nothing if the orbit escapes or stalls harmlessly, and throws
// SingularRoot when it lands on (or crawls toward) a Jacobian-zero point.
inline std::optional<FoundRoot> newton_orbit(const HarmonicTrinomial& t,
                                             Complex z0, double band_lo,
                                             double band_hi,
                                             const OracleParams& params) {
  Complex z = z0;
  for (int it = 0; it < params.newton_max_iter; ++it) {
    double r = std::abs(z);
    if (!std::isfinite(r) || r > 4.0 * band_hi || r < 0.25 * band_lo) {
      return std::nullopt;
    }
    Complex fv = evaluate(t, z);
    double scale = coefficient_scale(t, r);
    double res = std::abs(fv);
    Complex fz = double(t.n) * t.a * pow_int(z, t.n - 1);
    Complex fzb = double(t.m) * t.b * pow_int(std::conj(z), t.m - 1);
    double jac = std::norm(fz) - std::norm(fzb);
    double jscale = std::norm(fz) + std::norm(fzb);
    if (res < params.newton_tol_rel * scale) {
      if (std::abs(jac) < params.singular_rel * jscale) {
        throw SingularRoot("Jacobian vanishes at a converged root near |z|=" +
                           std::to_string(r));
      }
      return FoundRoot{z, res, jac > 0.0 ? +1 : -1};
    }
    if (jscale == 0.0 || std::abs(jac) < 1e-300) return std::nullopt;
    Complex delta = (std::conj(fz) * fv - fzb * std::conj(fv)) / jac;
    double step = std::abs(delta);
    if (step < 1e-15 * std::max(1.0, r)) {
      // The orbit has stopped moving without meeting the residual target.
      // Close to a fold that is a singular root; elsewhere it is noise.
      if (res < params.stall_residual_rel * scale &&
          std::abs(jac) < params.singular_rel * jscale) {
        throw SingularRoot("Newton stalled on a near-singular point, |z|=" +
                           std::to_string(r));
      }
      return std::nullopt;
    }
    z -= delta;
  }
  return std::nullopt;
}

inline bool same_root(Complex x, Complex y, double dedup_abs) {
  return std::abs(x - y) <= dedup_abs;
}

}  // namespace detail

/// Finds every zero of f by annulus-grid Newton search. Deterministic for
/// fixed parameters. Throws SingularRoot on Jacobian-zero roots and
/// GridExhausted when densification cannot reach a consistent root set.
inline RootSet find_all_roots(const HarmonicTrinomial& t,
                              const OracleParams& params = {},
                              const Tolerances& tol = {}) {
  NormalizedTrinomial ph = normalize_phase(t);  // validates the instance
  RegionProfile prof = breakpoints(ph, tol);
  double lo = 0.9 * prof.c_break;
  double hi = 1.1 * prof.a_break;
  double dedup_abs = params.dedup_rel * prof.a_break;
  double modulus_lo = prof.c_break * (1.0 - 1e-9);
  double modulus_hi = prof.a_break * (1.0 + 1e-9);

  int base_angular = std::max(
      32, static_cast<int>(std::lround(params.angular_factor * t.n * t.n *
                                       std::max(0.05, params.grid_density))));
  int max_roots = t.n + 2 * t.m;

  RootSet out;
  for (int round = 0; round <= params.max_densify; ++round) {
    int n_ang = base_angular;
    int n_rad = params.radial_nodes;
    for (int g = 0; g < round; ++g) {
      n_ang *= params.densify_factor;
      n_rad *= 2;
    }
    std::vector<FoundRoot> accepted;
    for (int ri = 0; ri < n_rad; ++ri) {
      double r = lo + (hi - lo) * (ri + 0.5) / n_rad;
      for (int ai = 0; ai < n_ang; ++ai) {
        double theta = kTwoPi * ai / n_ang;
        auto root = detail::newton_orbit(t, std::polar(r, theta), lo, hi,
                                         params);
        if (!root) continue;
        double mod = std::abs(root->z);
        if (mod < modulus_lo || mod > modulus_hi) continue;  // escaped seed
        bool merged = false;
        for (auto& got : accepted) {
          if (detail::same_root(got.z, root->z, dedup_abs)) {
            if (root->residual < got.residual) got = *root;
            merged = true;
            break;
          }
        }
        if (!merged) accepted.push_back(*root);
      }
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const FoundRoot& x, const FoundRoot& y) {
                double mx = std::abs(x.z), my = std::abs(y.z);
                if (mx != my) return mx < my;
                return std::arg(x.z) < std::arg(y.z);
              });
    int preserving = 0, reversing = 0;
    for (const auto& root : accepted) {
      (root.jac_sign > 0 ? preserving : reversing)++;
    }
    int count = static_cast<int>(accepted.size());
    bool consistent = count <= max_roots && (count - t.n) % 2 == 0 &&
                      preserving - reversing == t.n;
    if (consistent) {
      out.roots = std::move(accepted);
      out.angular_nodes = n_ang;
      out.radial_nodes = n_rad;
      out.annulus_lo = lo;
      out.annulus_hi = hi;
      out.densify_rounds = round;
      out.preserving = preserving;
      out.reversing = reversing;
      return out;
    }
  }
  throw GridExhausted("root set failed parity/bound checks at every grid "
                      "density for n=" + std::to_string(t.n) +
                      " m=" + std::to_string(t.m));
}

/// Number of oracle roots of modulus strictly below r.
inline long long oracle_count(const RootSet& roots, double r) {
  long long k = 0;
  for (const auto& root : roots.roots) {
    if (std::abs(root.z) < r) ++k;
  }
  return k;
}

inline long long oracle_count(const HarmonicTrinomial& t, double r,
                              const OracleParams& params = {},
                              const Tolerances& tol = {}) {
  return oracle_count(find_all_roots(t, params, tol), r);
}

}  // namespace bohl

#endif  // BOHL_ORACLE_HPP
