// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BOHL_TOLERANCES_HPP
#define BOHL_TOLERANCES_HPP

namespace bohl {

/// Central numeric policy for the counting pipeline. Every tolerance the
/// library compares against lives in this record so the policy can be read,
/// audited and overridden in one place.
struct Tolerances {
  /// Distance (in pivot units) below which a path value counts as an
  /// integer hit rather than a transversal crossing.
  double integer_hit = 1e-10;

  /// Relative interval width at which radius bisections stop.
  double bisect_rel = 1e-13;
  /// Hard cap on bisection steps, reached only on degenerate input.
  int bisect_max_iter = 200;

  /// |A|, |B| or |C| below this fraction of the side-length sum marks a
  /// degenerate triangle.
  double degenerate_rel = 1e-12;
  /// |B(r0)| below this fraction of scale selects the double-root case.
  double case2_rel = 1e-12;

  /// Query radii closer than this (relative) to a jump radius produce a
  /// boundary warning instead of a silent count.
  double boundary_warn_rel = 1e-9;
  /// Slack used by the closed-disk variant: radius <= r * (1 + this).
  double closed_disk_rel = 1e-12;

  /// Residual acceptance for circle roots, relative to coefficient scale.
  double circle_residual_rel = 1e-8;
  /// Angular mismatch allowed when matching congruence candidates.
  double congruence_tol = 1e-8;

  /// Base pivot shift applied by the perturbation fallback.
  double fallback_pivot_shift = 1e-6;
  /// Perturbed sweep endpoints must clear every integer by this margin.
  double fallback_endpoint_clear = 1e-5;
  /// Radii from the two perturbations agreeing within this (times
  /// max(1, r)) are accepted as one event.
  double fallback_radius_match = 1e-4;

  /// Relative clustering width when grouping coincident jump radii.
  double radius_cluster_rel = 1e-11;
};

/// Knobs of the independent numeric root finder.
struct OracleParams {
  /// Multiplies both grid axes; the CLI exposes it as --grid-density.
  double grid_density = 1.0;
  /// Angular seed count is max(32, angular_factor * n^2) * grid_density.
  int angular_factor = 8;
  /// Radial seed count before densification.
  int radial_nodes = 64;

  int newton_max_iter = 50;
  /// Residual acceptance relative to |a| r^n + |b| r^m + |c| at the root.
  double newton_tol_rel = 1e-12;
  /// Roots closer than this times the outer breakpoint merge into one.
  double dedup_rel = 1e-7;

  /// |Jacobian| below this fraction of its scale flags a singular root.
  double singular_rel = 1e-10;
  /// Stalled Newton orbits with residual below this fraction of scale are
  /// examined for singularity instead of being dropped.
  double stall_residual_rel = 1e-6;

  /// Grid growth factor applied when the root set fails parity or bound
  /// checks, and how often growth is attempted before giving up.
  int densify_factor = 4;
  int max_densify = 2;
};

}  // namespace bohl

#endif  // BOHL_TOLERANCES_HPP
