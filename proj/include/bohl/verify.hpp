// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end cross-validation: the crossing count and the numeric root
// finder are computed independently, then compared on totals, on the
// multiset of root moduli, on disk counts at probe radii between
// consecutive root circles, and on the sense-preserving tally.

#ifndef BOHL_VERIFY_HPP
#define BOHL_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bohl/counter.hpp"
#include "bohl/oracle.hpp"
#include "bohl/trinomial.hpp"

namespace bohl {

struct VerificationReport {
  long long formula_total = 0;
  long long oracle_total = 0;
  bool totals_match = false;
  bool radii_match = false;
  bool midpoints_match = false;
  bool tally_match = false;
  int preserving = 0;
  int reversing = 0;
  long long dominance_claim = 0;  ///< the classical full-count value n + 2m
  bool dominance_mismatch = false;
  bool generic = true;
  bool fallback_used = false;
  bool oracle_resolved = false;
  std::vector<std::string> failures;

  bool all_pass() const {
    return totals_match && radii_match && midpoints_match && tally_match;
  }
};

namespace detail {

struct RadiusCluster {
  double radius = 0.0;
  int events = 0;
};

inline std::vector<RadiusCluster> cluster_radii(
    const std::vector<JumpEvent>& events, double rel_tol) {
  std::vector<RadiusCluster> out;
  for (const auto& e : events) {
    if (!out.empty() &&
        e.radius - out.back().radius <= rel_tol * std::max(1.0, e.radius)) {
      out.back().events++;
    } else {
      out.push_back({e.radius, 1});
    }
  }
  return out;
}

}  // namespace detail

/// Runs the crossing analysis and the numeric oracle on the same instance
/// and reports every point of agreement or disagreement. Throws only on
/// invalid input or if the oracle cannot reach a consistent root set.
inline VerificationReport verify(const HarmonicTrinomial& t,
                                 const CountOptions& opts = {}) {
  detail::Analysis an = detail::analyze(t, opts);
  VerificationReport rep;
  rep.generic = !an.pivot.two_p_star_integral;
  rep.fallback_used = an.resolved.fallback_engaged;
  rep.oracle_resolved = an.resolved.oracle_resolved;
  rep.formula_total = an.d * static_cast<long long>(an.events.size());
  rep.dominance_claim = t.n + 2ll * t.m;
  rep.dominance_mismatch = rep.dominance_claim != rep.formula_total;

  RootSet rs = find_all_roots(t, opts.oracle, opts.tol);
  rep.oracle_total = static_cast<long long>(rs.roots.size());
  rep.preserving = rs.preserving;
  rep.reversing = rs.reversing;

  rep.totals_match = rep.formula_total == rep.oracle_total;
  if (!rep.totals_match) {
    rep.failures.push_back(
        "totals differ: formula " + std::to_string(rep.formula_total) +
        ", oracle " + std::to_string(rep.oracle_total));
  }

  // Moduli: every predicted circle must carry exactly d * (events there)
  // oracle roots, and every oracle root must sit on a predicted circle.
  constexpr double kRadiusTol = 1e-6;
  auto clusters = detail::cluster_radii(an.events, kRadiusTol);
  std::vector<double> moduli;
  moduli.reserve(rs.roots.size());
  for (const auto& root : rs.roots) moduli.push_back(std::abs(root.z));
  std::sort(moduli.begin(), moduli.end());
  std::vector<bool> taken(moduli.size(), false);
  rep.radii_match = true;
  for (const auto& cl : clusters) {
    int want = an.d * cl.events;
    int got = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      if (!taken[i] && std::abs(moduli[i] - cl.radius) <=
                           kRadiusTol * std::max(1.0, cl.radius)) {
        taken[i] = true;
        ++got;
      }
    }
    if (got != want) {
      rep.radii_match = false;
      rep.failures.push_back("at radius " + std::to_string(cl.radius) +
                             ": expected " + std::to_string(want) +
                             " roots, oracle has " + std::to_string(got));
    }
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (!taken[i]) {
      rep.radii_match = false;
      rep.failures.push_back("oracle root of modulus " +
                             std::to_string(moduli[i]) +
                             " matches no predicted circle");
    }
  }

  // Disk counts at probe radii: below the first circle, between
  // consecutive circles, and beyond the last one.
  std::vector<double> probes;
  if (clusters.empty()) {
    probes.push_back(1.0);
  } else {
    probes.push_back(0.5 * clusters.front().radius);
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
      double lo = clusters[i].radius, hi = clusters[i + 1].radius;
      if (hi - lo > 1e-6 * std::max(1.0, hi)) {
        probes.push_back(0.5 * (lo + hi));
      }
    }
    probes.push_back(1.25 * clusters.back().radius);
  }
  rep.midpoints_match = true;
  for (double r : probes) {
    long long formula = count_roots_in_disk(t, r, opts).count;
    long long oracle = oracle_count(rs, r);
    if (formula != oracle) {
      rep.midpoints_match = false;
      rep.failures.push_back("disk count at r = " + std::to_string(r) +
                             ": formula " + std::to_string(formula) +
                             ", oracle " + std::to_string(oracle));
    }
  }

  // Index tally: orders of sense-preserving roots minus sense-reversing
  // ones must equal the analytic degree.
  rep.tally_match = rs.preserving - rs.reversing == t.n;
  if (!rep.tally_match) {
    rep.failures.push_back(
        "index tally " + std::to_string(rs.preserving) + " - " +
        std::to_string(rs.reversing) + " != " + std::to_string(t.n));
  }
  return rep;
}

}  // namespace bohl

#endif  // BOHL_VERIFY_HPP
