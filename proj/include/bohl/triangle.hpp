// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Triangle geometry at a fixed radius. On the circle |z| = r the three
// terms of f have moduli l1 = |a| r^n, l2 = |b| r^m and l3 = |c|; f can
// vanish on that circle only if (l1, l2, l3) close a (possibly degenerate)
// triangle. The angles omega1 (opposite l1) and omega2 (opposite l2) drive
// everything downstream through the winding weight
//
//   omega*(r) = (n*omega1 - m*omega2) / (2*pi),
//
// extended by constants outside the feasible band, and the pivot
//
//   P* = (n*(beta - pi) + m*(alpha - pi)) / (2*pi),
//
// a radius-independent offset; zeros of modulus r exist exactly when
// P* + omega*(r) or P* - omega*(r) is an integer.

#ifndef BOHL_TRIANGLE_HPP
#define BOHL_TRIANGLE_HPP

#include <algorithm>
#include <cmath>

#include "bohl/errors.hpp"
#include "bohl/tolerances.hpp"
#include "bohl/trinomial.hpp"

namespace bohl {

/// Feasibility of the side triple at a radius. DegenerateX means side X
/// equals the sum of the other two (flat triangle); InfeasibleX means side
/// X exceeds that sum, so no triangle exists and the circle is zero-free.
enum class TriangleState {
  Strict,
  DegenerateA,
  DegenerateB,
  DegenerateC,
  InfeasibleA,
  InfeasibleB,
  InfeasibleC,
};

inline bool is_degenerate(TriangleState s) {
  return s == TriangleState::DegenerateA || s == TriangleState::DegenerateB ||
         s == TriangleState::DegenerateC;
}

inline bool is_feasible(TriangleState s) {
  return s == TriangleState::Strict || is_degenerate(s);
}

struct TriangleAngles {
  double omega1 = 0.0;  ///< opposite l1 = |a| r^n
  double omega2 = 0.0;  ///< opposite l2 = |b| r^m
  double omega3 = 0.0;  ///< opposite l3 = |c|
  TriangleState state = TriangleState::Strict;
};

/// Side lengths of the comparison triangle at radius r.
struct SideLengths {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
};

inline SideLengths side_lengths(const NormalizedTrinomial& t, double r) {
  return {std::abs(t.a) * std::pow(r, t.n),
          std::abs(t.b) * std::pow(r, t.m), t.c};
}

namespace detail {

// a + b - minus with a compensated sum, so the result keeps close to full
// relative accuracy even under severe cancellation. Callers pass the two
// positive terms in either order.
inline double three_term(double a, double b, double minus) {
  if (std::abs(a) < std::abs(b)) std::swap(a, b);
  double s = a + b;
  double err = b - (s - a);
  return (s - minus) + err;
}

// Feasibility slacks of the three sides: slack_i = (sum of the other two)
// - l_i. Negative slack means side i exceeds the other two combined.
struct TriangleSlacks {
  double s1, s2, s3;
  double perimeter;
};

inline TriangleSlacks slacks(double l1, double l2, double l3) {
  return {three_term(l2, l3, l1), three_term(l1, l3, l2),
          three_term(l1, l2, l3), l1 + l2 + l3};
}

}  // namespace detail

inline TriangleState triangle_state(const NormalizedTrinomial& t, double r,
                                    const Tolerances& tol = {}) {
  auto [l1, l2, l3] = side_lengths(t, r);
  auto sl = detail::slacks(l1, l2, l3);
  double snap = tol.degenerate_rel * sl.perimeter;
  if (sl.s1 < -snap) return TriangleState::InfeasibleA;
  if (sl.s2 < -snap) return TriangleState::InfeasibleB;
  if (sl.s3 < -snap) return TriangleState::InfeasibleC;
  if (sl.s1 <= snap) return TriangleState::DegenerateA;
  if (sl.s2 <= snap) return TriangleState::DegenerateB;
  if (sl.s3 <= snap) return TriangleState::DegenerateC;
  return TriangleState::Strict;
}

/// Interior angles at radius r. Throws NotATriangle on infeasible states.
/// Each angle comes from the half-angle form
///   omega_i = 2 atan2(sqrt(s_j s_k), sqrt(perimeter * s_i))
/// over the compensated feasibility slacks, which stays accurate to a few
/// ulps even for needle-shaped triangles where the law of cosines loses
/// most of its digits.
inline TriangleAngles triangle_angles(const NormalizedTrinomial& t, double r,
                                      const Tolerances& tol = {}) {
  TriangleState state = triangle_state(t, r, tol);
  TriangleAngles out;
  out.state = state;
  switch (state) {
    case TriangleState::InfeasibleA:
    case TriangleState::InfeasibleB:
    case TriangleState::InfeasibleC:
      throw NotATriangle("side lengths do not close a triangle at r=" +
                         std::to_string(r));
    case TriangleState::DegenerateA:
      out.omega1 = kPi;
      return out;
    case TriangleState::DegenerateB:
      out.omega2 = kPi;
      return out;
    case TriangleState::DegenerateC:
      out.omega3 = kPi;
      return out;
    case TriangleState::Strict:
      break;
  }
  auto [l1, l2, l3] = side_lengths(t, r);
  auto sl = detail::slacks(l1, l2, l3);
  double s1 = std::max(sl.s1, 0.0);
  double s2 = std::max(sl.s2, 0.0);
  double s3 = std::max(sl.s3, 0.0);
  out.omega1 = 2.0 * std::atan2(std::sqrt(s2 * s3),
                                std::sqrt(sl.perimeter * s1));
  out.omega2 = 2.0 * std::atan2(std::sqrt(s1 * s3),
                                std::sqrt(sl.perimeter * s2));
  out.omega3 = 2.0 * std::atan2(std::sqrt(s1 * s2),
                                std::sqrt(sl.perimeter * s3));
  return out;
}

/// Winding weight (n*omega1 - m*omega2) / (2*pi), defined for every r > 0
/// through its continuous extension: 0 where |c| dominates, n/2 where
/// |a| r^n dominates, -m/2 where |b| r^m dominates.
inline double omega_star(const NormalizedTrinomial& t, double r,
                         const Tolerances& tol = {}) {
  switch (triangle_state(t, r, tol)) {
    case TriangleState::InfeasibleC:
    case TriangleState::DegenerateC:
      return 0.0;
    case TriangleState::InfeasibleA:
    case TriangleState::DegenerateA:
      return 0.5 * t.n;
    case TriangleState::InfeasibleB:
    case TriangleState::DegenerateB:
      return -0.5 * t.m;
    default:
      break;
  }
  TriangleAngles w = triangle_angles(t, r, tol);
  return (t.n * w.omega1 - t.m * w.omega2) / kTwoPi;
}

/// The pivot and the genericity marker. Crossing counts only ever compare
/// path values against integers, so P* is meaningful modulo the branch of
/// the coefficient arguments; the canonical branch [0, 2*pi) is used.
struct PivotData {
  double p_star = 0.0;
  /// True when 2*P* is an integer (equivalently n*beta + m*alpha lies in
  /// pi*Z): the non-generic situation in which both paths can hit an
  /// integer at the same radius and circles of breakpoint radius may carry
  /// zeros.
  bool two_p_star_integral = false;
};

inline PivotData pivot_data(const NormalizedTrinomial& t,
                            const Tolerances& tol = {}) {
  PivotData out;
  out.p_star =
      (t.n * (t.beta - kPi) + t.m * (t.alpha - kPi)) / kTwoPi;
  double twice = 2.0 * out.p_star;
  out.two_p_star_integral =
      std::abs(twice - std::round(twice)) <= 2.0 * tol.integer_hit;
  return out;
}

inline double p_star(const NormalizedTrinomial& t) {
  return pivot_data(t).p_star;
}

/// Path value P* + sign * omega*(r); sign is +1 or -1.
inline double path_value(const NormalizedTrinomial& t, const PivotData& pivot,
                         int sign, double r, const Tolerances& tol = {}) {
  return pivot.p_star + sign * omega_star(t, r, tol);
}

/// Sign of d(omega*)/dr at a radius strictly inside the feasible band:
/// negative below r0 = (m|b| / n|a|)^(1/(n-m)), positive above. Returns
/// -1, 0 or +1; throws OutsideRegion unless the triangle is strict.
inline int omega_star_derivative_sign(const NormalizedTrinomial& t, double r,
                                      const Tolerances& tol = {}) {
  if (triangle_state(t, r, tol) != TriangleState::Strict) {
    throw OutsideRegion("radius " + std::to_string(r) +
                        " is not interior to the feasible band");
  }
  auto [l1, l2, l3] = side_lengths(t, r);
  (void)l3;
  double lead = t.n * l1 - t.m * l2;
  double scale = t.n * l1 + t.m * l2;
  if (std::abs(lead) <= tol.degenerate_rel * scale) return 0;
  return lead > 0.0 ? 1 : -1;
}

}  // namespace bohl

#endif  // BOHL_TRIANGLE_HPP
