// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Harmonic trinomials f(z) = a z^n + b conj(z)^m + c with complex nonzero
// coefficients and integer exponents n > m >= 1, together with the two
// normalizations the counting pipeline relies on: a phase rotation making c
// real positive (the zero set is unchanged) and division of the exponents by
// their gcd (zeros of the original are d-th roots of zeros of the reduced
// instance).

#ifndef BOHL_TRINOMIAL_HPP
#define BOHL_TRINOMIAL_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "bohl/errors.hpp"

namespace bohl {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Smallest and largest accepted coefficient modulus. Outside this window
/// the breakpoint scales drift far enough that fixed relative tolerances
/// stop being meaningful, so construction rejects the instance up front.
inline constexpr double kMinCoefficientModulus = 1e-8;
inline constexpr double kMaxCoefficientModulus = 1e8;

/// Wraps an angle into the canonical branch [0, 2*pi).
inline double wrap_angle(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod rounding can land exactly on 2*pi
  return w;
}

/// Absolute distance from x to the nearest representative of y mod 2*pi.
inline double angle_distance(double x, double y) {
  double d = std::fmod(std::abs(x - y), kTwoPi);
  return std::min(d, kTwoPi - d);
}

/// f(z) = a z^n + b conj(z)^m + c as supplied by the caller.
struct HarmonicTrinomial {
  Complex a{1.0, 0.0};
  Complex b{1.0, 0.0};
  Complex c{1.0, 0.0};
  int n = 2;
  int m = 1;
};

/// Phase-rotated (and possibly exponent-reduced) form: c is real positive
/// and the rotation angle plus the divided-out gcd are recorded so results
/// can be mapped back to the raw instance.
struct NormalizedTrinomial {
  Complex a{1.0, 0.0};
  Complex b{1.0, 0.0};
  double c = 1.0;
  int n = 2;
  int m = 1;
  double alpha = 0.0;  ///< arg(a) in [0, 2*pi)
  double beta = 0.0;   ///< arg(b) in [0, 2*pi)
  double gamma = 0.0;  ///< phase removed from the raw coefficients
  int reduced_by = 1;  ///< exponent gcd divided out (1 if untouched)
};

namespace detail {

inline void check_coefficient(Complex v, const char* name) {
  double mod = std::abs(v);
  if (mod == 0.0) {
    throw ZeroCoefficient(std::string("coefficient ") + name + " is zero");
  }
  if (mod < kMinCoefficientModulus || mod > kMaxCoefficientModulus) {
    throw CoefficientOutOfRange(std::string("coefficient ") + name +
                                " has modulus " + std::to_string(mod) +
                                ", outside [1e-8, 1e8]");
  }
}

}  // namespace detail

/// Validates and builds an instance. Throws ZeroCoefficient,
/// CoefficientOutOfRange or BadExponents.
inline HarmonicTrinomial make_trinomial(Complex a, Complex b, Complex c,
                                        int n, int m) {
  detail::check_coefficient(a, "a");
  detail::check_coefficient(b, "b");
  detail::check_coefficient(c, "c");
  if (m < 1 || n <= m) {
    throw BadExponents("exponents must satisfy n > m >= 1, got n=" +
                       std::to_string(n) + " m=" + std::to_string(m));
  }
  return HarmonicTrinomial{a, b, c, n, m};
}

/// z^k for k >= 0. Iterated multiplication keeps full accuracy for small k;
/// for larger k the polar form |z|^k e^{i k arg z} avoids the error growth
/// of long products.
inline Complex pow_int(Complex z, int k) {
  if (k == 0) return Complex{1.0, 0.0};
  if (k <= 8) {
    Complex w = z;
    for (int i = 1; i < k; ++i) w *= z;
    return w;
  }
  return std::polar(std::pow(std::abs(z), k), k * std::arg(z));
}

inline Complex evaluate(const HarmonicTrinomial& t, Complex z) {
  return t.a * pow_int(z, t.n) + t.b * pow_int(std::conj(z), t.m) + t.c;
}

inline Complex evaluate(const NormalizedTrinomial& t, Complex z) {
  return t.a * pow_int(z, t.n) + t.b * pow_int(std::conj(z), t.m) +
         Complex{t.c, 0.0};
}

/// |a| r^n + |b| r^m + |c|; the natural magnitude against which residuals
/// and degeneracies at radius r are measured.
inline double coefficient_scale(const HarmonicTrinomial& t, double r) {
  return std::abs(t.a) * std::pow(r, t.n) +
         std::abs(t.b) * std::pow(r, t.m) + std::abs(t.c);
}

inline double coefficient_scale(const NormalizedTrinomial& t, double r) {
  return std::abs(t.a) * std::pow(r, t.n) +
         std::abs(t.b) * std::pow(r, t.m) + t.c;
}

/// Jacobian determinant of f seen as a planar map,
/// |n a z^{n-1}|^2 - |m b conj(z)^{m-1}|^2. Depends only on |z|.
inline double jacobian(const HarmonicTrinomial& t, Complex z) {
  double r = std::abs(z);
  double dz = t.n * std::abs(t.a) * std::pow(r, t.n - 1);
  double dzb = t.m * std::abs(t.b) * std::pow(r, t.m - 1);
  return dz * dz - dzb * dzb;
}

/// Rotates the instance by e^{-i arg c}: multiplying f by a unit constant
/// moves no zeros, and a real positive c pins the triangle's third side.
inline NormalizedTrinomial normalize_phase(const HarmonicTrinomial& t) {
  detail::check_coefficient(t.a, "a");
  detail::check_coefficient(t.b, "b");
  detail::check_coefficient(t.c, "c");
  if (t.m < 1 || t.n <= t.m) {
    throw BadExponents("exponents must satisfy n > m >= 1");
  }
  NormalizedTrinomial out;
  out.gamma = wrap_angle(std::arg(t.c));
  Complex rot = std::polar(1.0, -out.gamma);
  out.a = t.a * rot;
  out.b = t.b * rot;
  out.c = std::abs(t.c);
  out.n = t.n;
  out.m = t.m;
  out.alpha = wrap_angle(std::arg(out.a));
  out.beta = wrap_angle(std::arg(out.b));
  out.reduced_by = 1;
  return out;
}

/// Divides the exponents by d = gcd(n, m). With h the reduced instance,
/// f(z) = h(z^d), so zeros of f are exactly the d-th roots of zeros of h
/// and Card_f(r) = d * Card_h(r^d).
inline std::pair<HarmonicTrinomial, int> coprime_reduce(
    const HarmonicTrinomial& t) {
  int d = std::gcd(t.n, t.m);
  HarmonicTrinomial out = t;
  out.n = t.n / d;
  out.m = t.m / d;
  return {out, d};
}

inline NormalizedTrinomial coprime_reduce(const NormalizedTrinomial& t) {
  int d = std::gcd(t.n, t.m);
  NormalizedTrinomial out = t;
  out.n = t.n / d;
  out.m = t.m / d;
  out.reduced_by = t.reduced_by * d;
  return out;
}

/// Full canonical form: phase rotation followed by exponent reduction.
inline NormalizedTrinomial normalize(const HarmonicTrinomial& t) {
  return coprime_reduce(normalize_phase(t));
}

}  // namespace bohl

#endif  // BOHL_TRINOMIAL_HPP
