// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test suite: the random instance corpus, plus
// reference implementations kept deliberately independent of the library
// code they check (different formulas, different algorithms).

#ifndef BOHL_TESTS_SUPPORT_HPP
#define BOHL_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "bohl/trinomial.hpp"

namespace bohl_test {

using bohl::Complex;
using bohl::HarmonicTrinomial;

/// Random instances with log-uniform moduli in [0.1, 10], uniform phases,
/// exponents n in [2,6], m < n, gcd(n,m) = 1.
class CorpusGen {
 public:
  explicit CorpusGen(std::uint64_t seed) : rng_(seed) {}

  HarmonicTrinomial next() {
    for (;;) {
      int n = std::uniform_int_distribution<int>(2, 6)(rng_);
      int m = std::uniform_int_distribution<int>(1, n - 1)(rng_);
      if (std::gcd(n, m) != 1) continue;
      return HarmonicTrinomial{coeff(), coeff(), coeff(), n, m};
    }
  }

  Complex coeff() {
    double mod = std::exp(std::uniform_real_distribution<double>(
        std::log(0.1), std::log(10.0))(rng_));
    double phase =
        std::uniform_real_distribution<double>(0.0, 2 * bohl::kPi)(rng_);
    return std::polar(mod, phase);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Straightforward evaluation via std::pow on polar form; shares no code
/// path with the library's evaluate.
inline Complex naive_eval(const HarmonicTrinomial& t, Complex z) {
  return t.a * std::pow(z, t.n) + t.b * std::pow(std::conj(z), t.m) + t.c;
}

/// Triangle angles by explicit coordinate construction instead of the law
/// of cosines: vertices V1 = (0,0), V2 = (l3,0), V3 placed so that
/// |V1 V3| = l2 and |V2 V3| = l1; angles read off with atan2.
struct CoordAngles {
  double w1, w2, w3;
};

inline CoordAngles angles_by_coordinates(double l1, double l2, double l3) {
  double x = (l3 * l3 + l2 * l2 - l1 * l1) / (2.0 * l3);
  double y = std::sqrt(std::max(0.0, l2 * l2 - x * x));
  CoordAngles out;
  out.w1 = std::atan2(y, x);
  out.w2 = std::atan2(y, l3 - x);
  out.w3 = bohl::kPi - out.w1 - out.w2;
  return out;
}

/// Winding number of t around the circle |z| = r, by adaptive phase
/// tracking. For a harmonic trinomial this equals the number of
/// sense-preserving roots minus sense-reversing roots inside the circle,
/// provided no root lies on it. Independent of both the crossing
/// machinery and the Newton oracle.
inline long long winding_number(const HarmonicTrinomial& t, double r) {
  int k = 256 * t.n;
  for (int attempt = 0; attempt < 8; ++attempt) {
    double total = 0.0;
    bool ok = true;
    double prev = std::arg(naive_eval(t, std::polar(r, 0.0)));
    for (int i = 1; i <= k && ok; ++i) {
      double theta = 2 * bohl::kPi * i / k;
      Complex v = naive_eval(t, std::polar(r, theta));
      if (std::abs(v) == 0.0) return 0;  // root on the circle; undefined
      double cur = std::arg(v);
      double d = cur - prev;
      while (d > bohl::kPi) d -= 2 * bohl::kPi;
      while (d < -bohl::kPi) d += 2 * bohl::kPi;
      if (std::abs(d) > 0.5 * bohl::kPi) ok = false;  // step too coarse
      total += d;
      prev = cur;
    }
    if (ok) return std::llround(total / (2 * bohl::kPi));
    k *= 4;
  }
  return std::llround(-1.0);  // unreachable for the instances tested
}

}  // namespace bohl_test

#endif  // BOHL_TESTS_SUPPORT_HPP
