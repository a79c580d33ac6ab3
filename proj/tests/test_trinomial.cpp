// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "bohl/errors.hpp"
#include "bohl/trinomial.hpp"
#include "support.hpp"

using namespace bohl;
using bohl_test::CorpusGen;
using bohl_test::naive_eval;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("make_trinomial validates coefficients and exponents") {
  CHECK_NOTHROW(make_trinomial({1, 0}, {1, 0}, {1, 0}, 2, 1));
  CHECK_THROWS_AS(make_trinomial({0, 0}, {1, 0}, {1, 0}, 2, 1),
                  ZeroCoefficient);
  CHECK_THROWS_AS(make_trinomial({1, 0}, {0, 0}, {1, 0}, 2, 1),
                  ZeroCoefficient);
  CHECK_THROWS_AS(make_trinomial({1, 0}, {1, 0}, {0, 0}, 2, 1),
                  ZeroCoefficient);
  CHECK_THROWS_AS(make_trinomial({1e-12, 0}, {1, 0}, {1, 0}, 2, 1),
                  CoefficientOutOfRange);
  CHECK_THROWS_AS(make_trinomial({1e12, 0}, {1, 0}, {1, 0}, 2, 1),
                  CoefficientOutOfRange);
  CHECK_THROWS_AS(make_trinomial({1, 0}, {1, 0}, {1, 0}, 1, 1),
                  BadExponents);
  CHECK_THROWS_AS(make_trinomial({1, 0}, {1, 0}, {1, 0}, 2, 0),
                  BadExponents);
  CHECK_THROWS_AS(make_trinomial({1, 0}, {1, 0}, {1, 0}, 1, 2),
                  BadExponents);
  CHECK_THROWS_AS(make_trinomial({1, 0}, {1, 0}, {1, 0}, -3, -4),
                  BadExponents);
}

TEST_CASE("wrap_angle lands in [0, 2pi)") {
  CHECK_THAT(wrap_angle(0.0), WithinAbs(0.0, 0.0));
  CHECK_THAT(wrap_angle(-kPi), WithinAbs(kPi, 1e-15));
  CHECK_THAT(wrap_angle(5 * kPi), WithinAbs(kPi, 1e-14));
  CHECK_THAT(wrap_angle(-0.25), WithinAbs(kTwoPi - 0.25, 1e-15));
  for (double x : {-123.456, -1.0, 0.5, 7.9, 300.0}) {
    double w = wrap_angle(x);
    CHECK(w >= 0.0);
    CHECK(w < kTwoPi);
    CHECK_THAT(std::sin(w), WithinAbs(std::sin(x), 1e-12));
    CHECK_THAT(std::cos(w), WithinAbs(std::cos(x), 1e-12));
  }
}

TEST_CASE("angle_distance is a metric on the circle") {
  CHECK_THAT(angle_distance(0.1, 0.1), WithinAbs(0.0, 0.0));
  CHECK_THAT(angle_distance(0.0, kTwoPi), WithinAbs(0.0, 1e-15));
  CHECK_THAT(angle_distance(0.1, kTwoPi - 0.1), WithinAbs(0.2, 1e-14));
  CHECK_THAT(angle_distance(-kPi / 2, kPi / 2), WithinAbs(kPi, 1e-15));
  CorpusGen gen(11);
  for (int i = 0; i < 200; ++i) {
    double x = gen.uniform(-30.0, 30.0), y = gen.uniform(-30.0, 30.0);
    double d = angle_distance(x, y);
    CHECK(d >= 0.0);
    CHECK(d <= kPi + 1e-12);
    CHECK_THAT(angle_distance(y, x), WithinAbs(d, 1e-12));
  }
}

TEST_CASE("pow_int agrees with std::pow") {
  CorpusGen gen(12);
  for (int i = 0; i < 100; ++i) {
    Complex z = gen.coeff();
    for (int k = 1; k <= 12; ++k) {
      Complex want = std::pow(z, k);
      Complex got = pow_int(z, k);
      CHECK_THAT(std::abs(got - want),
                 WithinAbs(0.0, 1e-10 * std::abs(want)));
    }
  }
}

TEST_CASE("evaluate matches an independent evaluation") {
  CorpusGen gen(13);
  for (int i = 0; i < 100; ++i) {
    HarmonicTrinomial t = gen.next();
    for (int j = 0; j < 5; ++j) {
      Complex z = gen.coeff();
      Complex want = naive_eval(t, z);
      CHECK_THAT(std::abs(evaluate(t, z) - want),
                 WithinAbs(0.0, 1e-10 * (1.0 + std::abs(want))));
    }
  }
}

TEST_CASE("normalize_phase rotates c onto the positive axis") {
  CorpusGen gen(14);
  for (int i = 0; i < 200; ++i) {
    HarmonicTrinomial t = gen.next();
    NormalizedTrinomial norm = normalize_phase(t);
    CHECK(norm.c > 0.0);
    CHECK_THAT(norm.c, WithinRel(std::abs(t.c), 1e-14));
    CHECK_THAT(std::abs(norm.a), WithinRel(std::abs(t.a), 1e-14));
    CHECK_THAT(std::abs(norm.b), WithinRel(std::abs(t.b), 1e-14));
    CHECK(norm.alpha >= 0.0);
    CHECK(norm.alpha < kTwoPi);
    CHECK(norm.beta >= 0.0);
    CHECK(norm.beta < kTwoPi);
    CHECK_THAT(angle_distance(norm.alpha, std::arg(t.a) - norm.gamma),
               WithinAbs(0.0, 1e-12));
    // The normalized instance is exp(-i gamma) times the original, so
    // both have identical zero sets; check proportional values.
    Complex z = gen.coeff();
    Complex lhs = evaluate(norm, z);
    Complex rhs = std::polar(1.0, -norm.gamma) * evaluate(t, z);
    CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("coprime_reduce divides out the exponent gcd") {
  auto [h, d] = coprime_reduce(make_trinomial({1, 0}, {1, 0}, {1, 0}, 4, 2));
  CHECK(d == 2);
  CHECK(h.n == 2);
  CHECK(h.m == 1);

  auto [h2, d2] =
      coprime_reduce(make_trinomial({1, 0}, {1, 0}, {1, 0}, 6, 3));
  CHECK(d2 == 3);
  CHECK(h2.n == 2);
  CHECK(h2.m == 1);

  auto [h3, d3] =
      coprime_reduce(make_trinomial({1, 0}, {1, 0}, {1, 0}, 5, 3));
  CHECK(d3 == 1);
  CHECK(h3.n == 5);
  CHECK(h3.m == 3);

  NormalizedTrinomial norm =
      normalize(make_trinomial({1, 0}, {1, 0}, {1, 0}, 6, 4));
  CHECK(norm.reduced_by == 2);
  CHECK(norm.n == 3);
  CHECK(norm.m == 2);
}

TEST_CASE("roots transfer through coprime reduction by d-th powers") {
  // f(z) = h(z^d) with h the reduced instance; spot-check on values.
  HarmonicTrinomial f = make_trinomial({2, 1}, {0, -3}, {1, 1}, 6, 2);
  auto [h, d] = coprime_reduce(f);
  REQUIRE(d == 2);
  CorpusGen gen(15);
  for (int i = 0; i < 50; ++i) {
    Complex z = gen.coeff();
    Complex lhs = evaluate(f, z);
    Complex rhs = evaluate(h, z * z);
    CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-7));
  }
}

TEST_CASE("jacobian sign matches finite differences of the area map") {
  // The Jacobian of (x,y) -> (Re f, Im f) at z, compared against the
  // closed-form |n a z^(n-1)|^2 - |m b conj(z)^(m-1)|^2.
  CorpusGen gen(16);
  for (int i = 0; i < 60; ++i) {
    HarmonicTrinomial t = gen.next();
    Complex z = gen.coeff();
    double h = 1e-6 * std::max(1.0, std::abs(z));
    Complex fx = (naive_eval(t, z + Complex{h, 0}) -
                  naive_eval(t, z - Complex{h, 0})) /
                 (2 * h);
    Complex fy = (naive_eval(t, z + Complex{0, h}) -
                  naive_eval(t, z - Complex{0, h})) /
                 (2 * h);
    double numeric = fx.real() * fy.imag() - fx.imag() * fy.real();
    double closed = jacobian(t, z);
    double scale = std::abs(fx) * std::abs(fy) + 1.0;
    if (std::abs(closed) > 1e-3 * scale) {
      CHECK(std::signbit(closed) == std::signbit(numeric));
      CHECK_THAT(numeric, WithinRel(closed, 1e-3));
    }
  }
}
