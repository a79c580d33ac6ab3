// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BOHL_ERRORS_HPP
#define BOHL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bohl {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// One of a, b, c is exactly zero; the function is not a trinomial.
class ZeroCoefficient : public Error {
 public:
  using Error::Error;
};

/// A coefficient modulus lies outside the supported window [1e-8, 1e8].
class CoefficientOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Exponents violate n > m >= 1.
class BadExponents : public Error {
 public:
  using Error::Error;
};

/// The side lengths at the requested radius do not close a triangle.
class NotATriangle : public Error {
 public:
  using Error::Error;
};

/// The radius is outside the strict-triangle region of the instance.
class OutsideRegion : public Error {
 public:
  using Error::Error;
};

/// A sign-change bracket for a breakpoint could not be established.
class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// The counting routine was handed exponents with gcd(n, m) > 1.
class NonCoprime : public Error {
 public:
  using Error::Error;
};

/// No candidate angle on the circle survived the congruence and residual
/// filters; callers should fall back to the numeric root finder.
class NoCandidate : public Error {
 public:
  using Error::Error;
};

/// The two pivot perturbations disagree and oracle arbitration is disabled.
class FallbackDisagreement : public Error {
 public:
  using Error::Error;
};

/// A root with (numerically) vanishing Jacobian was found. Such instances
/// sit on the boundary of the method's scope and are reported, not solved.
class SingularRoot : public Error {
 public:
  using Error::Error;
};

/// Densifying the seed grid twice still produced an inconsistent root set.
class GridExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace bohl

#endif  // BOHL_ERRORS_HPP
