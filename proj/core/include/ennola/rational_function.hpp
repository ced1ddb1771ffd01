#pragma once

#include <iosfwd>
#include <string>

#include "ennola/poly.hpp"

namespace ennola {

/// Element of the fraction field Q(q, u), stored as num/den over Z[q, u].
///
/// Canonical form: gcd(num, den) = 1 over Z[q, u] (so integer contents are
/// coprime too) and the leading coefficient of den is positive. Zero is
/// always 0/1. Equal fractions therefore have identical representations.
class RatQU {
 public:
  RatQU() : den_(1) {}
  RatQU(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQU(const Integer& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQU(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatQU(PolyQU p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQU(PolyQU num, PolyQU den);

  const PolyQU& num() const { return num_; }
  const PolyQU& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True when the denominator is an integer constant.
  bool has_constant_den() const { return den_.is_constant(); }

  RatQU operator-() const;
  RatQU& operator+=(const RatQU& other);
  RatQU& operator-=(const RatQU& other);
  RatQU& operator*=(const RatQU& other);
  RatQU& operator/=(const RatQU& other);
  friend RatQU operator+(RatQU a, const RatQU& b) { return a += b; }
  friend RatQU operator-(RatQU a, const RatQU& b) { return a -= b; }
  friend RatQU operator*(RatQU a, const RatQU& b) { return a *= b; }
  friend RatQU operator/(RatQU a, const RatQU& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error("division by zero") on zero.
  RatQU inverse() const;
  RatQU& scale(const Rational& c);

  /// q -> q^m, u -> u^m.
  RatQU adams(unsigned m) const;
  /// Simultaneous substitution in numerator and denominator.
  RatQU subst(const PolyQU& qval, const PolyQU& uval) const;
  RatQU negate_q() const;

  /// Exact polynomial value; throws NotPolynomial unless den divides num
  /// with an integral quotient.
  PolyQU to_poly() const;

  bool operator==(const RatQU& other) const { return num_ == other.num_ && den_ == other.den_; }

  std::string to_string() const;

 private:
  struct Unchecked {};
  RatQU(PolyQU num, PolyQU den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  PolyQU num_;
  PolyQU den_;
};

std::ostream& operator<<(std::ostream& os, const RatQU& r);

}  // namespace ennola
