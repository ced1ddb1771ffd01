#pragma once

// Exact bivariate polynomials with integer coefficients in the variables
// q and u.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace ennola {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exact division is requested that does not exist.
class NotPolynomial : public std::runtime_error {
 public:
  NotPolynomial() : std::runtime_error("not a polynomial") {}
  explicit NotPolynomial(const std::string& what) : std::runtime_error("not a polynomial: " + what) {}
};

struct Monomial {
  std::uint32_t qdeg = 0;
  std::uint32_t udeg = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of Z[q, u].
///
/// Terms are kept sorted ascending in the lexicographic order on
/// (qdeg, udeg) and never carry a zero coefficient, so two equal
/// polynomials have identical term vectors.
class PolyQU {
 public:
  struct Term {
    Monomial mono;
    Integer coeff;

    bool operator==(const Term& other) const { return mono == other.mono && coeff == other.coeff; }
  };

  PolyQU() = default;
  PolyQU(long c);  // NOLINT(google-explicit-constructor): integers embed as constants
  PolyQU(const Integer& c);  // NOLINT(google-explicit-constructor)

  static PolyQU monomial(const Integer& c, std::uint32_t qdeg, std::uint32_t udeg = 0);
  static PolyQU q() { return monomial(1, 1, 0); }
  static PolyQU u() { return monomial(1, 0, 1); }
  /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static PolyQU from_terms(std::vector<Term> terms);
  /// Univariate polynomial in q from its coefficient list (index = degree).
  static PolyQU from_q_coeffs(std::initializer_list<long> coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{}); }
  bool is_one() const;
  /// Constant coefficient (zero polynomial gives 0).
  Integer constant_term() const;
  Integer coeff(std::uint32_t qdeg, std::uint32_t udeg = 0) const;

  int q_degree() const;  // -1 for zero
  int u_degree() const;  // -1 for zero
  int q_low_degree() const;  // -1 for zero
  /// Leading term under the lexicographic order on (qdeg, udeg).
  const Term& leading() const;

  /// Polynomial in q obtained as the coefficient of u^e.
  PolyQU u_coefficient(std::uint32_t e) const;
  /// Positive gcd of all coefficients (0 for the zero polynomial).
  Integer content() const;
  bool has_nonnegative_coefficients() const;

  PolyQU operator-() const;
  PolyQU& operator+=(const PolyQU& other);
  PolyQU& operator-=(const PolyQU& other);
  PolyQU& operator*=(const PolyQU& other);
  PolyQU& operator*=(const Integer& c);
  friend PolyQU operator+(PolyQU a, const PolyQU& b) { return a += b; }
  friend PolyQU operator-(PolyQU a, const PolyQU& b) { return a -= b; }
  friend PolyQU operator*(const PolyQU& a, const PolyQU& b);
  friend PolyQU operator*(PolyQU a, const Integer& c) { return a *= c; }
  friend PolyQU operator*(PolyQU a, long c) { return a *= Integer(c); }
  friend PolyQU operator*(long c, PolyQU a) { return a *= Integer(c); }

  PolyQU pow(unsigned e) const;
  /// Divides every coefficient by c; throws NotPolynomial if any division is inexact.
  PolyQU divide_exact(const Integer& c) const;
  /// Multiplies by q^a u^b.
  PolyQU shifted(std::uint32_t a, std::uint32_t b = 0) const;

  /// Simultaneous substitution q -> qval, u -> uval.
  PolyQU subst(const PolyQU& qval, const PolyQU& uval) const;
  /// q -> q^m, u -> u^m.
  PolyQU adams(unsigned m) const;
  /// q -> -q.
  PolyQU negate_q() const;
  /// Evaluation at integer points.
  Integer evaluate(const Integer& qval, const Integer& uval = 0) const;

  bool operator==(const PolyQU& other) const { return terms_ == other.terms_; }

  /// Human-readable form, highest terms first, e.g. "q^3 + 2*q + 1".
  std::string to_string() const;
  /// JSON array of [coeff-as-decimal-string, qdeg, udeg] in ascending canonical order.
  nlohmann::json to_json() const;
  static PolyQU from_json(const nlohmann::json& j);

 private:
  void normalize();

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyQU& p);

/// Exact quotient a / b over Z[q, u], or nullopt when b does not divide a.
std::optional<PolyQU> divide(const PolyQU& a, const PolyQU& b);

/// Greatest common divisor over Z[q, u], normalized with positive leading
/// coefficient. gcd(0, 0) = 0.
PolyQU gcd(const PolyQU& a, const PolyQU& b);

}  // namespace ennola
