#include "ennola/rational_function.hpp"

#include <ostream>
#include <stdexcept>

namespace ennola {

namespace {

PolyQU exact(const PolyQU& a, const PolyQU& b) {
  if (b.is_one()) return a;
  auto q = divide(a, b);
  if (!q) throw std::logic_error("internal error: gcd does not divide operand");
  return std::move(*q);
}

}  // namespace

RatQU::RatQU(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  canonicalize();
}

RatQU::RatQU(PolyQU num, PolyQU den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  canonicalize();
}

void RatQU::canonicalize() {
  if (num_.is_zero()) {
    den_ = PolyQU(1);
    return;
  }
  if (!den_.is_one()) {
    PolyQU g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact(num_, g);
      den_ = exact(den_, g);
    }
  }
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQU RatQU::operator-() const { return RatQU(-num_, den_, Unchecked{}); }

RatQU& RatQU::operator+=(const RatQU& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    canonicalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * other.den_ + other.num_;
    den_ = other.den_;
    canonicalize();
    return *this;
  }
  if (other.den_.is_one()) {
    num_ += other.num_ * den_;
    canonicalize();
    return *this;
  }
  const PolyQU g = gcd(den_, other.den_);
  const PolyQU b1 = exact(den_, g);
  const PolyQU d1 = exact(other.den_, g);
  num_ = num_ * d1 + other.num_ * b1;
  den_ = den_ * d1;
  canonicalize();
  return *this;
}

RatQU& RatQU::operator-=(const RatQU& other) { return *this += -other; }

RatQU& RatQU::operator*=(const RatQU& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RatQU();
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  // Cross-cancel; inputs are reduced so the product needs no further gcd.
  const PolyQU g1 = gcd(num_, other.den_);
  const PolyQU g2 = gcd(other.num_, den_);
  PolyQU n = exact(num_, g1) * exact(other.num_, g2);
  PolyQU d = exact(den_, g2) * exact(other.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatQU& RatQU::operator/=(const RatQU& other) { return *this *= other.inverse(); }

RatQU RatQU::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  RatQU r(den_, num_, Unchecked{});
  if (r.den_.leading().coeff < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatQU& RatQU::scale(const Rational& c) { return *this *= RatQU(c); }

RatQU RatQU::adams(unsigned m) const {
  // With a u-free denominator coprimality survives q -> q^m (Bezout in Q[q]).
  if (den_.u_degree() <= 0) return RatQU(num_.adams(m), den_.adams(m), Unchecked{});
  return RatQU(num_.adams(m), den_.adams(m));
}

RatQU RatQU::subst(const PolyQU& qval, const PolyQU& uval) const {
  PolyQU d = den_.subst(qval, uval);
  if (d.is_zero()) throw std::domain_error("division by zero");
  return RatQU(num_.subst(qval, uval), std::move(d));
}

RatQU RatQU::negate_q() const {
  RatQU r(num_.negate_q(), den_.negate_q(), Unchecked{});
  if (r.den_.leading().coeff < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

PolyQU RatQU::to_poly() const {
  if (den_.is_one()) return num_;
  auto q = divide(num_, den_);
  if (!q) throw NotPolynomial(to_string());
  return std::move(*q);
}

std::string RatQU::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatQU& r) { return os << r.to_string(); }

}  // namespace ennola
