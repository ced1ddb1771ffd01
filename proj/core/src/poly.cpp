#include "ennola/poly.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace ennola {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (index = degree, no trailing zeros).
// These back the gcd and exact-division routines.

using UPoly = std::vector<Integer>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer ucontent(const UPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void udiv_scalar(UPoly& a, const Integer& c) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

// r <- lc(b)^k * a mod b, with the sparse variant (one multiplication per step).
UPoly uprem(UPoly a, const UPoly& b) {
  const int db = deg(b);
  const Integer& lb = b.back();
  while (deg(a) >= db && !a.empty()) {
    const int shift = deg(a) - db;
    Integer la = a.back();
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(a[j + shift].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  return a;
}

// Exact quotient over Z, nullopt if b does not divide a.
std::optional<UPoly> udivexact(UPoly a, const UPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return UPoly{};
  if (deg(a) < deg(b)) return std::nullopt;
  const int db = deg(b);
  UPoly quot(deg(a) - db + 1);
  const Integer& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    const int shift = deg(a) - db;
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(a[j + shift].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    quot[shift] = std::move(c);
    assert(a.back() == 0);
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return quot;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used for a cheap
// coprimality test before running the exact PRS.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

__extension__ typedef unsigned __int128 Wide;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> reduce_mod(const UPoly& a) {
  std::vector<std::uint64_t> r(a.size());
  Integer t;
  const Integer p(static_cast<unsigned long>(kPrime));
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(t.get_mpz_t(), a[i].get_mpz_t(), p.get_mpz_t());
    r[i] = t.get_ui();
  }
  return r;
}

// Degree of gcd(a, b) mod p; both leading coefficients must be units mod p.
int modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto mtrim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  mtrim(a);
  mtrim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size() && !a.empty()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        const std::uint64_t s = mulmod(f, b[j]);
        a[j + shift] = a[j + shift] >= s ? a[j + shift] - s : a[j + shift] + kPrime - s;
      }
      mtrim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// gcd over Z[q]; result has positive leading coefficient.
UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) {
    if (!b.empty() && b.back() < 0)
      for (auto& x : b) x = -x;
    return b;
  }
  if (b.empty()) return ugcd(std::move(b), std::move(a));
  Integer ca = ucontent(a), cb = ucontent(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (deg(a) == 0 || deg(b) == 0) return UPoly{c};
  udiv_scalar(a, ca);
  udiv_scalar(b, cb);

  const Integer p(static_cast<unsigned long>(kPrime));
  if (!mpz_divisible_p(a.back().get_mpz_t(), p.get_mpz_t()) && !mpz_divisible_p(b.back().get_mpz_t(), p.get_mpz_t())) {
    if (modular_gcd_degree(reduce_mod(a), reduce_mod(b)) == 0) return UPoly{c};
  }

  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprem(a, b);
    a = std::move(b);
    if (!r.empty()) {
      udiv_scalar(r, ucontent(r));
      if (deg(r) == 0) return UPoly{c};
    }
    b = std::move(r);
  }
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  for (auto& x : a) x *= c;
  return a;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials as polynomials in u with coefficients in Z[q].

using BPoly = std::vector<UPoly>;

void btrim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

BPoly to_bpoly(const PolyQU& p) {
  BPoly r(p.is_zero() ? 0 : p.u_degree() + 1);
  for (const auto& t : p.terms()) {
    auto& row = r[t.mono.udeg];
    if (row.size() <= t.mono.qdeg) row.resize(t.mono.qdeg + 1);
    row[t.mono.qdeg] = t.coeff;
  }
  return r;
}

PolyQU from_bpoly(const BPoly& b) {
  std::vector<PolyQU::Term> terms;
  for (std::size_t e = 0; e < b.size(); ++e)
    for (std::size_t d = 0; d < b[e].size(); ++d)
      if (b[e][d] != 0) terms.push_back({{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(e)}, b[e][d]});
  return PolyQU::from_terms(std::move(terms));
}

UPoly bcontent(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = ugcd(std::move(g), c);
    if (deg(g) == 0 && g[0] == 1) break;
  }
  return g;
}

std::optional<BPoly> bdiv_content(const BPoly& a, const UPoly& c) {
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    auto q = udivexact(a[i], c);
    if (!q) return std::nullopt;
    r[i] = std::move(*q);
  }
  return r;
}

BPoly bprem(BPoly a, const BPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    UPoly la = a.back();
    for (auto& x : a) x = umul(x, lb);
    for (int j = 0; j <= db; ++j) {
      UPoly prod = umul(la, b[j]);
      auto& dst = a[j + shift];
      if (dst.size() < prod.size()) dst.resize(prod.size());
      for (std::size_t i = 0; i < prod.size(); ++i) dst[i] -= prod[i];
      trim(dst);
    }
    btrim(a);
  }
  return a;
}

std::optional<BPoly> bdivexact(BPoly a, const BPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return BPoly{};
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return std::nullopt;
  BPoly quot(a.size() - db);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    auto c = udivexact(a.back(), b.back());
    if (!c) return std::nullopt;
    for (int j = 0; j <= db; ++j) {
      UPoly prod = umul(*c, b[j]);
      auto& dst = a[j + shift];
      if (dst.size() < prod.size()) dst.resize(prod.size());
      for (std::size_t i = 0; i < prod.size(); ++i) dst[i] -= prod[i];
      trim(dst);
    }
    quot[shift] = std::move(*c);
    btrim(a);
  }
  if (!a.empty()) return std::nullopt;
  return quot;
}

void append_monomial(std::ostringstream& os, std::uint32_t qdeg, std::uint32_t udeg) {
  bool first = true;
  auto var = [&](const char* name, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << name;
    if (e > 1) os << '^' << e;
    first = false;
  };
  var("q", qdeg);
  var("u", udeg);
}

}  // namespace

// ---------------------------------------------------------------------------

PolyQU::PolyQU(long c) {
  if (c != 0) terms_.push_back({{}, Integer(c)});
}

PolyQU::PolyQU(const Integer& c) {
  if (c != 0) terms_.push_back({{}, c});
}

PolyQU PolyQU::monomial(const Integer& c, std::uint32_t qdeg, std::uint32_t udeg) {
  PolyQU p;
  if (c != 0) p.terms_.push_back({{qdeg, udeg}, c});
  return p;
}

PolyQU PolyQU::from_terms(std::vector<Term> terms) {
  PolyQU p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

PolyQU PolyQU::from_q_coeffs(std::initializer_list<long> coeffs) {
  std::vector<Term> terms;
  std::uint32_t d = 0;
  for (long c : coeffs) terms.push_back({{d++, 0}, Integer(c)});
  return from_terms(std::move(terms));
}

void PolyQU::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

bool PolyQU::is_one() const { return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coeff == 1; }

Integer PolyQU::constant_term() const { return coeff(0, 0); }

Integer PolyQU::coeff(std::uint32_t qdeg, std::uint32_t udeg) const {
  const Monomial m{qdeg, udeg};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int PolyQU::q_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.qdeg); }

int PolyQU::u_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.udeg));
  return d;
}

int PolyQU::q_low_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.qdeg); }

const PolyQU::Term& PolyQU::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.back();
}

PolyQU PolyQU::u_coefficient(std::uint32_t e) const {
  PolyQU r;
  for (const auto& t : terms_)
    if (t.mono.udeg == e) r.terms_.push_back({{t.mono.qdeg, 0}, t.coeff});
  return r;
}

Integer PolyQU::content() const {
  Integer g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

bool PolyQU::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

PolyQU PolyQU::operator-() const {
  PolyQU r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PolyQU& PolyQU::operator+=(const PolyQU& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->mono < j->mono)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono < i->mono) {
      out.push_back(*j++);
    } else {
      Integer c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

PolyQU& PolyQU::operator-=(const PolyQU& other) { return *this += -other; }

PolyQU& PolyQU::operator*=(const PolyQU& other) {
  *this = *this * other;
  return *this;
}

PolyQU& PolyQU::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

PolyQU operator*(const PolyQU& a, const PolyQU& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const PolyQU& single = a.terms_.size() == 1 ? a : b;
    const PolyQU& other = a.terms_.size() == 1 ? b : a;
    const auto& s = single.terms_[0];
    PolyQU r;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
      r.terms_.push_back({{t.mono.qdeg + s.mono.qdeg, t.mono.udeg + s.mono.udeg}, t.coeff * s.coeff});
    return r;
  }
  // Dense accumulation over the (small) bidegree box.
  const std::uint32_t qmax = a.terms_.back().mono.qdeg + b.terms_.back().mono.qdeg;
  const std::uint32_t umax = static_cast<std::uint32_t>(a.u_degree() + b.u_degree());
  const std::size_t width = umax + 1;
  std::vector<Integer> acc((qmax + 1) * width);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& slot = acc[(s.mono.qdeg + t.mono.qdeg) * width + s.mono.udeg + t.mono.udeg];
      mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  PolyQU r;
  for (std::size_t idx = 0; idx < acc.size(); ++idx)
    if (acc[idx] != 0)
      r.terms_.push_back({{static_cast<std::uint32_t>(idx / width), static_cast<std::uint32_t>(idx % width)}, std::move(acc[idx])});
  return r;
}

PolyQU PolyQU::pow(unsigned e) const {
  PolyQU result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PolyQU PolyQU::divide_exact(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  PolyQU r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) throw NotPolynomial("inexact integer division");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

PolyQU PolyQU::shifted(std::uint32_t a, std::uint32_t b) const {
  PolyQU r = *this;
  for (auto& t : r.terms_) {
    t.mono.qdeg += a;
    t.mono.udeg += b;
  }
  return r;
}

PolyQU PolyQU::subst(const PolyQU& qval, const PolyQU& uval) const {
  if (is_zero()) return {};
  std::vector<PolyQU> qpow{PolyQU(1)}, upow{PolyQU(1)};
  PolyQU result;
  for (const auto& t : terms_) {
    while (qpow.size() <= t.mono.qdeg) qpow.push_back(qpow.back() * qval);
    while (upow.size() <= t.mono.udeg) upow.push_back(upow.back() * uval);
    result += qpow[t.mono.qdeg] * upow[t.mono.udeg] * t.coeff;
  }
  return result;
}

PolyQU PolyQU::adams(unsigned m) const {
  if (m == 0) throw std::invalid_argument("Adams operation index must be positive");
  PolyQU r = *this;
  for (auto& t : r.terms_) {
    t.mono.qdeg *= m;
    t.mono.udeg *= m;
  }
  return r;
}

PolyQU PolyQU::negate_q() const {
  PolyQU r = *this;
  for (auto& t : r.terms_)
    if (t.mono.qdeg % 2 == 1) t.coeff = -t.coeff;
  return r;
}

Integer PolyQU::evaluate(const Integer& qval, const Integer& uval) const {
  Integer sum = 0, qp, up;
  for (const auto& t : terms_) {
    mpz_pow_ui(qp.get_mpz_t(), qval.get_mpz_t(), t.mono.qdeg);
    mpz_pow_ui(up.get_mpz_t(), uval.get_mpz_t(), t.mono.udeg);
    sum += t.coeff * qp * up;
  }
  return sum;
}

std::string PolyQU::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coeff < 0;
    Integer mag = abs(it->coeff);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool constant = it->mono == Monomial{};
    if (constant) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      append_monomial(os, it->mono.qdeg, it->mono.udeg);
    }
  }
  return os.str();
}

nlohmann::json PolyQU::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& t : terms_) arr.push_back({t.coeff.get_str(), t.mono.qdeg, t.mono.udeg});
  return arr;
}

PolyQU PolyQU::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string())
      throw std::invalid_argument("polynomial term must be [coeff-string, qdeg, udeg]");
    Integer c;
    if (c.set_str(entry[0].get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient in polynomial JSON");
    terms.push_back({{entry[1].get<std::uint32_t>(), entry[2].get<std::uint32_t>()}, c});
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const PolyQU& p) { return os << p.to_string(); }

std::optional<PolyQU> divide(const PolyQU& a, const PolyQU& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return PolyQU{};
  if (b.terms().size() == 1) {
    const auto& t = b.terms()[0];
    std::vector<PolyQU::Term> out;
    out.reserve(a.terms().size());
    for (const auto& s : a.terms()) {
      if (s.mono.qdeg < t.mono.qdeg || s.mono.udeg < t.mono.udeg) return std::nullopt;
      if (!mpz_divisible_p(s.coeff.get_mpz_t(), t.coeff.get_mpz_t())) return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      out.push_back({{s.mono.qdeg - t.mono.qdeg, s.mono.udeg - t.mono.udeg}, std::move(c)});
    }
    return PolyQU::from_terms(std::move(out));
  }
  auto q = bdivexact(to_bpoly(a), to_bpoly(b));
  if (!q) return std::nullopt;
  return from_bpoly(*q);
}

PolyQU gcd(const PolyQU& a, const PolyQU& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto normalized = [](PolyQU p) {
    if (!p.is_zero() && p.leading().coeff < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    const Integer ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return PolyQU(g);
  }

  BPoly A = to_bpoly(a), B = to_bpoly(b);
  if (A.size() == 1 && B.size() == 1) return from_bpoly(BPoly{ugcd(A[0], B[0])});

  UPoly ca = bcontent(A), cb = bcontent(B);
  UPoly c = ugcd(ca, cb);
  if (A.size() == 1 || B.size() == 1) return normalized(from_bpoly(BPoly{c}));

  A = *bdiv_content(A, ca);
  B = *bdiv_content(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    BPoly r = bprem(A, B);
    A = std::move(B);
    if (!r.empty()) {
      if (r.size() == 1) return normalized(from_bpoly(BPoly{c}));
      r = *bdiv_content(r, bcontent(r));
    }
    B = std::move(r);
  }
  for (auto& coeff : A) coeff = umul(coeff, c);
  return normalized(from_bpoly(A));
}

}  // namespace ennola
