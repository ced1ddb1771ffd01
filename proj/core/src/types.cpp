#include "ennola/types.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "ennola/hall_littlewood.hpp"

namespace ennola {

Type::Type(std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.d < 1) throw std::invalid_argument("type degree must be positive");
    if (e.m < 1) throw std::invalid_argument("type multiplicity must be positive");
    if (e.lambda.empty()) throw std::invalid_argument("type partitions must be nonempty");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.d, a.lambda) < std::tie(b.d, b.lambda); });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().d == e.d && entries_.back().lambda == e.lambda) {
      entries_.back().m += e.m;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  for (const auto& e : entries_) size_ += e.m * e.d * e.lambda.size();
}

Type Type::of_partition(const Partition& mu) { return Type({Entry{1, mu, 1}}); }

Type Type::regular(const Partition& lambda) {
  std::vector<Entry> entries;
  for (int r : lambda.parts()) entries.push_back(Entry{r, Partition{1}, 1});
  return Type(std::move(entries));
}

long Type::n_stat() const {
  long s = 0;
  for (const auto& e : entries_) s += static_cast<long>(e.m) * e.d * e.lambda.n_stat();
  return s;
}

long Type::r_stat() const {
  long s = size_;
  for (const auto& e : entries_) s += static_cast<long>(e.m) * e.lambda.size();
  return s;
}

long Type::r_prime_stat() const {
  long s = (size_ + 1) / 2;
  for (const auto& e : entries_) s += static_cast<long>(e.m) * e.lambda.size();
  return s;
}

long Type::entry_count() const {
  long s = 0;
  for (const auto& e : entries_) s += e.m;
  return s;
}

Type Type::dual() const {
  std::vector<Entry> out;
  for (const auto& e : entries_) out.push_back(Entry{e.d, e.lambda.dual(), e.m});
  return Type(std::move(out));
}

std::string Type::to_string() const {
  std::string s;
  for (const auto& e : entries_) {
    if (!s.empty()) s += ';';
    s += std::to_string(e.d) + ':' + e.lambda.to_string() + '^' + std::to_string(e.m);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Type& t) { return os << t.to_string(); }

TypeStats type_stats(const Type& omega) { return {omega.n_stat(), omega.r_stat(), omega.r_prime_stat()}; }

Type dual_type(const Type& omega) { return omega.dual(); }

namespace {

Type parse_type_at(std::string_view text, std::size_t offset) {
  std::vector<Type::Entry> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    std::string_view entry = text.substr(start, end - start);
    const std::size_t at = offset + start;
    const std::size_t colon = entry.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'd:' in type entry", at);
    int d = 0;
    std::size_t i = 0;
    while (i < colon && std::isspace(static_cast<unsigned char>(entry[i]))) ++i;
    if (i == colon) throw ParseError("expected a number", at + i);
    for (; i < colon; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(entry[i]))) throw ParseError("expected a number", at + i);
      d = d * 10 + (entry[i] - '0');
      if (d > 1000000) throw ParseError("number too large", at + i);
    }
    if (d < 1) throw ParseError("type degree must be positive", at);
    std::string_view body = entry.substr(colon + 1);
    int m = 1;
    const std::size_t caret = body.rfind('^');
    // A trailing "^m" after the last part is the multiplicity; earlier
    // carets are part exponents.
    if (caret != std::string_view::npos && body.find('.', caret) == std::string_view::npos) {
      const std::string_view tail = body.substr(caret + 1);
      if (tail.empty()) throw ParseError("expected a number", at + colon + 1 + caret + 1);
      m = 0;
      for (std::size_t j = 0; j < tail.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(tail[j]))) throw ParseError("expected a number", at + colon + 2 + caret + j);
        m = m * 10 + (tail[j] - '0');
        if (m > 1000000) throw ParseError("number too large", at + colon + 2 + caret + j);
      }
      if (m < 1) throw ParseError("type multiplicity must be positive", at + colon + 2 + caret);
      body = body.substr(0, caret);
    }
    Partition lambda = parse_partition_at(body, at + colon + 1, false);
    if (lambda.empty()) throw ParseError("type partitions must be nonempty", at + colon + 1);
    entries.push_back(Type::Entry{d, std::move(lambda), m});
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Type(std::move(entries));
}

}  // namespace

Type parse_type(std::string_view text) { return parse_type_at(text, 0); }

Rational c_tau(const Type& tau) {
  const auto& entries = tau.entries();
  if (entries.empty()) throw std::invalid_argument("c_tau: empty type");
  const int d = entries.front().d;
  for (const auto& e : entries) {
    if (e.d != d) return 0;
  }
  const long r = tau.entry_count();
  Integer num = 1;
  for (long i = 2; i < r; ++i) num *= Integer(i);
  if ((r - 1) % 2) num = -num;
  num *= moebius(d);
  Integer den = d;
  for (const auto& e : entries) {
    for (int i = 2; i <= e.m; ++i) den *= Integer(i);
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

std::vector<Type> enumerate_types(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_types: n must be positive");
  std::vector<Type::Entry> atoms;
  for (int d = 1; d <= n; ++d) {
    for (int s = 1; s * d <= n; ++s) {
      auto parts = enumerate_partitions(s);
      std::reverse(parts.begin(), parts.end());
      for (auto& p : parts) atoms.push_back(Type::Entry{d, std::move(p), 1});
    }
  }
  std::vector<Type> out;
  std::vector<Type::Entry> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (i == atoms.size()) return;
    const int w = atoms[i].d * atoms[i].lambda.size();
    for (int m = remaining / w; m >= 1; --m) {
      cur.push_back(Type::Entry{atoms[i].d, atoms[i].lambda, m});
      rec(i + 1, remaining - m * w);
      cur.pop_back();
    }
    rec(i + 1, remaining);
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

SymFunc schur_of_type(const Type& omega) {
  auto schur = [](const Partition& lambda) { return SymFunc::basis_element(Basis::Schur, MultiPartition({lambda})); };
  return extend_to_type(schur, omega).to(Basis::Schur);
}

Integer c_omega(const Type& omega, const Partition& mu) {
  if (omega.size() != mu.size()) throw std::invalid_argument("c_omega: size mismatch");
  const RatQU c = schur_of_type(omega).coeff(MultiPartition({mu}));
  if (!c.is_polynomial() || !c.num().is_constant()) throw std::logic_error("internal error: non-integral Schur coefficient");
  return c.num().constant_term();
}

PolyQU a_poly(const Type& tau) {
  PolyQU out(1);
  for (const auto& e : tau.entries()) out *= a_poly(e.lambda).adams(static_cast<unsigned>(e.d)).pow(static_cast<unsigned>(e.m));
  return out;
}

PolyQU a_prime_poly(const Type& tau) {
  PolyQU out = a_poly(tau).negate_q();
  return tau.size() % 2 ? -out : out;
}

MultiType::MultiType(std::vector<Type> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.size() != components_[0].size()) throw std::invalid_argument("multitype components must have equal size");
  }
}

MultiType MultiType::of_multipartition(const MultiPartition& mu) {
  std::vector<Type> comps;
  for (const auto& c : mu.components()) comps.push_back(Type::of_partition(c));
  return MultiType(std::move(comps));
}

long MultiType::n_stat() const {
  long s = 0;
  for (const auto& c : components_) s += c.n_stat();
  return s;
}

long MultiType::r_stat() const {
  long s = 0;
  for (const auto& c : components_) s += c.r_stat();
  return s;
}

long MultiType::r_prime_stat() const {
  long s = 0;
  for (const auto& c : components_) s += c.r_prime_stat();
  return s;
}

MultiType MultiType::dual() const {
  std::vector<Type> comps;
  for (const auto& c : components_) comps.push_back(c.dual());
  return MultiType(std::move(comps));
}

SymFunc MultiType::schur() const {
  const int k = static_cast<int>(components_.size());
  const int n = size();
  std::vector<SymFunc> single;
  for (const auto& c : components_) single.push_back(schur_of_type(c));
  SymFunc out(k, n, Basis::Schur);
  const auto index = PartitionIndex::get(n);
  const std::size_t p = index->size();
  for (std::size_t s = 0; s < out.dim(); ++s) {
    RatQU prod(1);
    std::size_t rest = s;
    for (int i = k - 1; i >= 0 && !prod.is_zero(); --i) {
      prod *= single[static_cast<std::size_t>(i)].at(rest % p);
      rest /= p;
    }
    if (!prod.is_zero()) out.at(s) = std::move(prod);
  }
  return out;
}

std::string MultiType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ',';
    s += components_[i].to_string();
  }
  return s;
}

MultiType parse_multitype(std::string_view text) {
  std::vector<Type> comps;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    comps.push_back(parse_type_at(text.substr(start, end - start), start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const auto& c : comps) {
    if (c.size() != comps[0].size()) throw ParseError("multitype components must have equal size", 0);
  }
  return MultiType(std::move(comps));
}

}  // namespace ennola
