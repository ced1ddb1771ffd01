#include "ennola/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace ennola {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::rectangle(int part, int count) {
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

Partition Partition::dual() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  out.reserve(static_cast<std::size_t>(parts_[0]));
  for (int c = 1; c <= parts_[0]; ++c) {
    int len = 0;
    for (int p : parts_) {
      if (p < c) break;
      ++len;
    }
    out.push_back(len);
  }
  return Partition(std::move(out));
}

long Partition::n_stat() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_[0]) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Integer Partition::z() const {
  Integer z = 1;
  const auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int j = 1; j <= m[i]; ++j) z *= Integer(static_cast<long>(i) * j);
  }
  return z;
}

int Partition::hook(int row, int col) const {
  const int arm = (*this)[static_cast<std::size_t>(row)] - col - 1;
  int leg = 0;
  for (std::size_t r = static_cast<std::size_t>(row) + 1; r < parts_.size() && parts_[r] > col; ++r) ++leg;
  return arm + leg + 1;
}

Partition Partition::scaled(int m) const {
  std::vector<int> out(parts_);
  for (int& p : out) p *= m;
  return Partition(std::move(out));
}

Partition Partition::joined(const Partition& other) const {
  std::vector<int> out(parts_);
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(std::move(out));
}

bool Partition::dominates(const Partition& other) const {
  if (size_ != other.size_) return false;
  long a = 0;
  long b = 0;
  const std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

namespace {

// Runs of equal parts as (part, count), largest part first.
std::vector<std::pair<int, int>> runs(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> out;
  for (int p : parts) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

}  // namespace

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : runs(parts_)) {
    if (!s.empty()) s += '.';
    s += std::to_string(p);
    if (c > 1) s += '^' + std::to_string(c);
  }
  return s;
}

std::string Partition::to_display() const {
  if (parts_.empty()) return "()";
  const auto r = runs(parts_);
  std::string s = "(";
  if (r.size() == parts_.size() && parts_.size() > 1) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(parts_[i]);
    }
  } else {
    for (const auto& [p, c] : r) {
      s += std::to_string(p);
      if (c > 1) s += '^' + std::to_string(c);
    }
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }
  void advance() { ++pos_; }

  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", where());
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) throw ParseError("number too large", where());
      advance();
    }
    return static_cast<int>(v);
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition_at(std::string_view text, std::size_t offset, bool allow_comma) {
  text = trim(text, offset);
  if (text.empty()) throw ParseError("empty partition", offset);
  if (text == "0") return Partition();
  if (text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
    ++offset;
  }
  Cursor cur(text, offset);
  std::vector<int> parts;
  char sep = '\0';
  while (true) {
    while (cur.peek() == ' ') cur.advance();
    const std::size_t at = cur.where();
    const int part = cur.number();
    int count = 1;
    if (cur.peek() == '^') {
      cur.advance();
      count = cur.number();
    }
    if (part <= 0) throw ParseError("partition parts must be positive", at);
    if (count <= 0) throw ParseError("exponent must be positive", at);
    parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    while (cur.peek() == ' ') cur.advance();
    if (cur.done()) break;
    const char c = cur.peek();
    if (c != '.' && !(allow_comma && c == ',')) throw ParseError(std::string("unexpected character '") + c + "'", cur.where());
    if (sep != '\0' && c != sep) throw ParseError("mixed separators", cur.where());
    sep = c;
    cur.advance();
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition parse_partition(std::string_view text) { return parse_partition_at(text, 0, true); }

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::size_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  }
  return p[static_cast<std::size_t>(n)];
}

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.size() != components_[0].size()) throw std::invalid_argument("multipartition components must have equal size");
  }
}

MultiPartition MultiPartition::dual() const {
  std::vector<Partition> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.dual());
  return MultiPartition(std::move(out));
}

long MultiPartition::n_stat() const {
  long s = 0;
  for (const auto& c : components_) s += c.n_stat();
  return s;
}

MultiPartition MultiPartition::sorted() const {
  auto c = components_;
  std::sort(c.begin(), c.end());
  return MultiPartition(std::move(c));
}

std::string MultiPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ',';
    s += components_[i].to_string();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const MultiPartition& m) { return os << m.to_string(); }

MultiPartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    comps.push_back(parse_partition_at(text.substr(start, end - start), start, false));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const auto& c : comps) {
    if (c.size() != comps[0].size()) throw ParseError("multipartition components must have equal size", 0);
  }
  return MultiPartition(std::move(comps));
}

std::vector<MultiPartition> enumerate_multipartitions(int n, int k) {
  const auto parts = enumerate_partitions(n);
  std::vector<MultiPartition> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<Partition> comps;
    comps.reserve(idx.size());
    for (auto i : idx) comps.push_back(parts[i]);
    out.emplace_back(std::move(comps));
    int pos = k - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == parts.size()) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<MultiPartition> enumerate_sorted_multipartitions(int n, int k) {
  auto parts = enumerate_partitions(n);
  std::reverse(parts.begin(), parts.end());
  std::vector<MultiPartition> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  if (k == 0) return out;
  while (true) {
    std::vector<Partition> comps;
    comps.reserve(idx.size());
    for (auto i : idx) comps.push_back(parts[i]);
    out.emplace_back(std::move(comps));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == parts.size()) --pos;
    if (pos < 0) break;
    const std::size_t v = ++idx[static_cast<std::size_t>(pos)];
    for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < idx.size(); ++j) idx[j] = v;
  }
  return out;
}

namespace {

PolyQU q_power_minus_one(unsigned e) { return PolyQU::monomial(1, e) - PolyQU(1); }

}  // namespace

PolyQU a_poly(const Partition& lambda) {
  const auto m = lambda.multiplicities();
  long shift = lambda.size() + 2 * lambda.n_stat();
  PolyQU out(1);
  for (std::size_t i = 1; i < m.size(); ++i) {
    shift -= static_cast<long>(m[i]) * (m[i] + 1) / 2;
    for (int j = 1; j <= m[i]; ++j) out *= q_power_minus_one(static_cast<unsigned>(j));
  }
  return out.shifted(static_cast<std::uint32_t>(shift));
}

PolyQU hook_poly(const Partition& lambda) {
  PolyQU out(1);
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
      out *= q_power_minus_one(static_cast<unsigned>(lambda.hook(r, c)));
    }
  }
  return out;
}

PolyQU unipotent_degree(const Partition& mu) {
  PolyQU num = PolyQU::monomial(1, static_cast<std::uint32_t>(mu.n_stat()));
  for (int i = 1; i <= mu.size(); ++i) num *= q_power_minus_one(static_cast<unsigned>(i));
  auto q = divide(num, hook_poly(mu));
  if (!q) throw std::logic_error("internal error: hook polynomial does not divide");
  return std::move(*q);
}

}  // namespace ennola
