#include "ennola/characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace ennola {

namespace {

// Beta-set of lambda with exactly `len` beads: lambda_i + len - 1 - i.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> b(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) b[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = b[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

struct MemoKey {
  Partition lambda;
  Partition rho;
  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

std::shared_mutex memo_mutex;
std::map<MemoKey, long> memo;

long mn(const Partition& lambda, const Partition& rho);

long mn_uncached(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return 1;
  const int r = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  const auto b = beta_set(lambda, len);
  long total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int target = b[i] - r;
    if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
    // Sign is (-1)^(beads strictly between target and b[i]) = (-1)^height.
    int between = 0;
    for (int x : b) {
      if (x > target && x < b[i]) ++between;
    }
    auto nb = b;
    nb[i] = target;
    const long v = mn(from_beta(std::move(nb)), rest);
    total += (between % 2 == 0) ? v : -v;
  }
  return total;
}

long mn(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return 1;
  MemoKey key{lambda, rho};
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const long v = mn_uncached(lambda, rho);
  std::unique_lock lock(memo_mutex);
  memo.emplace(std::move(key), v);
  return v;
}

}  // namespace

long character_value(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("character_value: size mismatch");
  return mn(lambda, rho);
}

CharTable::CharTable(int n) : n_(n), parts_(enumerate_partitions(n)) {
  const std::size_t p = parts_.size();
  for (std::size_t i = 0; i < p; ++i) index_.emplace(parts_[i], i);
  values_.resize(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) values_[i * p + j] = character_value(parts_[i], parts_[j]);
  }
  z_.reserve(p);
  for (const auto& rho : parts_) z_.push_back(rho.z());
}

std::size_t CharTable::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("partition " + p.to_string() + " is not of size " + std::to_string(n_));
  return it->second;
}

std::shared_ptr<const CharTable> CharTable::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_shared<const CharTable>(n);
  return slot;
}

Integer kronecker(const MultiPartition& mu) {
  const int n = mu.size();
  for (const auto& c : mu.components()) {
    if (c.size() != n) throw std::invalid_argument("kronecker: size mismatch");
  }
  const auto table = CharTable::get(n);
  std::vector<std::size_t> rows;
  for (const auto& c : mu.components()) rows.push_back(table->index(c));
  Rational sum = 0;
  for (std::size_t cls = 0; cls < table->partitions().size(); ++cls) {
    Integer prod = 1;
    for (auto r : rows) prod *= table->value(r, cls);
    sum += Rational(prod) / Rational(table->z(cls));
  }
  if (sum.get_den() != 1) throw std::logic_error("internal error: non-integral Kronecker coefficient");
  return sum.get_num();
}

std::map<Partition, Rational> schur_to_powersum(const Partition& lambda) {
  const auto table = CharTable::get(lambda.size());
  const std::size_t row = table->index(lambda);
  std::map<Partition, Rational> out;
  for (std::size_t cls = 0; cls < table->partitions().size(); ++cls) {
    const long v = table->value(row, cls);
    if (v == 0) continue;
    Rational c(Integer(v), table->z(cls));
    c.canonicalize();
    out.emplace(table->partitions()[cls], c);
  }
  return out;
}

std::map<Partition, Integer> powersum_to_schur(const Partition& rho) {
  const auto table = CharTable::get(rho.size());
  const std::size_t cls = table->index(rho);
  std::map<Partition, Integer> out;
  for (std::size_t row = 0; row < table->partitions().size(); ++row) {
    const long v = table->value(row, cls);
    if (v != 0) out.emplace(table->partitions()[row], Integer(v));
  }
  return out;
}

}  // namespace ennola
