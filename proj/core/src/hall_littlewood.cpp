#include "ennola/hall_littlewood.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace ennola {

namespace {

// Extends shape `from` by a horizontal strip of `count` cells inside `outer`,
// recording each admissible result.
void horizontal_strips(const std::vector<int>& from, const std::vector<int>& outer, int count, std::size_t row,
                       std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (row == outer.size()) {
    if (count == 0) out.push_back(cur);
    return;
  }
  const int lo = row < from.size() ? from[row] : 0;
  int hi = outer[row];
  if (row > 0) hi = std::min(hi, row - 1 < from.size() ? from[row - 1] : 0);
  hi = std::min(hi, lo + count);
  for (int v = lo; v <= hi; ++v) {
    cur[row] = v;
    horizontal_strips(from, outer, count - (v - lo), row + 1, cur, out);
  }
  cur[row] = lo;
}

void fill(const std::vector<int>& shape, const Partition& lambda, std::size_t letter, Tableau& t,
          std::vector<Tableau>& out) {
  if (letter == static_cast<std::size_t>(lambda.length())) {
    out.push_back(t);
    return;
  }
  const auto& outer = shape;
  std::vector<int> from(outer.size(), 0);
  for (std::size_t r = 0; r < t.size(); ++r) from[r] = static_cast<int>(t[r].size());
  std::vector<int> cur = from;
  std::vector<std::vector<int>> next;
  horizontal_strips(from, outer, lambda[letter], 0, cur, next);
  for (const auto& s : next) {
    Tableau grown = t;
    for (std::size_t r = 0; r < s.size(); ++r) grown[r].insert(grown[r].end(), static_cast<std::size_t>(s[r] - from[r]), static_cast<int>(letter) + 1);
    fill(shape, lambda, letter + 1, grown, out);
  }
}

struct PairKey {
  Partition nu;
  Partition lambda;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

std::shared_mutex kf_mutex;
std::map<PairKey, PolyQU> kf_memo;

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& nu, const Partition& lambda) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("tableau shape and content have different sizes");
  std::vector<Tableau> out;
  Tableau t(static_cast<std::size_t>(nu.length()));
  fill(nu.parts(), lambda, 0, t, out);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  std::vector<bool> used(w.size(), false);
  std::size_t remaining = w.size();
  int total = 0;
  while (remaining > 0) {
    // Extract one standard subword: 1, 2, ... each found by scanning
    // leftwards cyclically from the previous position.
    std::size_t pos = w.size();
    int index = 0;
    for (int letter = 1;; ++letter) {
      bool wrapped = false;
      std::size_t found = w.size();
      std::size_t p = pos;
      for (std::size_t step = 0; step < w.size(); ++step) {
        if (p == 0) {
          p = w.size();
          wrapped = true;
        }
        --p;
        if (!used[p] && w[p] == letter) {
          found = p;
          break;
        }
      }
      if (found == w.size()) break;
      if (letter > 1 && wrapped) ++index;
      total += index;
      used[found] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

PolyQU kostka_foulkes(const Partition& nu, const Partition& lambda) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("kostka_foulkes: size mismatch");
  PairKey key{nu, lambda};
  {
    std::shared_lock lock(kf_mutex);
    auto it = kf_memo.find(key);
    if (it != kf_memo.end()) return it->second;
  }
  std::vector<PolyQU::Term> terms;
  for (const auto& t : semistandard_tableaux(nu, lambda)) {
    terms.push_back({Monomial{static_cast<std::uint32_t>(charge(reading_word(t))), 0}, Integer(1)});
  }
  PolyQU k = PolyQU::from_terms(std::move(terms));
  std::unique_lock lock(kf_mutex);
  kf_memo.emplace(std::move(key), k);
  return k;
}

PolyQU transformed_kostka(const Partition& nu, const Partition& lambda) {
  const PolyQU k = kostka_foulkes(nu, lambda);
  const long top = lambda.n_stat();
  std::vector<PolyQU::Term> terms;
  for (const auto& t : k.terms()) {
    if (static_cast<long>(t.mono.qdeg) > top) throw std::logic_error("internal error: Kostka-Foulkes degree exceeds n(lambda)");
    terms.push_back({Monomial{static_cast<std::uint32_t>(top - t.mono.qdeg), 0}, t.coeff});
  }
  return PolyQU::from_terms(std::move(terms));
}

SymFunc transformed_hl(const Partition& lambda) {
  SymFunc f(1, lambda.size(), Basis::Schur);
  for (const auto& nu : enumerate_partitions(lambda.size())) {
    if (!nu.dominates(lambda)) continue;
    PolyQU k = transformed_kostka(nu, lambda);
    if (!k.is_zero()) f.set(MultiPartition({nu}), RatQU(std::move(k)));
  }
  return f;
}

SymFunc extend_to_type(const std::function<SymFunc(const Partition&)>& base, const Type& omega) {
  if (omega.entries().empty()) throw std::invalid_argument("extend_to_type: empty type");
  SymFunc out;
  bool first = true;
  for (const auto& e : omega.entries()) {
    const SymFunc piece = base(e.lambda).adams(static_cast<unsigned>(e.d));
    for (int i = 0; i < e.m; ++i) {
      out = first ? piece : multiply(out, piece);
      first = false;
    }
  }
  return out;
}

}  // namespace ennola
