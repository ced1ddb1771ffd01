#include "ennola/symfunc.hpp"

#include <mutex>
#include <stdexcept>

#include "ennola/characters.hpp"
#include "ennola/parallel.hpp"

namespace ennola {

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

PartitionIndex::PartitionIndex(int n) : n_(n), parts_(enumerate_partitions(n)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
}

std::shared_ptr<const PartitionIndex> PartitionIndex::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PartitionIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const PartitionIndex>(n);
  return slot;
}

std::size_t PartitionIndex::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("partition " + p.to_string() + " has size other than " + std::to_string(n_));
  return it->second;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_same_shape(const SymFunc& a, const SymFunc& b) {
  if (a.k() != b.k()) throw std::invalid_argument("symmetric functions over different alphabet counts");
  if (a.n() != b.n()) throw std::invalid_argument("symmetric functions of different degrees");
}

}  // namespace

SymFunc::SymFunc(int k, int n, Basis basis)
    : k_(k), n_(n), basis_(basis), index_(PartitionIndex::get(n)), coeffs_(ipow(index_->size(), k)) {
  if (k < 1) throw std::invalid_argument("alphabet count must be positive");
}

SymFunc SymFunc::scalar(int k, const RatQU& c) {
  SymFunc f(k, 0, Basis::PowerSum);
  f.coeffs_[0] = c;
  return f;
}

SymFunc SymFunc::basis_element(Basis basis, const MultiPartition& mu, const RatQU& c) {
  SymFunc f(static_cast<int>(mu.k()), mu.size(), basis);
  f.set(mu, c);
  return f;
}

std::size_t SymFunc::slot(const MultiPartition& mu) const {
  if (static_cast<int>(mu.k()) != k_) throw std::invalid_argument("multipartition has wrong number of components");
  std::size_t s = 0;
  for (const auto& c : mu.components()) s = s * index_->size() + index_->index(c);
  return s;
}

MultiPartition SymFunc::key(std::size_t slot) const {
  std::vector<Partition> comps(static_cast<std::size_t>(k_));
  const std::size_t p = index_->size();
  for (int i = k_ - 1; i >= 0; --i) {
    comps[static_cast<std::size_t>(i)] = (*index_)[slot % p];
    slot /= p;
  }
  return MultiPartition(std::move(comps));
}

std::vector<std::pair<MultiPartition, RatQU>> SymFunc::terms() const {
  std::vector<std::pair<MultiPartition, RatQU>> out;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (!coeffs_[s].is_zero()) out.emplace_back(key(s), coeffs_[s]);
  }
  return out;
}

bool SymFunc::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  require_same_shape(*this, other);
  if (other.basis_ != basis_) return *this += other.to(basis_);
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (!other.coeffs_[s].is_zero()) coeffs_[s] += other.coeffs_[s];
  }
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc& SymFunc::operator*=(const RatQU& c) {
  for (auto& x : coeffs_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

SymFunc SymFunc::to(Basis target) const {
  if (target == basis_) return *this;
  const auto table = CharTable::get(n_);
  const std::size_t p = index_->size();
  SymFunc out(k_, n_, target);
  out.coeffs_ = coeffs_;
  // Transform one alphabet at a time: coefficient vectors along alphabet a
  // are multiplied by the transition matrix.
  for (int a = 0; a < k_; ++a) {
    const std::size_t stride = ipow(p, k_ - 1 - a);
    const std::size_t groups = out.coeffs_.size() / p;
    std::vector<RatQU> next(out.coeffs_.size());
    parallel_for(groups, [&](std::size_t g) {
      const std::size_t base = (g / stride) * stride * p + g % stride;
      bool any = false;
      for (std::size_t i = 0; i < p && !any; ++i) any = !out.coeffs_[base + i * stride].is_zero();
      if (!any) return;
      for (std::size_t j = 0; j < p; ++j) {
        RatQU acc;
        for (std::size_t i = 0; i < p; ++i) {
          const RatQU& c = out.coeffs_[base + i * stride];
          if (c.is_zero()) continue;
          // Schur -> power sum: s_i = sum_j chi^i_j / z_j p_j.
          // Power sum -> Schur: p_i = sum_j chi^j_i s_j.
          const long chi = target == Basis::PowerSum ? table->value(i, j) : table->value(j, i);
          if (chi == 0) continue;
          acc += chi == 1 ? c : c * RatQU(chi);
        }
        if (target == Basis::PowerSum && !acc.is_zero()) acc.scale(Rational(Integer(1), table->z(j)));
        next[base + j * stride] = std::move(acc);
      }
    });
    out.coeffs_ = std::move(next);
  }
  return out;
}

SymFunc SymFunc::adams(unsigned m) const {
  if (m == 0) throw std::invalid_argument("adams: m must be positive");
  if (basis_ != Basis::PowerSum) return to(Basis::PowerSum).adams(m);
  if (m == 1) return *this;
  SymFunc out(k_, n_ * static_cast<int>(m), Basis::PowerSum);
  std::vector<std::size_t> scaled(index_->size());
  for (std::size_t i = 0; i < index_->size(); ++i) scaled[i] = out.index_->index((*index_)[i].scaled(static_cast<int>(m)));
  const std::size_t p = index_->size();
  const std::size_t pout = out.index_->size();
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s].is_zero()) continue;
    std::size_t rest = s;
    std::size_t t = 0;
    std::size_t mult = 1;
    for (int i = 0; i < k_; ++i) {
      t += scaled[rest % p] * mult;
      rest /= p;
      mult *= pout;
    }
    out.coeffs_[t] = coeffs_[s].adams(m);
  }
  return out;
}

SymFunc SymFunc::map_coeffs(const std::function<RatQU(const RatQU&)>& fn) const {
  SymFunc out = *this;
  for (auto& c : out.coeffs_) {
    if (!c.is_zero()) c = fn(c);
  }
  return out;
}

bool SymFunc::operator==(const SymFunc& other) const {
  if (k_ != other.k_ || n_ != other.n_) return false;
  if (basis_ != other.basis_) return *this == other.to(basis_);
  return coeffs_ == other.coeffs_;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  if (a.k() != b.k()) throw std::invalid_argument("multiply: alphabet count mismatch");
  if (a.basis() != Basis::PowerSum) return multiply(a.to(Basis::PowerSum), b);
  if (b.basis() != Basis::PowerSum) return multiply(a, b.to(Basis::PowerSum));
  const int k = a.k();
  SymFunc out(k, a.n() + b.n(), Basis::PowerSum);
  const auto ia = PartitionIndex::get(a.n());
  const auto ib = PartitionIndex::get(b.n());
  const auto io = PartitionIndex::get(a.n() + b.n());
  const std::size_t pa = ia->size();
  const std::size_t pb = ib->size();
  const std::size_t po = io->size();
  std::vector<std::size_t> join(pa * pb);
  for (std::size_t i = 0; i < pa; ++i) {
    for (std::size_t j = 0; j < pb; ++j) join[i * pb + j] = io->index((*ia)[i].joined((*ib)[j]));
  }
  std::vector<std::size_t> nzb;
  for (std::size_t s = 0; s < b.dim(); ++s) {
    if (!b.at(s).is_zero()) nzb.push_back(s);
  }
  for (std::size_t sa = 0; sa < a.dim(); ++sa) {
    if (a.at(sa).is_zero()) continue;
    for (std::size_t sb : nzb) {
      std::size_t ra = sa;
      std::size_t rb = sb;
      std::size_t t = 0;
      std::size_t mult = 1;
      for (int i = 0; i < k; ++i) {
        t += join[(ra % pa) * pb + rb % pb] * mult;
        ra /= pa;
        rb /= pb;
        mult *= po;
      }
      out.at(t) += a.at(sa) * b.at(sb);
    }
  }
  return out;
}

RatQU hall_pairing(const SymFunc& a, const SymFunc& b) {
  require_same_shape(a, b);
  if (a.basis() == Basis::PowerSum && b.basis() == Basis::PowerSum) {
    const auto index = PartitionIndex::get(a.n());
    const std::size_t p = index->size();
    std::vector<Integer> z(p);
    for (std::size_t i = 0; i < p; ++i) z[i] = (*index)[i].z();
    RatQU sum;
    for (std::size_t s = 0; s < a.dim(); ++s) {
      if (a.at(s).is_zero() || b.at(s).is_zero()) continue;
      Integer w = 1;
      for (std::size_t r = s, i = 0; i < static_cast<std::size_t>(a.k()); ++i, r /= p) w *= z[r % p];
      sum += a.at(s) * b.at(s) * RatQU(w);
    }
    return sum;
  }
  const SymFunc sa = a.to(Basis::Schur);
  const SymFunc sb = b.to(Basis::Schur);
  RatQU sum;
  for (std::size_t s = 0; s < sa.dim(); ++s) {
    if (!sa.at(s).is_zero() && !sb.at(s).is_zero()) sum += sa.at(s) * sb.at(s);
  }
  return sum;
}

GradedSeries::GradedSeries(int k, int N) : k_(k), N_(N) {
  if (N < 0) throw std::invalid_argument("negative truncation degree");
  coeffs_.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) coeffs_.emplace_back(k, n, Basis::PowerSum);
}

GradedSeries GradedSeries::one(int k, int N) {
  GradedSeries s(k, N);
  s.coeffs_[0] = SymFunc::scalar(k, RatQU(1));
  return s;
}

void GradedSeries::set(int n, SymFunc f) {
  if (n < 0 || n > N_) throw std::out_of_range("series degree out of range");
  if (f.k() != k_ || f.n() != n) throw std::invalid_argument("series piece has wrong shape");
  coeffs_[static_cast<std::size_t>(n)] = std::move(f);
}

namespace {

void require_compatible(const GradedSeries& a, const GradedSeries& b) {
  if (a.k() != b.k() || a.N() != b.N()) throw std::invalid_argument("series with different alphabet count or truncation");
}

const RatQU& constant_term(const GradedSeries& f) { return f[0].at(0); }

}  // namespace

GradedSeries& GradedSeries::operator+=(const GradedSeries& other) {
  require_compatible(*this, other);
  for (int n = 0; n <= N_; ++n) (*this)[n] += other[n];
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& other) {
  require_compatible(*this, other);
  for (int n = 0; n <= N_; ++n) (*this)[n] -= other[n];
  return *this;
}

GradedSeries& GradedSeries::operator*=(const RatQU& c) {
  for (auto& f : coeffs_) f *= c;
  return *this;
}

GradedSeries GradedSeries::adams(unsigned m) const {
  GradedSeries out(k_, N_);
  for (int n = 0; n * static_cast<int>(m) <= N_; ++n) out.set(n * static_cast<int>(m), (*this)[n].adams(m));
  return out;
}

GradedSeries GradedSeries::negate_T() const {
  GradedSeries out = *this;
  for (int n = 1; n <= N_; n += 2) out[n] = -out[n];
  return out;
}

GradedSeries GradedSeries::map_coeffs(const std::function<RatQU(const RatQU&)>& fn) const {
  GradedSeries out = *this;
  for (auto& f : out.coeffs_) f = f.map_coeffs(fn);
  return out;
}

GradedSeries GradedSeries::to(Basis basis) const {
  GradedSeries out = *this;
  for (auto& f : out.coeffs_) f = f.to(basis);
  return out;
}

bool GradedSeries::operator==(const GradedSeries& other) const {
  return k_ == other.k_ && N_ == other.N_ && coeffs_ == other.coeffs_;
}

GradedSeries multiply(const GradedSeries& a, const GradedSeries& b) {
  require_compatible(a, b);
  GradedSeries out(a.k(), a.N());
  for (int n = 0; n <= a.N(); ++n) {
    SymFunc acc(a.k(), n, Basis::PowerSum);
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      acc += multiply(a[i], b[n - i]);
    }
    out.set(n, std::move(acc));
  }
  return out;
}

GradedSeries series_log(const GradedSeries& f) {
  if (!(constant_term(f) == RatQU(1))) throw std::invalid_argument("log requires constant term 1");
  GradedSeries L(f.k(), f.N());
  for (int n = 1; n <= f.N(); ++n) {
    SymFunc acc(f.k(), n, Basis::PowerSum);
    for (int j = 1; j < n; ++j) {
      if (L[j].is_zero() || f[n - j].is_zero()) continue;
      acc += multiply(L[j], f[n - j]) * RatQU(j);
    }
    acc *= RatQU(Rational(-1, n));
    acc += f[n];
    L.set(n, std::move(acc));
  }
  return L;
}

GradedSeries series_exp(const GradedSeries& g) {
  if (!constant_term(g).is_zero()) throw std::invalid_argument("exp requires constant term 0");
  GradedSeries E = GradedSeries::one(g.k(), g.N());
  for (int n = 1; n <= g.N(); ++n) {
    SymFunc acc(g.k(), n, Basis::PowerSum);
    for (int j = 1; j <= n; ++j) {
      if (g[j].is_zero() || E[n - j].is_zero()) continue;
      acc += multiply(g[j], E[n - j]) * RatQU(j);
    }
    acc *= RatQU(Rational(1, n));
    E.set(n, std::move(acc));
  }
  return E;
}

GradedSeries pleth_exp(const GradedSeries& f) {
  if (!constant_term(f).is_zero()) throw std::invalid_argument("Exp requires constant term 0");
  GradedSeries g(f.k(), f.N());
  for (int m = 1; m <= f.N(); ++m) g += f.adams(static_cast<unsigned>(m)) * RatQU(Rational(1, m));
  return series_exp(g);
}

GradedSeries pleth_log(const GradedSeries& f) {
  if (!(constant_term(f) == RatQU(1))) throw std::invalid_argument("Log requires constant term 1");
  const GradedSeries L = series_log(f);
  GradedSeries out(f.k(), f.N());
  for (int m = 1; m <= f.N(); ++m) {
    const int mu = moebius(m);
    if (mu == 0) continue;
    out += L.adams(static_cast<unsigned>(m)) * RatQU(Rational(mu, m));
  }
  return out;
}

GradedSeries series_pow_exp_of_log(const GradedSeries& f, const RatQU& e) {
  if (!(constant_term(f) == RatQU(1))) throw std::invalid_argument("power requires constant term 1");
  if (e.is_zero()) return GradedSeries::one(f.k(), f.N());
  return series_exp(series_log(f) * e);
}

}  // namespace ennola
