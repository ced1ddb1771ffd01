#pragma once

// Symmetric functions in k independent alphabets, homogeneous of a common
// degree n in every alphabet, and T-graded series of them.

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ennola/partition.hpp"
#include "ennola/rational_function.hpp"

namespace ennola {

enum class Basis { PowerSum, Schur };

/// Ordinary Moebius function.
int moebius(int n);

/// Partitions of n in enumeration order with index lookup; shared per n.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n);
  static std::shared_ptr<const PartitionIndex> get(int n);

  int n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t index(const Partition& p) const;

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
};

/// Element of the degree-(n,...,n) part of Q(q,u) x Lambda(x_1) x ... x Lambda(x_k).
///
/// Coefficients are stored densely, one slot per k-tuple of partitions of n,
/// slot = sum_i idx_i * p(n)^(k-1-i) with idx_i the enumeration index of the
/// i-th component.
class SymFunc {
 public:
  SymFunc() = default;
  SymFunc(int k, int n, Basis basis);
  /// Degree-0 element c.
  static SymFunc scalar(int k, const RatQU& c);
  /// c times the basis element indexed by mu.
  static SymFunc basis_element(Basis basis, const MultiPartition& mu, const RatQU& c = RatQU(1));

  int k() const { return k_; }
  int n() const { return n_; }
  Basis basis() const { return basis_; }
  std::size_t dim() const { return coeffs_.size(); }

  const RatQU& coeff(const MultiPartition& mu) const { return coeffs_[slot(mu)]; }
  const RatQU& at(std::size_t slot) const { return coeffs_[slot]; }
  RatQU& at(std::size_t slot) { return coeffs_[slot]; }
  void set(const MultiPartition& mu, RatQU c) { coeffs_[slot(mu)] = std::move(c); }
  std::size_t slot(const MultiPartition& mu) const;
  MultiPartition key(std::size_t slot) const;
  /// Nonzero terms in slot order.
  std::vector<std::pair<MultiPartition, RatQU>> terms() const;
  bool is_zero() const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const RatQU& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const RatQU& c) { return a *= c; }
  friend SymFunc operator*(const RatQU& c, SymFunc a) { return a *= c; }

  /// Same element expressed in the target basis.
  SymFunc to(Basis target) const;
  /// psi_m: p_r -> p_{mr}, q -> q^m, u -> u^m. Result is in the power-sum basis.
  SymFunc adams(unsigned m) const;
  /// Applies fn to every coefficient (a coefficient-ring endomorphism).
  SymFunc map_coeffs(const std::function<RatQU(const RatQU&)>& fn) const;

  bool operator==(const SymFunc& other) const;

 private:
  int k_ = 0;
  int n_ = 0;
  Basis basis_ = Basis::PowerSum;
  std::shared_ptr<const PartitionIndex> index_;
  std::vector<RatQU> coeffs_;
};

/// Product in Lambda; the result is in the power-sum basis.
SymFunc multiply(const SymFunc& a, const SymFunc& b);

/// Product pairing prod_i <,>_i with Schur functions orthonormal.
RatQU hall_pairing(const SymFunc& a, const SymFunc& b);

/// Power series sum_{n=0}^{N} f_n T^n with f_n a SymFunc of degree n.
class GradedSeries {
 public:
  GradedSeries() = default;
  /// Zero series in the power-sum basis.
  GradedSeries(int k, int N);
  /// The series 1.
  static GradedSeries one(int k, int N);

  int k() const { return k_; }
  int N() const { return N_; }
  const SymFunc& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  SymFunc& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  /// Replaces the degree-n piece; throws on degree or alphabet mismatch.
  void set(int n, SymFunc f);

  GradedSeries& operator+=(const GradedSeries& other);
  GradedSeries& operator-=(const GradedSeries& other);
  GradedSeries& operator*=(const RatQU& c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const RatQU& c) { return a *= c; }
  friend GradedSeries operator*(const RatQU& c, GradedSeries a) { return a *= c; }

  /// psi_m on every piece; degrees beyond N are dropped.
  GradedSeries adams(unsigned m) const;
  /// T -> -T.
  GradedSeries negate_T() const;
  GradedSeries map_coeffs(const std::function<RatQU(const RatQU&)>& fn) const;
  /// All pieces converted to the given basis.
  GradedSeries to(Basis basis) const;

  bool operator==(const GradedSeries& other) const;

 private:
  int k_ = 0;
  int N_ = 0;
  std::vector<SymFunc> coeffs_;
};

/// Truncated product.
GradedSeries multiply(const GradedSeries& a, const GradedSeries& b);

/// Ordinary formal logarithm; requires constant term 1.
GradedSeries series_log(const GradedSeries& f);
/// Ordinary formal exponential; requires constant term 0.
GradedSeries series_exp(const GradedSeries& f);

/// Plethystic exponential exp(sum_m psi_m(f)/m); requires constant term 0.
GradedSeries pleth_exp(const GradedSeries& f);
/// Plethystic logarithm sum_m mu(m)/m psi_m(log f); requires constant term 1.
GradedSeries pleth_log(const GradedSeries& f);

/// exp(e * log f) with ordinary log/exp; requires constant term 1.
GradedSeries series_pow_exp_of_log(const GradedSeries& f, const RatQU& e);

}  // namespace ennola
