#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ennola/partition.hpp"

namespace ennola {

/// Irreducible character value chi^lambda at the class of cycle type rho
/// (Murnaghan-Nakayama, memoized). Throws std::invalid_argument on size mismatch.
long character_value(const Partition& lambda, const Partition& rho);

/// Full character table of S_n; rows and columns follow enumerate_partitions(n).
class CharTable {
 public:
  explicit CharTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t index(const Partition& p) const;
  long value(std::size_t shape, std::size_t cls) const { return values_[shape * parts_.size() + cls]; }
  long value(const Partition& shape, const Partition& cls) const { return value(index(shape), index(cls)); }
  const Integer& z(std::size_t cls) const { return z_[cls]; }

  /// Shared immutable table for n, built on first use.
  static std::shared_ptr<const CharTable> get(int n);

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
  std::vector<long> values_;
  std::vector<Integer> z_;
};

/// <chi^{mu^1} x ... x chi^{mu^k}, 1>_{S_n}.
Integer kronecker(const MultiPartition& mu);

/// s_lambda = sum_rho z_rho^{-1} chi^lambda_rho p_rho.
std::map<Partition, Rational> schur_to_powersum(const Partition& lambda);

/// p_rho = sum_lambda chi^lambda_rho s_lambda.
std::map<Partition, Integer> powersum_to_schur(const Partition& rho);

}  // namespace ennola
