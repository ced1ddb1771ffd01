#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ennola/partition.hpp"
#include "ennola/symfunc.hpp"

namespace ennola {

/// Finitely supported map (d, lambda) -> multiplicity m.
class Type {
 public:
  struct Entry {
    int d = 1;
    Partition lambda;
    int m = 1;

    friend auto operator<=>(const Entry&, const Entry&) = default;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Type() = default;
  /// Merges repeated (d, lambda) and sorts; throws on d < 1, m < 1 or empty lambda.
  explicit Type(std::vector<Entry> entries);
  /// The type {(1, mu)^1}.
  static Type of_partition(const Partition& mu);
  /// The regular semisimple type [lambda]: one entry (r, (1)) per part r.
  static Type regular(const Partition& lambda);

  const std::vector<Entry>& entries() const { return entries_; }
  int size() const { return size_; }

  /// n(omega) = sum m d n(omega^i).
  long n_stat() const;
  /// r(omega) = n + sum m |omega^i|.
  long r_stat() const;
  /// r'(omega) = ceil(n/2) + sum m |omega^i|.
  long r_prime_stat() const;
  /// Sum of multiplicities (the r of c_tau).
  long entry_count() const;

  Type dual() const;

  /// Text form "d:parts^m" joined by ";", e.g. "2:1^1;1:2.1^1".
  std::string to_string() const;

  friend auto operator<=>(const Type&, const Type&) = default;
  friend bool operator==(const Type&, const Type&) = default;

 private:
  std::vector<Entry> entries_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Type& t);

struct TypeStats {
  long n_stat;
  long r;
  long r_prime;
};

TypeStats type_stats(const Type& omega);
Type dual_type(const Type& omega);

/// Parses "d:parts^m" entries joined by ";". Within an entry a final "^m"
/// is the multiplicity; write "1:1^2^1" for (1, (1^2)) with multiplicity 1.
Type parse_type(std::string_view text);

/// c_tau from the plethystic Log expansion.
Rational c_tau(const Type& tau);

/// All types of size n, sorted.
std::vector<Type> enumerate_types(int n);

/// s_omega = prod_i s_{omega^i}(x^{d_i})^{m_i} in the Schur basis of one alphabet.
SymFunc schur_of_type(const Type& omega);

/// <s_omega, s_mu>.
Integer c_omega(const Type& omega, const Partition& mu);

/// prod_i a_{omega^i}(q^{d_i})^{m_i}.
PolyQU a_poly(const Type& tau);
/// (-1)^n a_tau(-q).
PolyQU a_prime_poly(const Type& tau);

/// k-tuple of types of a common size.
class MultiType {
 public:
  MultiType() = default;
  explicit MultiType(std::vector<Type> components);
  static MultiType of_multipartition(const MultiPartition& mu);

  const std::vector<Type>& components() const { return components_; }
  std::size_t k() const { return components_.size(); }
  int size() const { return components_.empty() ? 0 : components_[0].size(); }
  const Type& operator[](std::size_t i) const { return components_[i]; }

  long n_stat() const;
  long r_stat() const;
  long r_prime_stat() const;
  MultiType dual() const;

  /// prod_i s_{omega_i}(x_i) in the Schur basis.
  SymFunc schur() const;

  std::string to_string() const;

 private:
  std::vector<Type> components_;
};

/// Components separated by ",", each in the Type text syntax.
MultiType parse_multitype(std::string_view text);

}  // namespace ennola
