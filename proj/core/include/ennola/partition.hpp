#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ennola/poly.hpp"

namespace ennola {

/// Raised by the text parsers; carries the offending character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Integer partition as a weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The partition (part^count).
  static Partition rectangle(int part, int count);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Conjugate partition.
  Partition dual() const;
  /// n(lambda) = sum (i-1) lambda_i.
  long n_stat() const;
  /// m[i] = number of parts equal to i, for i = 0..largest part.
  std::vector<int> multiplicities() const;
  /// Order of the centralizer of a permutation of cycle type lambda.
  Integer z() const;
  /// Hook length of the cell (row, col), 0-based.
  int hook(int row, int col) const;
  /// Parts multiplied by m.
  Partition scaled(int m) const;
  /// Multiset union of parts.
  Partition joined(const Partition& other) const;

  /// Dominance order: this >= other.
  bool dominates(const Partition& other) const;

  /// Compact text form, e.g. "2.1^2", "1^4", "5"; the empty partition is "0".
  std::string to_string() const;
  /// Display form used in tables, e.g. "(21^2)", "(3, 1)", "(1^4)".
  std::string to_display() const;

  /// Lexicographic on parts; partitions of different sizes compare by size first.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "2.1^2", "1^4", "5", "0" and the comma form "2,1,1".
Partition parse_partition(std::string_view text);
/// As parse_partition; offset is added to reported error positions.
Partition parse_partition_at(std::string_view text, std::size_t offset, bool allow_comma);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n.
std::size_t partition_count(int n);

/// k-tuple of partitions of a common size.
class MultiPartition {
 public:
  MultiPartition() = default;
  /// Throws std::invalid_argument if sizes differ.
  explicit MultiPartition(std::vector<Partition> components);

  const std::vector<Partition>& components() const { return components_; }
  std::size_t k() const { return components_.size(); }
  int size() const { return components_.empty() ? 0 : components_[0].size(); }
  const Partition& operator[](std::size_t i) const { return components_[i]; }

  MultiPartition dual() const;
  /// Sum over components of n(mu^i).
  long n_stat() const;
  /// Components sorted ascending (canonical representative of the unordered tuple).
  MultiPartition sorted() const;

  std::string to_string() const;

  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> components_;
};

std::ostream& operator<<(std::ostream& os, const MultiPartition& m);

/// Parses comma-separated components, e.g. "1^4,21^2"-style text "1^4,2.1^2,2^2".
MultiPartition parse_multipartition(std::string_view text);

/// All k-tuples of partitions of n (ordered), in lexicographic order of the
/// enumeration indices.
std::vector<MultiPartition> enumerate_multipartitions(int n, int k);

/// Unordered k-tuples (each represented with ascending components) in the
/// ascending lexicographic order used by the printed tables.
std::vector<MultiPartition> enumerate_sorted_multipartitions(int n, int k);

/// Order of the centralizer in GL_n(F_q) of a unipotent element of Jordan type lambda.
PolyQU a_poly(const Partition& lambda);

/// H_lambda(q) = prod over cells of (q^hook - 1).
PolyQU hook_poly(const Partition& lambda);

/// Degree of the unipotent character of GL_n(F_q) labelled by mu.
PolyQU unipotent_degree(const Partition& mu);

}  // namespace ennola
