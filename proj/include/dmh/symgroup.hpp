#pragma once

// Permutations in one-line notation, partitions with Young-diagram data,
// irreducible characters and small group-algebra computations.

#include "dmh/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dmh {

class Permutation {
 public:
  /// The empty permutation of degree 0.
  Permutation() = default;
  /// images[i] = sigma(i+1) - 1; throws ParseError unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);
  /// Transposition of the 0-based points a and b.
  static Permutation transposition(int k, int a, int b);
  /// Product of disjoint cycles given with 0-based labels.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int k);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  int cycle_count() const;
  bool is_identity() const;
  /// Cycles with 0-based labels, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  /// 1-based cycle notation with fixed points: "(1 3)(2)"; "( )" for degree 0.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

/// x -> a(b(x)); throws DegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Reads "(1 2 3)(4 5)" with 1-based labels. Labels inside a cycle may be
/// separated by spaces or commas; without separators each digit is a label.
/// degree < 0 infers the degree from the largest label.
Permutation parse_cycles(const std::string& text, int degree = -1);

class Partition {
 public:
  Partition() = default;
  /// Sorts descending; throws NegativeWeight on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }
  /// Product of the parts.
  Integer product() const;
  /// "(3,2,1)"; "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Parses "3,2,1" or "(3,2,1)" or "[3,2,1]".
Partition parse_partition(const std::string& text);

Partition cycle_type(const Permutation& sigma);
/// A fixed permutation of cycle type mu: cycles laid out left to right on 1..|mu|.
Permutation canonical_permutation(const Partition& mu);

/// All partitions of k in reverse lexicographic order; throws NegativeWeight.
std::vector<Partition> partitions_of(int k);

struct PartitionData {
  Integer dimension;
  std::vector<int> contents;  // row by row, left to right
};
PartitionData partition_data(const Partition& lambda);

/// chi^lambda at class mu by the Murnaghan-Nakayama rule (memoized, thread safe).
long mn_character(const Partition& lambda, const Partition& mu);

/// z_mu = prod i^{m_i} m_i!
Integer z_mu(const Partition& mu);
/// |C_mu| = k!/z_mu
Integer class_size(const Partition& mu);

using ClassVector = std::map<Partition, Rational>;

/// Every permutation of degree k, in lexicographic order of images.
std::vector<Permutation> all_permutations(int k);
/// Position of sigma in all_permutations(sigma.degree()).
std::size_t permutation_rank(const Permutation& sigma);

/// Element of the group algebra of S_k, coefficients indexed by permutation_rank.
using GroupElement = std::vector<Rational>;

GroupElement ga_identity(int k);
GroupElement ga_multiply(const GroupElement& a, const GroupElement& b, int k);
/// Jucys-Murphy element J_i = (1 i) + ... + (i-1 i), i 1-based.
GroupElement jucys_murphy(int i, int k);

/// Checks prod_i (x + J_i) = sum_sigma x^{cycles(sigma)} sigma for x = 0..xmax.
/// Throws DegreeTooLarge for k > 6.
bool jucys_cycle_identity_check(int k, int xmax);

}  // namespace dmh
