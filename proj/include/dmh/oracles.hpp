#pragma once

// Brute-force ground truth: monotone factorisations weighted by hive number,
// and dessins as pairs of permutations.

#include "dmh/poly.hpp"
#include "dmh/symgroup.hpp"

#include <utility>
#include <vector>

namespace dmh {

/// (a_i, b_i) with a_i < b_i, 1-based; b_1 <= ... <= b_r and
/// (a_1 b_1) o ... o (a_r b_r) = sigma.
struct MonotoneFactorisation {
  std::vector<std::pair<int, int>> transpositions;

  int length() const { return static_cast<int>(transpositions.size()); }
  /// Number of distinct b_i.
  int hive() const;
  bool transitive(int degree) const;
  Permutation product(int degree) const;
  friend bool operator==(const MonotoneFactorisation& a, const MonotoneFactorisation& b) {
    return a.transpositions == b.transpositions;
  }
};

inline constexpr int kOracleMaxDegree = 9;
inline constexpr int kOracleMaxLength = 10;
inline constexpr int kDessinMaxEdges = 7;

/// All monotone factorisations of length r in lexicographic order.
/// Throws BoundExceeded for degree > 8 or r > 10.
std::vector<MonotoneFactorisation> enumerate_monotone(const Permutation& sigma, int r);

/// Entry r = sum over (transitive) monotone factorisations of length r of t^hive.
std::vector<QPoly> weighted_counts(const Permutation& sigma, int rmax, bool transitive_only);

/// The unique factorisation with strictly increasing b_i.
MonotoneFactorisation strictly_monotone(const Permutation& sigma);

/// (1/prod mu) sum over (alpha, beta) with alpha o beta = sigma_mu and Euler
/// genus g of t^{cycles(alpha)}. Throws BoundExceeded for |mu| > 7.
QPoly dessin_disconnected_count(const Partition& mu, int g);
/// As above, restricted to pairs generating a transitive subgroup.
QPoly dessin_connected_count(const Partition& mu, int g);

}  // namespace dmh
