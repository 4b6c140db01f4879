#pragma once

// Exact real-root isolation by Sturm sequences, decimal refinement, and the
// interlacing predicate used by the conjecture scans.

#include "dmh/hurwitz.hpp"
#include "dmh/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dmh {

struct SturmChain {
  std::vector<QPoly> polys;  // polys[0] is the square-free part
};

/// Closed box [low, high] when low == high, otherwise the half-open (low, high].
struct RootBox {
  Rational low;
  Rational high;
  int multiplicity = 1;

  bool exact() const { return low == high; }
};

/// Yun decomposition: (f_i, i) with P = c prod f_i^i, each f_i square-free.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);
QPoly squarefree_part(const QPoly& p);

SturmChain sturm_chain(const QPoly& p);
/// Sign changes of the chain at x.
int sign_variations(const SturmChain& chain, const Rational& x);
/// Distinct real roots in (a, b].
int count_roots(const SturmChain& chain, const Rational& a, const Rational& b);
/// Distinct real roots on the whole line.
int count_real_roots(const SturmChain& chain);

bool is_real_rooted(const QPoly& p);

/// Sorted, pairwise-disjoint boxes; the roots 0 and -1 get exact boxes.
std::vector<RootBox> isolate_real_roots(const QPoly& p);

/// Correctly rounded decimal of the root of p in box.
std::string refine_root(const QPoly& p, const RootBox& box, int digits);

/// Roots repeated by multiplicity, ascending, as refined decimals.
std::vector<std::string> real_root_decimals(const QPoly& p, int digits);

struct InterlaceVerdict {
  bool weak = false;    // b1 <= a1 <= b2 <= ... <= an <= b(n+1)
  bool strict = false;  // every inequality strict
};

/// P of degree n against Q of degree n + 1; throws NotRealRooted or DegreeGap.
InterlaceVerdict interlace_verdict(const QPoly& p, const QPoly& q);
bool interlaces(const QPoly& p, const QPoly& q);

struct ScanChecks {
  bool real = true;
  bool interlace = true;
};

struct SuccessorResult {
  Partition successor;
  bool weak = false;
  bool strict = false;
};

struct ScanEntry {
  HurwitzKey key;
  QPoly value;
  bool zero = false;         // vanishing value, nothing to check
  bool real_rooted = true;
  std::vector<SuccessorResult> successors;
  std::vector<RootBox> boxes;  // certificate

  bool passed() const;
};

struct ScanReport {
  std::vector<ScanEntry> entries;  // sorted by key
  int checks = 0;
  std::vector<std::size_t> failures;  // indices into entries

  bool passed() const { return failures.empty(); }
};

/// Every mu with n(mu) <= n_max and |mu| <= weight_max for each g in genera;
/// interlacing is checked against all n successors mu + e_i.
ScanReport conjecture_scan(Family family, const std::vector<int>& genera, int n_max, int weight_max,
                           ScanChecks checks, int threads = 1);

struct RootTableRow {
  int g = 0;
  std::vector<std::string> roots;
};

struct RootTable {
  Partition mu;
  int digits = 0;
  std::vector<RootTableRow> rows;
  std::vector<Rational> limits;  // -(d-1-j)/j for j = 1..d-2, then 0
};

RootTable largeg_root_table(const std::vector<int>& genera, const Partition& mu, int digits, int threads = 1);

}  // namespace dmh
