#pragma once

// Deformed monotone Hurwitz numbers H_{g,n}(mu) and weighted dessin counts
// D_{g,n}(mu) as polynomials in t.

#include "dmh/poly.hpp"
#include "dmh/symgroup.hpp"

#include <string>
#include <vector>

namespace dmh {

enum class Family { Monotone, Dessin };

std::string family_name(Family f);
/// "monotone" or "dessin"/"dessins"; throws ParseError.
Family parse_family(const std::string& text);

struct HurwitzKey {
  Family family = Family::Monotone;
  int g = 0;
  Partition mu;

  friend bool operator<(const HurwitzKey& a, const HurwitzKey& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.g != b.g) return a.g < b.g;
    return a.mu < b.mu;
  }
  friend bool operator==(const HurwitzKey& a, const HurwitzKey& b) {
    return a.family == b.family && a.g == b.g && a.mu == b.mu;
  }
};

inline constexpr int kCharacterTableMaxWeight = 8;

/// Cut-and-join with H_{0,1}(1) = 1. Zero for g < 0.
QPoly monotone_H(int g, const Partition& mu);
/// Dessin cut-and-join seeded by D_{0,1}(1) = t. Zero for g < 0.
QPoly dessin_D(int g, const Partition& mu);
QPoly hurwitz_value(const HurwitzKey& key);

/// Evaluates keys on a pool of worker threads sharing one memo table.
std::vector<QPoly> hurwitz_values(const std::vector<HurwitzKey>& keys, int threads);

/// Three-term recursion in d for d >= 3, seeded by H_g(1) = [g=0], H_g(2) = t/2.
QPoly one_point_H(int g, int d);

/// Disconnected numbers from the character formulas. Negative g is allowed.
QPoly disconnected_table(Family family, int g, const Partition& mu);

/// Connected numbers recovered from disconnected_table by inclusion-exclusion
/// over set partitions of the parts.
QPoly connected_from_disconnected(Family family, int g, const Partition& mu);

/// Sum over all set partitions of products of cut-and-join values.
QPoly disconnected_from_connected(Family family, int g, const Partition& mu);

/// sum_i (1/m) C(m,i) C(m,i-1) t^i
QPoly narayana(int m);

/// Product of the parts times the value, as printed in the reference tables.
QPoly times_mu(const Partition& mu, const QPoly& value);

}  // namespace dmh
