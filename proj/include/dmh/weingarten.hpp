#pragma once

// The Grassmannian Weingarten function Wg^S(sigma) as an exact fraction in
// M and N, by the character formula and by the orthogonality relations.

#include "dmh/mnrational.hpp"
#include "dmh/ratfn.hpp"
#include "dmh/symgroup.hpp"

#include <map>
#include <vector>

namespace dmh {

struct WeingartenTable {
  int k = 0;
  std::map<Partition, MNRational> values;  // keyed by cycle type
};

inline constexpr int kCharacterMaxDegree = 8;
inline constexpr int kOrthogonalityMaxDegree = 6;

/// (1/k!) sum_lambda dim(lambda) chi^lambda(sigma) prod_{boxes} (M+c)/(N+c).
MNRational sw_character(const Permutation& sigma);
MNRational sw_character(const Partition& cycle_type);

/// Solves the orthogonality relations class by class, seeded by Wg(( )) = 1.
WeingartenTable sw_orthogonality_table(int k);
WeingartenTable sw_character_table(int k);

/// Residual of the orthogonality relation at sigma using character-formula values.
MNRational orthogonality_residual(const Permutation& sigma);

/// sum over sigma in S_k of prod_m delta(i[sigma(m)], j[m]) Wg(sigma).
MNRational convolution_integral(const std::vector<int>& i, const std::vector<int>& j);

/// Leading coefficient of Wg^S(sigma) as a polynomial in M: the unitary Wg^U.
QRatFn uw_leading(const Permutation& sigma);

/// Compares (1-t)^k (-1)^r [N^-r] Wg^S(sigma)|_{M = N/(1-t)} with the monotone
/// factorisation counts for r = 0..rmax.
bool largeN_check(const Permutation& sigma, int rmax);

/// sum_sigma Wg(sigma)(M0, N0) sigma == prod(M0 + J_i) prod(N0 + J_i)^{-1} in Q[S_k].
bool jucys_murphy_weingarten_check(int k, const Rational& m0, const Rational& n0);

}  // namespace dmh
