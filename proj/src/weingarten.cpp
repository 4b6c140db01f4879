#include "dmh/weingarten.hpp"

#include "dmh/error.hpp"
#include "dmh/linalg.hpp"
#include "dmh/oracles.hpp"

#include <mutex>

namespace dmh {

namespace {

std::mutex sw_mutex;
std::map<Partition, MNRational> sw_cache;

std::mutex table_mutex;
std::map<int, WeingartenTable> orth_cache;

QPoly n_plus(int c) { return QPoly(std::vector<Rational>{Rational(c), Rational(1)}); }

MNRational compute_sw(const Partition& nu) {
  const int k = nu.weight();
  if (k > kCharacterMaxDegree) throw Error(ErrorCode::BoundExceeded, "character formula is limited to k <= 8");
  if (k == 0) return MNRational(1);
  const auto lambdas = partitions_of(k);
  std::vector<PartitionData> data;
  std::map<int, int> max_mult;
  for (const auto& l : lambdas) {
    data.push_back(partition_data(l));
    std::map<int, int> mult;
    for (int c : data.back().contents) ++mult[c];
    for (const auto& [c, m] : mult) max_mult[c] = std::max(max_mult[c], m);
  }
  // Common denominator prod (N+c)^maxmult; each term contributes an M-polynomial
  // times the complementary N-factors.
  QPoly common(1);
  for (const auto& [c, m] : max_mult) common *= n_plus(c).pow(static_cast<unsigned>(m));
  BiPoly num;
  for (std::size_t idx = 0; idx < lambdas.size(); ++idx) {
    const long chi = mn_character(lambdas[idx], nu);
    if (chi == 0) continue;
    std::map<int, int> mult;
    for (int c : data[idx].contents) ++mult[c];
    QPoly cofactor(1);
    for (const auto& [c, m] : max_mult) {
      const int missing = m - (mult.count(c) ? mult[c] : 0);
      if (missing > 0) cofactor *= n_plus(c).pow(static_cast<unsigned>(missing));
    }
    BiPoly mpart(QPoly(1));
    for (int c : data[idx].contents) mpart *= BiPoly(std::vector<QPoly>{QPoly(Rational(c)), QPoly(1)});
    const Rational weight = Rational(data[idx].dimension * chi);
    num += mpart * (cofactor * weight);
  }
  const Rational kfact(factorial(static_cast<unsigned>(k)));
  return MNRational(std::move(num), BiPoly(common * kfact));
}

Permutation restrict_fixed_last(const Permutation& s) {
  std::vector<int> img(s.images().begin(), s.images().end() - 1);
  return Permutation(std::move(img));
}

}  // namespace

MNRational sw_character(const Partition& nu) {
  {
    std::lock_guard lock(sw_mutex);
    auto it = sw_cache.find(nu);
    if (it != sw_cache.end()) return it->second;
  }
  MNRational v = compute_sw(nu);
  std::lock_guard lock(sw_mutex);
  return sw_cache.emplace(nu, std::move(v)).first->second;
}

MNRational sw_character(const Permutation& sigma) { return sw_character(cycle_type(sigma)); }

WeingartenTable sw_character_table(int k) {
  WeingartenTable t;
  t.k = k;
  for (const auto& nu : partitions_of(k)) t.values.emplace(nu, sw_character(nu));
  return t;
}

WeingartenTable sw_orthogonality_table(int k) {
  if (k < 0) throw Error(ErrorCode::NegativeWeight, "negative k");
  if (k > kOrthogonalityMaxDegree) throw Error(ErrorCode::BoundExceeded, "orthogonality solve is limited to k <= 6");
  {
    std::lock_guard lock(table_mutex);
    auto it = orth_cache.find(k);
    if (it != orth_cache.end()) return it->second;
  }
  WeingartenTable table;
  table.k = k;
  if (k == 0) {
    table.values.emplace(Partition(), MNRational(1));
  } else {
    const WeingartenTable prev = sw_orthogonality_table(k - 1);
    const auto classes = partitions_of(k);
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i]] = i;
    const MNRational M = MNRational::M(), N = MNRational::N();
    Matrix<MNRational> a(classes.size(), std::vector<MNRational>(classes.size()));
    std::vector<MNRational> b(classes.size());
    const int last = k - 1;
    for (std::size_t row = 0; row < classes.size(); ++row) {
      // N Wg(s) + sum_i Wg(s o (i k)) = [s(k)=k] M Wg(s|) + sum_i [s(i)=k] Wg((s o (i k))|)
      const Permutation s = canonical_permutation(classes[row]);
      a[row][row] += N;
      for (int i = 0; i < last; ++i) {
        const Permutation si = compose(s, Permutation::transposition(k, i, last));
        a[row][index.at(cycle_type(si))] += MNRational(1);
        if (s(i) == last) b[row] += prev.values.at(cycle_type(restrict_fixed_last(si)));
      }
      if (s(last) == last) b[row] += M * prev.values.at(cycle_type(restrict_fixed_last(s)));
    }
    const auto x = solve_linear(std::move(a), std::move(b));
    for (std::size_t i = 0; i < classes.size(); ++i) table.values.emplace(classes[i], x[i]);
  }
  std::lock_guard lock(table_mutex);
  return orth_cache.emplace(k, std::move(table)).first->second;
}

MNRational orthogonality_residual(const Permutation& s) {
  const int k = s.degree();
  if (k == 0) return sw_character(s) - MNRational(1);
  const int last = k - 1;
  const MNRational M = MNRational::M(), N = MNRational::N();
  MNRational rhs;
  for (int i = 0; i < last; ++i) {
    const Permutation si = compose(s, Permutation::transposition(k, i, last));
    rhs -= sw_character(si);
    if (s(i) == last) rhs += sw_character(restrict_fixed_last(si));
  }
  if (s(last) == last) rhs += M * sw_character(restrict_fixed_last(s));
  return sw_character(s) - rhs / N;
}

MNRational convolution_integral(const std::vector<int>& i, const std::vector<int>& j) {
  if (i.size() != j.size()) throw Error(ErrorCode::LengthMismatch, "index sequences differ in length");
  const int k = static_cast<int>(i.size());
  if (k > kOrthogonalityMaxDegree) throw Error(ErrorCode::BoundExceeded, "convolution integral is limited to k <= 6");
  MNRational total;
  for (const auto& s : all_permutations(k)) {
    bool match = true;
    for (int m = 0; m < k && match; ++m) match = i[static_cast<std::size_t>(s(m))] == j[static_cast<std::size_t>(m)];
    if (match) total += sw_character(s);
  }
  return total;
}

QRatFn uw_leading(const Permutation& sigma) {
  const MNRational w = sw_character(sigma);
  if (!w.den_is_m_free()) throw Error(ErrorCode::InexactDivision, "denominator depends on M");
  if (w.is_zero()) return QRatFn();
  return QRatFn(w.num().leading(), w.den()[0]);
}

bool largeN_check(const Permutation& sigma, int rmax) {
  const int k = sigma.degree();
  const auto series = largeN_expand(sw_character(sigma), rmax);
  const auto counts = weighted_counts(sigma, rmax, false);
  const QRatFn scale(QPoly(std::vector<Rational>{Rational(1), Rational(-1)}).pow(static_cast<unsigned>(k)));
  for (int r = 0; r <= rmax; ++r) {
    QRatFn c = series[static_cast<std::size_t>(r)] * scale;
    if (r % 2) c = -c;
    if (c != QRatFn(counts[static_cast<std::size_t>(r)])) return false;
  }
  return true;
}

bool jucys_murphy_weingarten_check(int k, const Rational& m0, const Rational& n0) {
  const auto perms = all_permutations(k);
  const std::size_t n = perms.size();
  GroupElement a = ga_identity(k), b = ga_identity(k);
  for (int i = 1; i <= k; ++i) {
    GroupElement ja = jucys_murphy(i, k), jb = ja;
    ja[0] += n0;
    jb[0] += m0;
    a = ga_multiply(a, ja, k);
    b = ga_multiply(b, jb, k);
  }
  // Left multiplication by a as an n x n matrix; solve a x = b.
  Matrix<Rational> mat(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t g = 0; g < n; ++g)
      if (!is_zero(a[g])) mat[permutation_rank(compose(perms[g], perms[col]))][col] += a[g];
  const auto x = solve_linear(std::move(mat), b);
  for (std::size_t s = 0; s < n; ++s)
    if (x[s] != sw_character(perms[s]).evaluate(m0, n0)) return false;
  return true;
}

}  // namespace dmh
