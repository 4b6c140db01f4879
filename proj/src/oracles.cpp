#include "dmh/oracles.hpp"

#include "dmh/error.hpp"

#include <numeric>

namespace dmh {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int classes;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), classes(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[static_cast<std::size_t>(a)] = b;
    --classes;
  }
};

void check_bounds(const Permutation& sigma, int r) {
  if (sigma.degree() > kOracleMaxDegree)
    throw Error(ErrorCode::BoundExceeded, "oracle degree " + std::to_string(sigma.degree()) + " > " + std::to_string(kOracleMaxDegree));
  if (r > kOracleMaxLength) throw Error(ErrorCode::BoundExceeded, "oracle length " + std::to_string(r) + " > 10");
}

// Depth-first search over monotone sequences. rem is the permutation still to
// be produced by the remaining transpositions: rem_j = tau_j o rem_{j-1}.
class MonotoneSearch {
 public:
  MonotoneSearch(const Permutation& sigma, int r, bool strict) : k_(sigma.degree()), r_(r), strict_(strict) {
    rem_ = sigma.images();
  }

  template <class Visit>
  void run(Visit&& visit) {
    path_.clear();
    dfs(1, visit);
  }

 private:
  int cycles() const {
    int c = 0;
    std::vector<char> seen(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++c;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = rem_[static_cast<std::size_t>(j)])
        seen[static_cast<std::size_t>(j)] = 1;
    }
    return c;
  }

  template <class Visit>
  void dfs(int bmin, Visit& visit) {
    const int left = r_ - static_cast<int>(path_.size());
    const int need = k_ - cycles();
    if (need > left || (left - need) % 2 != 0) return;
    if (left == 0) {
      visit(path_);
      return;
    }
    for (int a = 1; a < k_; ++a) {
      for (int b = std::max(a + 1, bmin); b <= k_; ++b) {
        // rem <- (a b) o rem: swap the values a-1 and b-1 wherever they occur.
        apply(a - 1, b - 1);
        path_.emplace_back(a, b);
        dfs(strict_ ? b + 1 : b, visit);
        path_.pop_back();
        apply(a - 1, b - 1);
      }
    }
  }

  void apply(int x, int y) {
    for (auto& v : rem_) {
      if (v == x)
        v = y;
      else if (v == y)
        v = x;
    }
  }

  int k_;
  int r_;
  bool strict_;
  std::vector<int> rem_;
  std::vector<std::pair<int, int>> path_;
};

int hive_of(const std::vector<std::pair<int, int>>& path) {
  int h = 0;
  for (std::size_t i = 0; i < path.size(); ++i)
    if (i == 0 || path[i].second != path[i - 1].second) ++h;
  return h;
}

bool transitive_of(const std::vector<std::pair<int, int>>& path, int k) {
  if (k <= 1) return true;
  UnionFind uf(k);
  for (const auto& [a, b] : path) uf.unite(a - 1, b - 1);
  return uf.classes == 1;
}

}  // namespace

int MonotoneFactorisation::hive() const { return hive_of(transpositions); }

bool MonotoneFactorisation::transitive(int degree) const { return transitive_of(transpositions, degree); }

Permutation MonotoneFactorisation::product(int degree) const {
  Permutation p = Permutation::identity(degree);
  for (const auto& [a, b] : transpositions) p = compose(p, Permutation::transposition(degree, a - 1, b - 1));
  return p;
}

std::vector<MonotoneFactorisation> enumerate_monotone(const Permutation& sigma, int r) {
  check_bounds(sigma, r);
  std::vector<MonotoneFactorisation> out;
  if (r < 0) return out;
  MonotoneSearch search(sigma, r, false);
  search.run([&](const std::vector<std::pair<int, int>>& path) { out.push_back({path}); });
  return out;
}

std::vector<QPoly> weighted_counts(const Permutation& sigma, int rmax, bool transitive_only) {
  check_bounds(sigma, rmax);
  std::vector<QPoly> out;
  const int k = sigma.degree();
  for (int r = 0; r <= rmax; ++r) {
    std::vector<long> by_hive(static_cast<std::size_t>(r) + 1, 0);
    MonotoneSearch search(sigma, r, false);
    search.run([&](const std::vector<std::pair<int, int>>& path) {
      if (transitive_only && !transitive_of(path, k)) return;
      ++by_hive[static_cast<std::size_t>(hive_of(path))];
    });
    std::vector<Rational> c;
    for (long v : by_hive) c.emplace_back(v);
    out.emplace_back(std::move(c));
  }
  return out;
}

MonotoneFactorisation strictly_monotone(const Permutation& sigma) {
  const int r = sigma.degree() - sigma.cycle_count();
  MonotoneFactorisation f;
  bool found = false;
  MonotoneSearch search(sigma, r, true);
  search.run([&](const std::vector<std::pair<int, int>>& path) {
    if (!found) f.transpositions = path;
    found = true;
  });
  return f;
}

namespace {

QPoly dessin_count(const Partition& mu, int g, bool connected) {
  const int d = mu.weight();
  if (d > kDessinMaxEdges) throw Error(ErrorCode::BoundExceeded, "dessin oracle is limited to |mu| <= 7");
  const int target = d + 2 - 2 * g - mu.length();
  const Permutation s0 = canonical_permutation(mu);
  std::vector<long> by_power(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& alpha : all_permutations(d)) {
    const Permutation beta = compose(alpha.inverse(), s0);
    const int ca = alpha.cycle_count();
    if (ca + beta.cycle_count() != target) continue;
    if (connected && d > 1) {
      UnionFind uf(d);
      for (int i = 0; i < d; ++i) {
        uf.unite(i, alpha(i));
        uf.unite(i, beta(i));
      }
      if (uf.classes != 1) continue;
    }
    ++by_power[static_cast<std::size_t>(ca)];
  }
  std::vector<Rational> c;
  const Rational inv = Rational(1) / Rational(mu.product());
  for (long v : by_power) c.push_back(Rational(v) * inv);
  return QPoly(std::move(c));
}

}  // namespace

QPoly dessin_disconnected_count(const Partition& mu, int g) { return dessin_count(mu, g, false); }

QPoly dessin_connected_count(const Partition& mu, int g) { return dessin_count(mu, g, true); }

}  // namespace dmh
