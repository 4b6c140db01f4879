#include "dmh/hurwitz.hpp"

#include "dmh/error.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <thread>
#include <tuple>

namespace dmh {

namespace {

using Parts = std::vector<int>;

const QPoly kT = QPoly::variable();

QPoly affine(int c0, int c1) { return QPoly(std::vector<Rational>{Rational(c0), Rational(c1)}); }

// Values are deterministic, so a racing duplicate insert is harmless.
template <class Key>
class Memo {
 public:
  bool find(const Key& k, QPoly& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& k, const QPoly& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, QPoly> map_;
};

using CacheKey = std::tuple<int, int, Parts>;

Memo<CacheKey>& cut_join_memo() {
  static Memo<CacheKey> m;
  return m;
}

Parts sorted(Parts p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

QPoly cut_join(Family family, int g, Parts parts);

QPoly value(Family family, int g, Parts parts) {
  if (g < 0) return QPoly();
  return cut_join(family, g, sorted(std::move(parts)));
}

Parts with(Parts base, std::initializer_list<int> extra) {
  base.insert(base.end(), extra);
  return base;
}

// Sum over g1 + g2 = g and I1 u I2 = S of V(g1; a, mu_I1) V(g2; b, mu_I2).
QPoly split_sum(Family family, int g, int a, int b, const Parts& rest) {
  QPoly total;
  const std::size_t s = rest.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    Parts left{a}, right{b};
    for (std::size_t i = 0; i < s; ++i) ((mask >> i) & 1 ? left : right).push_back(rest[i]);
    for (int g1 = 0; g1 <= g; ++g1) {
      const QPoly l = value(family, g1, left);
      if (l.is_zero()) continue;
      const QPoly r = value(family, g - g1, right);
      if (!r.is_zero()) total += l * r;
    }
  }
  return total;
}

QPoly compute_monotone(int g, const Parts& parts) {
  if (parts == Parts{1}) return g == 0 ? QPoly(1) : QPoly();
  const int m1 = parts[0];
  const Parts rest(parts.begin() + 1, parts.end());
  QPoly acc;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Parts merged = rest;
    merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
    const int joined = m1 + rest[i];
    merged.push_back(joined);
    acc += value(Family::Monotone, g, merged) * Rational(joined);
  }
  if (m1 > 1) acc += affine(-1, 1) * value(Family::Monotone, g, with(rest, {m1 - 1})) * Rational(m1 - 1);
  for (int a = 1; a < m1; ++a) {
    const int b = m1 - a;
    QPoly inner = value(Family::Monotone, g - 1, with(rest, {a, b}));
    inner += split_sum(Family::Monotone, g, a, b, rest);
    acc += inner * Rational(a * b);
  }
  return acc * Rational(1, m1);
}

QPoly compute_dessin(int g, const Parts& parts) {
  if (parts == Parts{1}) return g == 0 ? kT : QPoly();
  const int m1 = parts[0];
  const Parts rest(parts.begin() + 1, parts.end());
  QPoly acc;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Parts merged = rest;
    merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
    const int joined = m1 + rest[i] - 1;
    merged.push_back(joined);
    acc += value(Family::Dessin, g, merged) * Rational(joined);
  }
  if (m1 > 1) acc += affine(1, 1) * value(Family::Dessin, g, with(rest, {m1 - 1})) * Rational(m1 - 1);
  for (int a = 1; a < m1 - 1; ++a) {
    const int b = m1 - 1 - a;
    QPoly inner = value(Family::Dessin, g - 1, with(rest, {a, b}));
    inner += split_sum(Family::Dessin, g, a, b, rest);
    acc += inner * Rational(a * b);
  }
  return acc * Rational(1, m1);
}

QPoly cut_join(Family family, int g, Parts parts) {
  CacheKey key{static_cast<int>(family), g, std::move(parts)};
  QPoly out;
  if (cut_join_memo().find(key, out)) return out;
  const Parts& p = std::get<2>(key);
  out = family == Family::Monotone ? compute_monotone(g, p) : compute_dessin(g, p);
  cut_join_memo().insert(key, out);
  return out;
}

const Parts& checked_parts(const Partition& mu) {
  if (mu.empty()) throw Error(ErrorCode::NegativeWeight, "mu must have at least one part");
  return mu.parts();
}

// Set partitions of {0..n-1} as restricted growth strings.
void for_each_set_partition(int n, const std::function<void(const std::vector<Parts>&)>& f) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<Parts> out(static_cast<std::size_t>(blocks));
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(j);
      f(out);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) rec(0, 0);
}

// Calls f on each (g_1..g_m) with g_j >= 0 and sum G.
void for_each_composition(int total, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> gs(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == m - 1) {
      gs[static_cast<std::size_t>(j)] = left;
      f(gs);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      gs[static_cast<std::size_t>(j)] = v;
      rec(j + 1, left - v);
    }
  };
  if (m > 0 && total >= 0) rec(0, total);
}

// Sum over set partitions with at least min_blocks blocks of prod V(g_j; mu_Bj),
// where sum g_j = g + m - 1 keeps |mu| + 2g - 2 + n additive.
QPoly product_sum(int g, const Parts& parts, int min_blocks,
                  const std::function<QPoly(int, const Parts&)>& connected) {
  QPoly total;
  for_each_set_partition(static_cast<int>(parts.size()), [&](const std::vector<Parts>& blocks) {
    const int m = static_cast<int>(blocks.size());
    if (m < min_blocks) return;
    std::vector<Parts> sub;
    for (const auto& b : blocks) {
      Parts p;
      for (int idx : b) p.push_back(parts[static_cast<std::size_t>(idx)]);
      sub.push_back(sorted(std::move(p)));
    }
    for_each_composition(g + m - 1, m, [&](const std::vector<int>& gs) {
      QPoly prod(1);
      for (int j = 0; j < m && !prod.is_zero(); ++j)
        prod *= connected(gs[static_cast<std::size_t>(j)], sub[static_cast<std::size_t>(j)]);
      total += prod;
    });
  });
  return total;
}

void check_table_bound(const Partition& mu) {
  if (mu.weight() > kCharacterTableMaxWeight)
    throw Error(ErrorCode::BoundExceeded, "character tables are limited to |mu| <= 8");
}

QPoly monotone_disconnected(int g, const Partition& mu) {
  const int k = mu.weight();
  const int r = k + 2 * g - 2 + mu.length();
  if (r < 0) return QPoly();
  const auto ur = static_cast<std::size_t>(r);
  const Rational kfact(factorial(static_cast<unsigned>(k)));
  QPoly total;
  for (const auto& lambda : partitions_of(k)) {
    const long chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    const PartitionData data = partition_data(lambda);
    // Each box contributes (1 + (t-1)c h)/(1 - c h) = 1 + t sum_{j>=1} (c h)^j.
    std::vector<QPoly> series(ur + 1);
    series[0] = QPoly(1);
    for (int c : data.contents) {
      std::vector<Rational> factor(ur + 1);
      factor[0] = 1;
      Rational cp = 1;
      for (std::size_t j = 1; j <= ur; ++j) factor[j] = (cp *= c);
      std::vector<QPoly> next(ur + 1);
      for (std::size_t i = 0; i <= ur; ++i) {
        if (series[i].is_zero()) continue;
        next[i] += series[i];
        for (std::size_t j = 1; i + j <= ur; ++j)
          if (!is_zero(factor[j])) next[i + j] += series[i] * kT * factor[j];
      }
      series = std::move(next);
    }
    total += series[ur] * (Rational(data.dimension * chi) / kfact);
  }
  return total * (Rational(1) / Rational(mu.product()));
}

QPoly dessin_disconnected(int g, const Partition& mu) {
  const int k = mu.weight();
  const int r = k + 2 * g - 2 + mu.length();
  if (r < 0 || r > 2 * k) return QPoly();
  const Rational kfact(factorial(static_cast<unsigned>(k)));
  QPoly total;
  for (const auto& lambda : partitions_of(k)) {
    const long chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    const PartitionData data = partition_data(lambda);
    // prod (1 + c h)(t + c h) as a polynomial in h with t-polynomial coefficients.
    std::vector<QPoly> poly{QPoly(1)};
    for (int c : data.contents) {
      const std::vector<QPoly> factor{kT, affine(c, c), QPoly(Rational(c * c))};
      std::vector<QPoly> next(poly.size() + 2);
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (!factor[j].is_zero()) next[i + j] += poly[i] * factor[j];
      poly = std::move(next);
    }
    total += poly[static_cast<std::size_t>(r)] * (Rational(data.dimension * chi) / kfact);
  }
  return total * (Rational(1) / Rational(mu.product()));
}

Memo<CacheKey>& disconnected_memo() {
  static Memo<CacheKey> m;
  return m;
}

Memo<CacheKey>& bridge_memo() {
  static Memo<CacheKey> m;
  return m;
}

Memo<std::pair<int, int>>& one_point_memo() {
  static Memo<std::pair<int, int>> m;
  return m;
}

}  // namespace

std::string family_name(Family f) { return f == Family::Monotone ? "monotone" : "dessin"; }

Family parse_family(const std::string& text) {
  if (text == "monotone") return Family::Monotone;
  if (text == "dessin" || text == "dessins") return Family::Dessin;
  throw Error(ErrorCode::ParseError, "unknown family '" + text + "'");
}

QPoly monotone_H(int g, const Partition& mu) { return value(Family::Monotone, g, checked_parts(mu)); }

QPoly dessin_D(int g, const Partition& mu) { return value(Family::Dessin, g, checked_parts(mu)); }

QPoly hurwitz_value(const HurwitzKey& key) { return value(key.family, key.g, checked_parts(key.mu)); }

std::vector<QPoly> hurwitz_values(const std::vector<HurwitzKey>& keys, int threads) {
  std::vector<QPoly> out(keys.size());
  // Largest keys first so the long computations start early.
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return keys[a].mu.weight() + 2 * keys[a].g > keys[b].mu.weight() + 2 * keys[b].g;
  });
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < order.size();) out[order[i]] = hurwitz_value(keys[order[i]]);
  };
  const int n = std::max(1, threads);
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

QPoly one_point_H(int g, int d) {
  if (d < 1) throw Error(ErrorCode::NegativeWeight, "d must be positive");
  if (g < 0) return QPoly();
  if (d == 1) return g == 0 ? QPoly(1) : QPoly();
  if (d == 2) return kT * Rational(1, 2);
  QPoly out;
  if (one_point_memo().find({g, d}, out)) return out;
  const QPoly tm1 = affine(-1, 1);
  out = affine(1, 1) * one_point_H(g, d - 1) * Rational((d - 1) * (2 * d - 3));
  out -= tm1 * tm1 * one_point_H(g, d - 2) * Rational((d - 2) * (d - 3));
  out += one_point_H(g - 1, d) * Rational(d * d * (d - 1) * (d - 1));
  out *= Rational(1, d * d);
  one_point_memo().insert({g, d}, out);
  return out;
}

QPoly disconnected_table(Family family, int g, const Partition& mu) {
  checked_parts(mu);
  check_table_bound(mu);
  CacheKey key{static_cast<int>(family), g, mu.parts()};
  QPoly out;
  if (disconnected_memo().find(key, out)) return out;
  out = family == Family::Monotone ? monotone_disconnected(g, mu) : dessin_disconnected(g, mu);
  disconnected_memo().insert(key, out);
  return out;
}

QPoly connected_from_disconnected(Family family, int g, const Partition& mu) {
  checked_parts(mu);
  check_table_bound(mu);
  if (g < 0) return QPoly();
  CacheKey key{static_cast<int>(family), g, mu.parts()};
  QPoly out;
  if (bridge_memo().find(key, out)) return out;
  out = disconnected_table(family, g, mu);
  out -= product_sum(g, mu.parts(), 2, [family](int gj, const Parts& p) {
    return connected_from_disconnected(family, gj, Partition(p));
  });
  bridge_memo().insert(key, out);
  return out;
}

QPoly disconnected_from_connected(Family family, int g, const Partition& mu) {
  return product_sum(g, checked_parts(mu), 1, [family](int gj, const Parts& p) {
    return value(family, gj, p);
  });
}

QPoly narayana(int m) {
  if (m < 1) throw Error(ErrorCode::NegativeWeight, "m must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i)
    c[static_cast<std::size_t>(i)] =
        Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) *
                 binomial(static_cast<unsigned>(m), static_cast<unsigned>(i - 1))) /
        m;
  return QPoly(std::move(c));
}

QPoly times_mu(const Partition& mu, const QPoly& value) { return value * Rational(mu.product()); }

}  // namespace dmh
