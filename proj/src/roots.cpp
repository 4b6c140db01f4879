#include "dmh/roots.hpp"

#include "dmh/error.hpp"
#include "dmh/format.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace dmh {

namespace {

const QPoly kT = QPoly::variable();

int sign(const Rational& q) { return sgn(q); }

void require_nonzero(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
}

// Positive rescaling keeps every sign and tames coefficient growth.
QPoly normalize(const QPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / abs(p.leading()));
}

Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[static_cast<std::size_t>(i)] / p.leading())));
  return m + 1;
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Bisection on a square-free polynomial. Points listed in `exact` are known
// roots and get closed boxes; open boxes are shrunk until they avoid them
// and have width at most 1.
class Isolator {
 public:
  Isolator(const QPoly& sqfree, std::vector<Rational> exact) : s_(sqfree), chain_(sturm_chain(sqfree)), exact_(std::move(exact)) {}

  std::vector<RootBox> run() {
    std::vector<RootBox> out;
    for (const auto& e : exact_) out.push_back({e, e, 1});
    if (s_.degree() >= 1) {
      // A power of two keeps every box on the dyadic grid.
      const Rational bound = cauchy_bound(s_);
      Rational b = 1;
      while (b < bound) b *= 2;
      split(-b, b, out);
    }
    std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) { return x.high < y.high; });
    return out;
  }

 private:
  bool contains_exact(const Rational& lo, const Rational& hi) const {
    for (const auto& e : exact_)
      if (lo < e && e <= hi) return true;
    return false;
  }

  bool is_exact_point(const Rational& x) const { return std::find(exact_.begin(), exact_.end(), x) != exact_.end(); }

  void split(Rational lo, Rational hi, std::vector<RootBox>& out) {
    const int n = count_roots(chain_, lo, hi);
    if (n == 0) return;
    if (n == 1) {
      if (is_zero(s_(hi))) {
        if (!is_exact_point(hi)) out.push_back({hi, hi, 1});
        return;
      }
      if (!contains_exact(lo, hi) && hi - lo <= 1) {
        out.push_back({lo, hi, 1});
        return;
      }
    }
    const Rational m = (lo + hi) / 2;
    if (is_zero(s_(m))) {
      if (!is_exact_point(m)) out.push_back({m, m, 1});
      // Step left of m far enough that (m - d, m] holds only m.
      Rational d = (m - lo) / 2;
      while (count_roots(chain_, m - d, m) != 1) d /= 2;
      split(lo, m - d, out);
    } else {
      split(lo, m, out);
    }
    split(m, hi, out);
  }

  QPoly s_;
  SturmChain chain_;
  std::vector<Rational> exact_;
};

struct FactorChains {
  std::vector<std::pair<SturmChain, int>> chains;

  explicit FactorChains(const QPoly& p) {
    for (const auto& [f, i] : squarefree_decomposition(p)) chains.emplace_back(sturm_chain(f), i);
  }

  int multiplicity(const RootBox& box) const {
    int m = 0;
    for (const auto& [chain, i] : chains) {
      if (box.exact()) {
        if (is_zero(chain.polys[0](box.low))) m += i;
      } else if (count_roots(chain, box.low, box.high) > 0) {
        m += i;
      }
    }
    return m;
  }
};

// Boxes for the distinct real roots of p, with 0 and -1 peeled off exactly
// whenever they are roots.
std::vector<RootBox> distinct_boxes(const QPoly& p) {
  QPoly q = p;
  std::vector<Rational> exact;
  if (is_zero(q(Rational(0)))) exact.emplace_back(0);
  if (is_zero(q(Rational(-1)))) exact.emplace_back(-1);
  const QPoly t1(std::vector<Rational>{Rational(1), Rational(1)});
  if (!exact.empty()) {
    while (q.degree() > 0 && is_zero(q(Rational(0)))) q = exact_div(q, kT);
    while (q.degree() > 0 && is_zero(q(Rational(-1)))) q = exact_div(q, t1);
  }
  const QPoly s = q.degree() > 0 ? squarefree_part(q) : QPoly(1);
  return Isolator(s, std::move(exact)).run();
}

}  // namespace

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  require_nonzero(p);
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  const QPoly dp = p.derivative();
  const QPoly a0 = gcd(p, dp);
  QPoly b = exact_div(p, a0);
  QPoly d = exact_div(dp, a0) - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const QPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(monic(a), i);
    b = exact_div(b, a);
    d = exact_div(d, a) - b.derivative();
  }
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  require_nonzero(p);
  if (p.degree() < 1) return QPoly(1);
  return monic(exact_div(p, gcd(p, p.derivative())));
}

SturmChain sturm_chain(const QPoly& p) {
  SturmChain c;
  c.polys.push_back(normalize(squarefree_part(p)));
  if (c.polys[0].degree() < 1) return c;
  c.polys.push_back(normalize(c.polys[0].derivative()));
  while (true) {
    const QPoly r = divmod(c.polys[c.polys.size() - 2], c.polys.back()).second;
    if (r.is_zero()) break;
    c.polys.push_back(normalize(-r));
  }
  return c;
}

int sign_variations(const SturmChain& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain.polys) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) return 0;
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_real_roots(const SturmChain& chain) {
  int minus = 0, plus = 0, last_m = 0, last_p = 0;
  for (const auto& p : chain.polys) {
    const int lead = sign(p.leading());
    const int at_plus = lead;
    const int at_minus = p.degree() % 2 ? -lead : lead;
    if (last_p != 0 && at_plus != last_p) ++plus;
    if (last_m != 0 && at_minus != last_m) ++minus;
    last_p = at_plus;
    last_m = at_minus;
  }
  return minus - plus;
}

bool is_real_rooted(const QPoly& p) {
  require_nonzero(p);
  const SturmChain chain = sturm_chain(p);
  return count_real_roots(chain) == chain.polys[0].degree();
}

std::vector<RootBox> isolate_real_roots(const QPoly& p) {
  require_nonzero(p);
  auto boxes = distinct_boxes(p);
  const FactorChains factors(p);
  for (auto& b : boxes) b.multiplicity = factors.multiplicity(b);
  return boxes;
}

std::string refine_root(const QPoly& p, const RootBox& box, int digits) {
  require_nonzero(p);
  if (box.exact()) {
    if (!is_zero(p(box.low))) throw Error(ErrorCode::BoxNotIsolating, "point is not a root");
    return to_decimal(box.low, digits);
  }
  const SturmChain chain = sturm_chain(p);
  const QPoly& s = chain.polys[0];
  if (count_roots(chain, box.low, box.high) != 1) throw Error(ErrorCode::BoxNotIsolating, "box does not hold exactly one root");
  Rational lo = box.low, hi = box.high;
  if (is_zero(s(hi))) return to_decimal(hi, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  const Rational unit = Rational(1) / Rational(scale);
  const int shi = sign(s(hi));
  // Both ends rounding alike pins the rounded root; a rational root sitting on a
  // rounding boundary shows up as an exact zero of s at that boundary.
  while (true) {
    const std::string a = to_decimal(lo, digits), b = to_decimal(hi, digits);
    if (a == b) return a;
    if (hi - lo < unit / 1024) {
      const Rational boundary = (parse_decimal(a) + parse_decimal(b)) / 2;
      if (lo < boundary && boundary <= hi && is_zero(s(boundary))) return to_decimal(boundary, digits);
    }
    const Rational m = (lo + hi) / 2;
    const int sm = sign(s(m));
    if (sm == 0) return to_decimal(m, digits);
    if (sm != shi)
      lo = m;
    else
      hi = m;
  }
}

std::vector<std::string> real_root_decimals(const QPoly& p, int digits) {
  std::vector<std::string> out;
  for (const auto& box : isolate_real_roots(p)) {
    const std::string v = box.exact() && box.low.get_den() == 1 ? box.low.get_str() : refine_root(p, box, digits);
    for (int i = 0; i < box.multiplicity; ++i) out.push_back(v);
  }
  return out;
}

InterlaceVerdict interlace_verdict(const QPoly& p, const QPoly& q) {
  require_nonzero(p);
  require_nonzero(q);
  if (!is_real_rooted(p) || !is_real_rooted(q)) throw Error(ErrorCode::NotRealRooted, "interlacing needs real-rooted inputs");
  if (q.degree() != p.degree() + 1) throw Error(ErrorCode::DegreeGap, "degrees must differ by exactly one");
  InterlaceVerdict v;
  if (p.degree() == 0) {
    v.weak = v.strict = true;
    return v;
  }
  const FactorChains fp(p), fq(q);
  int a = 0, b = 0;
  v.weak = v.strict = true;
  char last = 0;
  for (const auto& box : distinct_boxes(p * q)) {
    const int ma = fp.multiplicity(box), mb = fq.multiplicity(box);
    a += ma;
    b += mb;
    // Counts of roots <= x at each root x: a <= b <= a + 1.
    if (!(a <= b && b <= a + 1)) v.weak = v.strict = false;
    if (ma + mb != 1) v.strict = false;
    const char label = ma ? 'a' : 'b';
    if (label == last) v.strict = false;
    last = label;
  }
  v.strict = v.strict && v.weak;
  return v;
}

bool interlaces(const QPoly& p, const QPoly& q) { return interlace_verdict(p, q).weak; }

bool ScanEntry::passed() const {
  if (zero) return true;
  if (!real_rooted) return false;
  return std::all_of(successors.begin(), successors.end(), [](const SuccessorResult& s) { return s.weak; });
}

ScanReport conjecture_scan(Family family, const std::vector<int>& genera, int n_max, int weight_max, ScanChecks checks,
                           int threads) {
  std::set<int> gs(genera.begin(), genera.end());
  std::vector<HurwitzKey> keys;
  for (int g : gs)
    for (int k = 1; k <= weight_max; ++k)
      for (const auto& mu : partitions_of(k))
        if (mu.length() <= n_max) keys.push_back({family, g, mu});
  // Warm the shared memo in parallel, successors included.
  std::vector<HurwitzKey> all = keys;
  for (const auto& key : keys)
    for (int i = 0; i < key.mu.length(); ++i) {
      auto parts = key.mu.parts();
      ++parts[static_cast<std::size_t>(i)];
      all.push_back({family, key.g, Partition(parts)});
    }
  hurwitz_values(all, threads);

  ScanReport report;
  report.entries.resize(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t idx) {
    ScanEntry& e = report.entries[idx];
    e.key = keys[idx];
    e.value = hurwitz_value(e.key);
    e.zero = e.value.is_zero();
    if (e.zero) return;
    e.real_rooted = is_real_rooted(e.value);
    if (e.real_rooted) e.boxes = isolate_real_roots(e.value);
    if (!checks.interlace || !e.real_rooted) return;
    std::set<Partition> seen;
    for (int i = 0; i < e.key.mu.length(); ++i) {
      auto parts = e.key.mu.parts();
      ++parts[static_cast<std::size_t>(i)];
      const Partition succ(parts);
      if (!seen.insert(succ).second) continue;
      SuccessorResult r;
      r.successor = succ;
      const QPoly next = hurwitz_value({family, e.key.g, succ});
      try {
        const auto v = interlace_verdict(e.value, next);
        r.weak = v.weak;
        r.strict = v.strict;
      } catch (const Error&) {
        r.weak = r.strict = false;
      }
      e.successors.push_back(r);
    }
  });
  if (!checks.real)
    for (auto& e : report.entries) e.real_rooted = true;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    if (!e.zero) report.checks += (checks.real ? 1 : 0) + static_cast<int>(e.successors.size());
    if (!e.passed()) report.failures.push_back(i);
  }
  return report;
}

RootTable largeg_root_table(const std::vector<int>& genera, const Partition& mu, int digits, int threads) {
  RootTable table;
  table.mu = mu;
  table.digits = digits;
  const int d = mu.weight();
  for (int j = 1; j <= d - 2; ++j) table.limits.push_back(make_rational(-(d - 1 - j), j));
  if (d >= 2) table.limits.emplace_back(0);
  std::vector<HurwitzKey> keys;
  for (int g : genera) keys.push_back({Family::Monotone, g, mu});
  const auto values = hurwitz_values(keys, threads);
  table.rows.resize(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    table.rows[i].g = keys[i].g;
    if (!values[i].is_zero()) table.rows[i].roots = real_root_decimals(values[i], digits);
  });
  return table;
}

}  // namespace dmh
