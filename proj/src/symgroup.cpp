#include "dmh/symgroup.hpp"

#include "dmh/error.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace dmh {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::ParseError, "images do not form a bijection");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::transposition(int k, int a, int b) {
  Permutation p = identity(k);
  std::swap(p.img_.at(static_cast<std::size_t>(a)), p.img_.at(static_cast<std::size_t>(b)));
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int k) {
  std::vector<int> img(static_cast<std::size_t>(k), -1);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      const int to = c[(i + 1) % c.size()];
      if (from < 0 || from >= k || to < 0 || to >= k)
        throw Error(ErrorCode::ParseError, "cycle label outside 1.." + std::to_string(k));
      if (img[static_cast<std::size_t>(from)] != -1)
        throw Error(ErrorCode::ParseError, "cycles are not disjoint");
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  for (int i = 0; i < k; ++i)
    if (img[static_cast<std::size_t>(i)] == -1) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(img_.size(), 0);
  int c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) seen[j] = 1;
  }
  return c;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      c.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  if (img_.empty()) return "( )";
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch,
                "cannot compose degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  std::vector<int> r(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) r[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(r));
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int max_label = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorCode::ParseError, "expected '(' in \"" + text + "\"");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "missing ')' in \"" + text + "\"");
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    skip_ws();
    std::vector<int> cyc;
    const bool separated = body.find_first_of(" \t,") != std::string::npos;
    if (separated) {
      for (char& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream in(body);
      std::string tok;
      while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          throw Error(ErrorCode::ParseError, "bad label '" + tok + "'");
        cyc.push_back(std::stoi(tok));
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw Error(ErrorCode::ParseError, std::string("bad label '") + ch + "'");
        cyc.push_back(ch - '0');
      }
    }
    for (int& x : cyc) {
      if (x < 1) throw Error(ErrorCode::ParseError, "labels are 1-based");
      max_label = std::max(max_label, x);
      --x;
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  if (degree < 0) degree = max_label;
  if (max_label > degree)
    throw Error(ErrorCode::ParseError, "label " + std::to_string(max_label) + " exceeds degree " + std::to_string(degree));
  return Permutation::from_cycles(cycles, degree);
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw Error(ErrorCode::NegativeWeight, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Integer Partition::product() const {
  Integer p = 1;
  for (int x : parts_) p *= x;
  return p;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    parts.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      tok.push_back(ch);
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch != '(' && ch != ')' && ch != '[' && ch != ']') {
      throw Error(ErrorCode::ParseError, "bad partition \"" + text + "\"");
    }
  }
  flush();
  return Partition(std::move(parts));
}

Partition cycle_type(const Permutation& sigma) {
  std::vector<int> lens;
  for (const auto& c : sigma.cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lens));
}

Permutation canonical_permutation(const Partition& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int p : mu.parts()) {
    std::vector<int> c(static_cast<std::size_t>(p));
    std::iota(c.begin(), c.end(), next);
    next += p;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(cycles, mu.weight());
}

namespace {

void partitions_rec(int rem, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rem, maxp); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw Error(ErrorCode::NegativeWeight, "partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

PartitionData partition_data(const Partition& lambda) {
  PartitionData d;
  const auto& rows = lambda.parts();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) {
      d.contents.push_back(j - i);
      int below = 0;
      for (int r = i + 1; r < lambda.length() && rows[static_cast<std::size_t>(r)] > j; ++r) ++below;
      hooks *= rows[static_cast<std::size_t>(i)] - j + below;
    }
  }
  d.dimension = factorial(static_cast<unsigned>(lambda.weight())) / hooks;
  return d;
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

std::shared_mutex char_mutex;
std::map<CharKey, long> char_cache;

long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  if (mu.size() == 1 && lambda.size() == 1) return 1;
  CharKey key{lambda, mu};
  {
    std::shared_lock lock(char_mutex);
    auto it = char_cache.find(key);
    if (it != char_cache.end()) return it->second;
  }
  // Beta numbers: removing a border strip of length r moves one bead down r places.
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  long total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta) between += (x > target && x < b);
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> nl;
    for (int j = 0; j < len; ++j) {
      const int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    const long sub = mn_rec(nl, rest);
    total += (between % 2 ? -sub : sub);
  }
  std::unique_lock lock(char_mutex);
  char_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw Error(ErrorCode::WeightMismatch,
                "|lambda| = " + std::to_string(lambda.weight()) + " but |mu| = " + std::to_string(mu.weight()));
  return mn_rec(lambda.parts(), mu.parts());
}

Integer z_mu(const Partition& mu) {
  Integer z = 1;
  std::map<int, unsigned> mult;
  for (int p : mu.parts()) ++mult[p];
  for (const auto& [part, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), m);
    z *= pw * factorial(m);
  }
  return z;
}

Integer class_size(const Partition& mu) { return factorial(static_cast<unsigned>(mu.weight())) / z_mu(mu); }

// ---------------------------------------------------------------------------

namespace {

std::mutex perm_mutex;
std::map<int, std::vector<Permutation>> perm_cache;

const std::vector<Permutation>& perms_of(int k) {
  std::lock_guard lock(perm_mutex);
  auto it = perm_cache.find(k);
  if (it != perm_cache.end()) return it->second;
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return perm_cache.emplace(k, std::move(out)).first->second;
}

}  // namespace

std::vector<Permutation> all_permutations(int k) {
  if (k < 0) throw Error(ErrorCode::NegativeWeight, "negative degree");
  if (k > 10) throw Error(ErrorCode::DegreeTooLarge, "refusing to list S_" + std::to_string(k));
  return perms_of(k);
}

std::size_t permutation_rank(const Permutation& sigma) {
  const int k = sigma.degree();
  std::size_t rank = 0;
  for (int i = 0; i < k; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < k; ++j) smaller += sigma(j) < sigma(i);
    rank = rank * static_cast<std::size_t>(k - i) + smaller;
  }
  return rank;
}

GroupElement ga_identity(int k) {
  GroupElement e(perms_of(k).size(), Rational(0));
  e[0] = 1;
  return e;
}

GroupElement ga_multiply(const GroupElement& a, const GroupElement& b, int k) {
  const auto& perms = perms_of(k);
  GroupElement r(perms.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      r[permutation_rank(compose(perms[i], perms[j]))] += a[i] * b[j];
    }
  }
  return r;
}

GroupElement jucys_murphy(int i, int k) {
  GroupElement e(perms_of(k).size(), Rational(0));
  for (int a = 1; a < i; ++a) e[permutation_rank(Permutation::transposition(k, a - 1, i - 1))] += 1;
  return e;
}

bool jucys_cycle_identity_check(int k, int xmax) {
  if (k > 6) throw Error(ErrorCode::DegreeTooLarge, "group algebra enumeration is limited to k <= 6");
  if (k < 1) throw Error(ErrorCode::NegativeWeight, "k must be positive");
  const auto& perms = perms_of(k);
  for (int x = 0; x <= xmax; ++x) {
    GroupElement lhs = ga_identity(k);
    for (int i = 1; i <= k; ++i) {
      GroupElement factor = jucys_murphy(i, k);
      factor[0] += x;
      lhs = ga_multiply(lhs, factor, k);
    }
    for (std::size_t s = 0; s < perms.size(); ++s)
      if (lhs[s] != pow(Rational(x), perms[s].cycle_count())) return false;
  }
  return true;
}

}  // namespace dmh
