// dmh: command-line front end for the deformed monotone Hurwitz toolkit.

#include "CLI11.hpp"
#include "json.hpp"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/hurwitz.hpp"
#include "dmh/oracles.hpp"
#include "dmh/reference.hpp"
#include "dmh/roots.hpp"
#include "dmh/specrec.hpp"
#include "dmh/symgroup.hpp"
#include "dmh/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace dmh;
using Json = nlohmann::ordered_json;

namespace {

/// Bad flags or out-of-range requests; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A recomputation disagreed; exit status 1 after the artifact is written.
struct VerificationFailed {};

struct Common {
  int threads = 0;
  std::string output;
};

int thread_count(const Common& c) {
  if (c.threads > 0) return c.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("cannot open " + c.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Family family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const Error&) {
    throw UsageError("unknown family \"" + s + "\"");
  }
}

Partition parts_arg(const std::string& s) {
  Partition mu;
  try {
    mu = parse_partition(s);
  } catch (const std::exception&) {
    throw UsageError("bad partition \"" + s + "\"");
  }
  if (mu.empty()) throw UsageError("empty partition");
  for (int p : mu.parts())
    if (p < 1) throw UsageError("parts must be positive");
  return mu;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("bad integer list \"" + s + "\"");
      }
    }
  return out;
}

std::string format_arg(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format \"" + f + "\" is not available here");
}

Json coeff_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : to_coeff_strings(p)) a.push_back(c);
  return a;
}

// "(12)(3)" style label of the canonical permutation of cycle type mu.
std::string cycle_label(const Partition& mu) {
  if (mu.empty()) return "()";
  std::string s;
  int next = 1;
  const bool spaced = mu.weight() >= 10;
  for (int part : mu.parts()) {
    s += "(";
    for (int i = 0; i < part; ++i) {
      if (i && spaced) s += " ";
      s += std::to_string(next++);
    }
    s += ")";
  }
  return s;
}

// ---------------------------------------------------------------------------

struct HurwitzArgs {
  std::string family;
  int genus = -1;
  std::string parts;
  int weight = -1;
  bool times_mu = false;
  std::string format = "json";
};

void cmd_hurwitz(const Common& c, const HurwitzArgs& a) {
  const Family f = family_arg(a.family);
  const std::string fmt = format_arg(a.format, {"json", "csv"});
  if (a.genus < 0) throw UsageError("--genus must be >= 0");
  std::vector<Partition> mus;
  if (!a.parts.empty()) mus.push_back(parts_arg(a.parts));
  if (a.weight >= 1)
    for (const auto& mu : partitions_of(a.weight)) mus.push_back(mu);
  if (mus.empty()) throw UsageError("give --parts or --weight");
  std::vector<HurwitzKey> keys;
  for (const auto& mu : mus) keys.push_back({f, a.genus, mu});
  const auto values = hurwitz_values(keys, thread_count(c));

  if (fmt == "csv") {
    std::string out = "mu,value\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const QPoly v = a.times_mu ? times_mu(keys[i].mu, values[i]) : values[i];
      out += csv_field(keys[i].mu.to_string()) + "," + csv_field(to_string(v)) + "\n";
    }
    emit(c, out);
    return;
  }
  Json j;
  j["family"] = family_name(f);
  j["genus"] = a.genus;
  j["times_mu"] = a.times_mu;
  Json rows = Json::array();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const QPoly v = a.times_mu ? times_mu(keys[i].mu, values[i]) : values[i];
    rows.push_back({{"mu", keys[i].mu.to_string()}, {"value", to_string(v)}, {"coefficients", coeff_json(v)}});
  }
  j["values"] = rows;
  emit(c, dump(j));
}

// ---------------------------------------------------------------------------

struct WeingartenArgs {
  int k = -1;
  std::string method = "character";
  std::string format = "json";
};

void cmd_weingarten(const Common& c, const WeingartenArgs& a) {
  if (a.method != "character" && a.method != "orthogonality" && a.method != "both")
    throw UsageError("--method is character, orthogonality or both");
  if (a.format != "json" && a.format != "csv") throw UsageError("--format is json or csv");
  const bool use_char = a.method != "orthogonality", use_orth = a.method != "character";
  int cap = kCharacterMaxDegree;
  if (use_orth) cap = std::min(cap, kOrthogonalityMaxDegree);
  if (a.k < 0 || a.k > cap) throw UsageError("--k must lie in 0.." + std::to_string(cap));
  const auto mus = partitions_of(a.k);
  std::map<Partition, MNRational> chr, orth;
  if (use_char)
    for (const auto& mu : mus) chr.emplace(mu, sw_character(mu));
  if (use_orth) orth = sw_orthogonality_table(a.k).values;
  const auto& values = use_char ? chr : orth;
  bool agree = true;
  if (use_char && use_orth)
    for (const auto& mu : mus) agree = agree && chr.at(mu) == orth.at(mu);

  std::string out;
  if (a.format == "csv") {
    out = use_char ? "mu,grassmannian,unitary_leading\n" : "mu,grassmannian\n";
    for (const auto& mu : mus) {
      out += csv_field(cycle_label(mu)) + "," + csv_field(values.at(mu).to_factored_string());
      if (use_char) out += "," + csv_field(to_string(uw_leading(canonical_permutation(mu)), 'N'));
      out += "\n";
    }
  } else {
    Json table = Json::object(), unitary = Json::object();
    for (const auto& mu : mus) {
      table[cycle_label(mu)] = values.at(mu).to_factored_string();
      if (use_char) unitary[cycle_label(mu)] = to_string(uw_leading(canonical_permutation(mu)), 'N');
    }
    Json j;
    j["k"] = a.k;
    j["method"] = a.method;
    j["table"] = table;
    if (use_char) j["unitary"] = unitary;
    if (use_char && use_orth) j["methods_agree"] = agree;
    out = dump(j);
  }
  emit(c, out);
  if (!agree) throw VerificationFailed{};
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string family = "monotone";
  int genus = -1;
  std::string parts;
};

void cmd_oracle(const Common& c, const OracleArgs& a) {
  const Family f = family_arg(a.family);
  if (a.genus < 0) throw UsageError("--genus must be >= 0");
  const Partition mu = parts_arg(a.parts);
  Json j;
  j["family"] = family_name(f);
  j["genus"] = a.genus;
  j["mu"] = mu.to_string();
  QPoly oracle, recursion;
  if (f == Family::Monotone) {
    const int r = mu.weight() + 2 * a.genus - 2 + mu.length();
    if (mu.weight() > kOracleMaxDegree || r > kOracleMaxLength)
      throw UsageError("oracle limited to |mu| <= " + std::to_string(kOracleMaxDegree) + " and length <= " +
                       std::to_string(kOracleMaxLength));
    oracle = r < 0 ? QPoly() : weighted_counts(canonical_permutation(mu), r, true)[static_cast<std::size_t>(r)];
    recursion = times_mu(mu, monotone_H(a.genus, mu));
    j["quantity"] = "transitive weighted monotone factorisations (times mu)";
  } else {
    if (mu.weight() > kDessinMaxEdges) throw UsageError("dessin oracle limited to " + std::to_string(kDessinMaxEdges) + " edges");
    oracle = dessin_connected_count(mu, a.genus);
    recursion = dessin_D(a.genus, mu);
    j["quantity"] = "connected dessin count";
  }
  j["oracle"] = to_string(oracle);
  j["recursion"] = to_string(recursion);
  j["match"] = oracle == recursion;
  emit(c, dump(j));
  if (oracle != recursion) throw VerificationFailed{};
}

// ---------------------------------------------------------------------------

Json box_json(const RootBox& b) {
  return {{"low", to_string(b.low)}, {"high", to_string(b.high)}, {"multiplicity", b.multiplicity}};
}

struct ScanArgs {
  std::string family = "monotone";
  std::string genera = "0,1";
  int n_max = 3;
  int weight_max = 8;
  std::string checks = "real,interlace";
};

void cmd_scan(const Common& c, const ScanArgs& a) {
  const Family f = family_arg(a.family);
  const auto genera = int_list(a.genera);
  for (int g : genera)
    if (g < 0) throw UsageError("genera must be >= 0");
  if (a.n_max < 0 || a.weight_max < 0) throw UsageError("--n-max and --weight-max must be >= 0");
  if (a.weight_max > 14) throw UsageError("--weight-max is capped at 14");
  ScanChecks checks{false, false};
  Json names = Json::array();
  for (const auto& tok : [&] {
         std::vector<std::string> v;
         std::stringstream in(a.checks);
         std::string t;
         while (std::getline(in, t, ',')) v.push_back(t);
         return v;
       }()) {
    if (tok == "real") checks.real = true;
    else if (tok == "interlace") checks.interlace = true;
    else throw UsageError("unknown check \"" + tok + "\"");
    names.push_back(tok);
  }
  const ScanReport rep = conjecture_scan(f, genera, a.n_max, a.weight_max, checks, thread_count(c));
  Json j;
  j["family"] = family_name(f);
  j["genera"] = genera;
  j["n_max"] = a.n_max;
  j["weight_max"] = a.weight_max;
  j["checks"] = names;
  j["keys"] = rep.entries.size();
  j["comparisons"] = rep.checks;
  j["passed"] = rep.passed();
  Json bad = Json::array();
  for (std::size_t idx : rep.failures) {
    const auto& e = rep.entries[idx];
    Json item;
    item["genus"] = e.key.g;
    item["mu"] = e.key.mu.to_string();
    item["value"] = to_string(e.value);
    item["real_rooted"] = e.real_rooted;
    Json boxes = Json::array();
    for (const auto& b : e.boxes) boxes.push_back(box_json(b));
    item["boxes"] = boxes;
    Json succ = Json::array();
    for (const auto& s : e.successors)
      succ.push_back({{"successor", s.successor.to_string()}, {"weak", s.weak}, {"strict", s.strict}});
    item["successors"] = succ;
    bad.push_back(item);
  }
  j["counterexamples"] = bad;
  emit(c, dump(j));
  if (!rep.passed()) throw VerificationFailed{};
}

struct TableArgs {
  std::string parts = "4,2,1";
  int genus_from = 10;
  int genus_to = 20;
  int digits = 12;
  std::string format = "json";
};

std::vector<int> genus_range(int from, int to) {
  if (from < 0) throw UsageError("genus must be >= 0");
  if (to < from) throw UsageError("empty genus range");
  if (to > 40) throw UsageError("genus is capped at 40");
  std::vector<int> g;
  for (int i = from; i <= to; ++i) g.push_back(i);
  return g;
}

void cmd_table(const Common& c, const TableArgs& a) {
  const std::string fmt = format_arg(a.format, {"json", "csv"});
  const Partition mu = parts_arg(a.parts);
  if (a.digits < 1 || a.digits > 60) throw UsageError("--digits must lie in 1..60");
  const RootTable t = largeg_root_table(genus_range(a.genus_from, a.genus_to), mu, a.digits, thread_count(c));
  if (fmt == "csv") {
    std::string out = "g,index,root_approx_" + std::to_string(a.digits) + "_digits\n";
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.roots.size(); ++i)
        out += std::to_string(row.g) + "," + std::to_string(i + 1) + "," + row.roots[i] + "\n";
    emit(c, out);
    return;
  }
  Json j;
  j["mu"] = mu.to_string();
  j["digits"] = a.digits;
  j["approximation"] = "roots are decimals rounded to " + std::to_string(a.digits) + " places";
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back({{"g", row.g}, {"roots", row.roots}});
  j["rows"] = rows;
  Json lim = Json::array();
  for (const auto& q : t.limits) lim.push_back(to_string(q));
  j["limits"] = lim;
  emit(c, dump(j));
}

// ---------------------------------------------------------------------------

struct TrArgs {
  std::string curve = "monotone";
  std::string gn;
  int orders = 4;
  bool raw = false;
};

void cmd_tr(const Common& c, const TrArgs& a) {
  const Family f = family_arg(a.curve);
  const auto gn = int_list(a.gn);
  if (gn.size() != 2) throw UsageError("--gn expects G,N");
  const int g = gn[0], n = gn[1];
  if (g < 0 || n < 1) throw UsageError("need G >= 0 and N >= 1");
  if (2 * g - 2 + n > kMaxRecursionLevel) throw UsageError("2G-2+N is capped at " + std::to_string(kMaxRecursionLevel));
  if (a.orders < 1 || a.orders > 12) throw UsageError("--orders must lie in 1..12");
  const SpectralCurve curve = build_curve(f);
  const auto table = extract_coefficients(curve, g, n, a.orders);
  Json j;
  j["curve"] = family_name(f);
  j["g"] = g;
  j["n"] = n;
  j["orders"] = a.orders;
  Json rows = Json::array();
  for (const auto& [mu, v] : table) rows.push_back({{"mu", mu.to_string()}, {"value", to_string(v)}});
  j["coefficients"] = rows;
  if (a.raw) {
    if (2 * g - 2 + n <= 0) throw UsageError("--raw needs a stable (g,n)");
    j["raw"] = to_string(tr_correlator(curve, g, n), curve);
  }
  emit(c, dump(j));
}

// ---------------------------------------------------------------------------

void cmd_report(const Common& c) {
  Json cells = Json::array();
  Json mismatched = Json::array();
  auto record = [&](Json cell, bool ok) {
    cell["match"] = ok;
    if (!ok) mismatched.push_back(cell);
    cells.push_back(std::move(cell));
  };

  const auto& ref = reference_hurwitz_cells();
  std::vector<HurwitzKey> keys;
  for (const auto& r : ref) keys.push_back({r.family, r.g, parse_partition(r.mu)});
  const auto values = hurwitz_values(keys, thread_count(c));
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const auto& key = keys[i];
    const QPoly published = parse_poly(ref[i].times_mu_value);
    Json methods = Json::object();
    bool ok = true;
    auto check = [&](const char* name, const QPoly& v) {
      const bool m = v == published;
      methods[name] = m;
      ok = ok && m;
    };
    check("cut_and_join", times_mu(key.mu, values[i]));
    if (key.mu.weight() <= kCharacterTableMaxWeight)
      check("character", times_mu(key.mu, connected_from_disconnected(key.family, key.g, key.mu)));
    const int r = key.mu.weight() + 2 * key.g - 2 + key.mu.length();
    if (key.family == Family::Monotone && key.mu.weight() <= kOracleMaxDegree && r <= 8 && r >= 0)
      check("oracle", weighted_counts(canonical_permutation(key.mu), r, true)[static_cast<std::size_t>(r)]);
    if (key.family == Family::Dessin && key.mu.weight() <= 6)
      check("oracle", times_mu(key.mu, dessin_connected_count(key.mu, key.g)));
    Json cell{{"table", std::string(family_name(key.family)) + " g=" + std::to_string(key.g)},
              {"mu", key.mu.to_string()},
              {"published", ref[i].times_mu_value},
              {"methods", methods}};
    record(std::move(cell), ok);
  }

  std::map<int, WeingartenTable> ortho;
  for (const auto& row : reference_weingarten()) {
    const Permutation sigma = parse_cycles(row.sigma, row.k);
    const Partition mu = cycle_type(sigma);
    if (!ortho.count(row.k)) ortho.emplace(row.k, sw_orthogonality_table(row.k));
    const MNRational published = parse_mnrational(row.grassmannian);
    const bool ch = sw_character(sigma) == published;
    const bool orth = ortho.at(row.k).values.at(mu) == published;
    const bool uni = uw_leading(sigma) == parse_ratfn(row.unitary, 'N');
    Json cell{{"table", "weingarten"},
              {"sigma", row.sigma.empty() ? "()" : row.sigma},
              {"published", {{"grassmannian", row.grassmannian}, {"unitary", row.unitary}}},
              {"methods", {{"character", ch}, {"orthogonality", orth}, {"unitary_leading_term", uni}}}};
    record(std::move(cell), ch && orth && uni);
  }

  Json j;
  j["cells"] = cells.size();
  j["mismatches"] = mismatched.size();
  j["report"] = cells;
  emit(c, dump(j));
  if (!mismatched.empty()) {
    for (const auto& m : mismatched) std::cerr << "mismatch: " << m.dump() << "\n";
    throw VerificationFailed{};
  }
}

// ---------------------------------------------------------------------------

struct PlotArgs {
  std::string parts = "4,2,1";
  int genus_from = 10;
  int genus_to = 20;
  int digits = 12;
};

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void cmd_plot(const Common& c, const PlotArgs& a) {
  const Partition mu = parts_arg(a.parts);
  const auto genera = genus_range(a.genus_from, a.genus_to);
  if (a.digits < 0 || a.digits > 60) throw UsageError("--digits must lie in 0..60");
  RootTable t;
  t.mu = mu;
  if (a.digits > 0) t = largeg_root_table(genera, mu, a.digits, thread_count(c));

  // Deterministic coordinates: decimals parsed exactly, then rounded once.
  double lo = -1, hi = 0;
  std::vector<std::pair<int, std::vector<double>>> series;
  for (const auto& row : t.rows) {
    std::vector<double> xs;
    for (const auto& r : row.roots) {
      const double x = parse_decimal(r).get_d();
      xs.push_back(x);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    series.emplace_back(row.g, std::move(xs));
  }
  for (const auto& q : t.limits) {
    lo = std::min(lo, q.get_d());
    hi = std::max(hi, q.get_d());
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double W = 640, H = 60.0 + 24.0 * static_cast<double>(genera.size()), L = 60, R = 20, T = 20, B = 40;
  auto px = [&](double x) { return L + (x - lo) / (hi - lo) * (W - L - R); };
  auto py = [&](std::size_t i) { return T + 24.0 * static_cast<double>(i) + 12.0; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt3(W) + "\" height=\"" + fmt3(H) + "\">\n";
  s += "<title>roots of H_g" + mu.to_string() + "</title>\n";
  const double axis_y = H - B;
  s += "<line x1=\"" + fmt3(L) + "\" y1=\"" + fmt3(axis_y) + "\" x2=\"" + fmt3(W - R) + "\" y2=\"" + fmt3(axis_y) +
       "\" stroke=\"black\"/>\n";
  for (int tick = static_cast<int>(std::ceil(lo)); tick <= static_cast<int>(std::floor(hi)); ++tick) {
    s += "<line x1=\"" + fmt3(px(tick)) + "\" y1=\"" + fmt3(axis_y) + "\" x2=\"" + fmt3(px(tick)) + "\" y2=\"" +
         fmt3(axis_y + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt3(px(tick)) + "\" y=\"" + fmt3(axis_y + 18) + "\" font-size=\"10\" text-anchor=\"middle\">" +
         std::to_string(tick) + "</text>\n";
  }
  for (const auto& q : t.limits)
    s += "<line class=\"limit\" x1=\"" + fmt3(px(q.get_d())) + "\" y1=\"" + fmt3(T) + "\" x2=\"" + fmt3(px(q.get_d())) +
         "\" y2=\"" + fmt3(axis_y) + "\" stroke=\"gray\" stroke-dasharray=\"3,3\"/>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    s += "<g class=\"series\" data-g=\"" + std::to_string(series[i].first) + "\">\n";
    s += "<text x=\"4\" y=\"" + fmt3(py(i) + 4) + "\" font-size=\"10\">g=" + std::to_string(series[i].first) + "</text>\n";
    for (double x : series[i].second)
      s += "<circle cx=\"" + fmt3(px(x)) + "\" cy=\"" + fmt3(py(i)) + "\" r=\"3\"/>\n";
    s += "</g>\n";
  }
  s += "</svg>\n";
  emit(c, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed monotone Hurwitz numbers, dessins, Weingarten functions and spectral curves"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: hardware)")->envname("DMH_THREADS");
  app.add_option("-o,--output", common.output, "Write the artifact here instead of stdout");

  std::function<void()> run;

  HurwitzArgs hz, ds;
  hz.family = "monotone";
  ds.family = "dessin";
  for (auto [name, args] : {std::pair{"hurwitz", &hz}, std::pair{"dessins", &ds}}) {
    auto* sc = app.add_subcommand(name, std::string(name) == "hurwitz" ? "Hurwitz numbers by cut-and-join"
                                                                        : "Dessin counts (hurwitz with dessin family)");
    sc->add_option("--family", args->family, "monotone or dessin");
    sc->add_option("--genus", args->genus, "Genus")->required();
    sc->add_option("--parts", args->parts, "Partition, e.g. 3,1");
    sc->add_option("--weight", args->weight, "All partitions of this weight");
    sc->add_flag("--times-mu", args->times_mu, "Multiply by the product of the parts");
    sc->add_option("--format", args->format, "json or csv");
    sc->callback([&run, &common, args] { run = [&common, args] { cmd_hurwitz(common, *args); }; });
  }

  WeingartenArgs wg;
  auto* wsc = app.add_subcommand("weingarten", "Grassmannian and unitary Weingarten tables");
  wsc->add_option("--k", wg.k, "Degree")->required();
  wsc->add_option("--method", wg.method, "character, orthogonality or both");
  wsc->add_option("--format", wg.format, "json or csv");
  wsc->callback([&] { run = [&] { cmd_weingarten(common, wg); }; });

  OracleArgs ora;
  auto* osc = app.add_subcommand("oracle", "Brute-force count next to the recursion");
  osc->add_option("--family", ora.family);
  osc->add_option("--genus", ora.genus)->required();
  osc->add_option("--parts", ora.parts)->required();
  osc->callback([&] { run = [&] { cmd_oracle(common, ora); }; });

  auto* roots = app.add_subcommand("roots", "Real-rootedness scans and large-genus root tables");
  roots->require_subcommand(1);
  roots->fallthrough();
  ScanArgs scan;
  auto* ssc = roots->add_subcommand("scan", "Real-rootedness and interlacing scan");
  ssc->add_option("--family", scan.family);
  ssc->add_option("--genera", scan.genera, "Comma-separated genera");
  ssc->add_option("--n-max", scan.n_max);
  ssc->add_option("--weight-max", scan.weight_max);
  ssc->add_option("--checks", scan.checks, "real,interlace");
  ssc->callback([&] { run = [&] { cmd_scan(common, scan); }; });
  TableArgs table;
  auto* tsc = roots->add_subcommand("table", "Roots of H_g(mu) over a range of genera");
  tsc->add_option("--parts", table.parts);
  tsc->add_option("--genus-from", table.genus_from);
  tsc->add_option("--genus-to", table.genus_to);
  tsc->add_option("--digits", table.digits);
  tsc->add_option("--format", table.format, "json or csv");
  tsc->callback([&] { run = [&] { cmd_table(common, table); }; });

  TrArgs tr;
  auto* trsc = app.add_subcommand("tr", "Topological recursion correlators and their expansions");
  trsc->add_option("--curve", tr.curve, "monotone or dessin");
  trsc->add_option("--gn", tr.gn, "G,N")->required();
  trsc->add_option("--orders", tr.orders, "Largest part extracted");
  trsc->add_flag("--raw", tr.raw, "Include the correlator itself");
  trsc->callback([&] { run = [&] { cmd_tr(common, tr); }; });

  auto* rsc = app.add_subcommand("report-appendix", "Recompute every published table cell");
  rsc->callback([&] { run = [&] { cmd_report(common); }; });

  PlotArgs plot;
  auto* psc = app.add_subcommand("plot", "SVG scatter of root locations");
  psc->add_option("--parts", plot.parts);
  psc->add_option("--genus-from", plot.genus_from);
  psc->add_option("--genus-to", plot.genus_to);
  psc->add_option("--digits", plot.digits);
  psc->callback([&] { run = [&] { cmd_plot(common, plot); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    run();
  } catch (const UsageError& e) {
    std::cerr << "dmh: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "dmh: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::NegativeWeight:
      case ErrorCode::BoundExceeded:
      case ErrorCode::DepthExceeded:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "dmh: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
