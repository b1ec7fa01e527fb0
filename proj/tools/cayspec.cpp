// Copyright 2026 The cayspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cayspec: batch front end for the verification and construction routines.
//
// Exit status: 0 when every check passes, 1 when a check reports a
// violation or failure, 2 on bad input.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayspec/character_cache.hpp"
#include "cayspec/characters.hpp"
#include "cayspec/constructions.hpp"
#include "cayspec/normal_spectra.hpp"
#include "cayspec/schreier.hpp"
#include "cayspec/table1.hpp"
#include "json.hpp"

namespace {

using cayspec::BigInt;
using cayspec::CycleType;
using cayspec::Partition;
using cayspec::Rational;
using nlohmann::ordered_json;

struct Globals {
  bool json = false;
  int workers = 1;
  std::string cache;
};

// One result line: a JSON object, or "key=value" pairs for people.
class Out {
 public:
  explicit Out(bool json) : json_(json) {}

  void emit(const ordered_json& record) {
    if (json_) {
      std::cout << record.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [key, value] : record.items()) {
      if (!first) std::cout << "  ";
      first = false;
      if (key == "record") {
        std::cout << std::left << std::setw(12) << value.get<std::string>();
        continue;
      }
      std::cout << key << '=' << plain(value);
    }
    std::cout << '\n';
  }

 private:
  static std::string plain(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += "; ";
        out += plain(v[i]);
      }
      return out + "}";
    }
    if (v.is_number_float()) {
      std::ostringstream s;
      s << std::setprecision(17) << v.get<double>();
      return s.str();
    }
    return v.dump();
  }

  bool json_;
};

std::string q(const Rational& r) { return cayspec::to_string(r); }
std::string p(const Partition& lambda) { return "(" + lambda.to_string() + ")"; }

ordered_json partitions_json(const std::vector<Partition>& list) {
  ordered_json a = ordered_json::array();
  for (const auto& x : list) a.push_back(p(x));
  return a;
}

double real(double x) { return x; }

void progress(const std::string& text) { std::cerr << text << std::endl; }

// --- Commands -----------------------------------------------------------

int cmd_rule(const Globals& g, int n, const std::string& type_text) {
  Out out(g.json);
  CycleType mu = CycleType::parse(type_text);
  if (mu.size() != n) throw cayspec::InputError("cycle type " + mu.to_string() + " is not of n=" + std::to_string(n));
  auto rule = cayspec::ruling_set(n, mu);
  ordered_json rec = {{"record", "rule"}, {"n", n}, {"class", mu.to_string()}, {"value", q(rule.value)},
                      {"irreps", partitions_json(rule.irreps)}};
  if (n >= 8) {
    auto eight = cayspec::eight_max(n, mu);
    rec["eight_max"] = q(eight.value);
    rec["eight_argmax"] = partitions_json(eight.argmax);
    rec["beats_eight"] = rule.value > eight.value;
  }
  out.emit(rec);
  return 0;
}

int cmd_lambda(const Globals& g, int n, const std::vector<std::string>& terms) {
  Out out(g.json);
  cayspec::NormalElement sigma(n);
  for (const auto& t : terms) {
    auto eq = t.find('=');
    Rational alpha = eq == std::string::npos ? Rational(1) : cayspec::parse_rational(t.substr(eq + 1));
    sigma.add(CycleType::parse(t.substr(0, eq)), alpha);
  }
  auto r = cayspec::lambda_nontrivial(sigma);
  out.emit({{"record", "lambda"}, {"n", n}, {"total", q(r.total)}, {"lambda", q(r.lambda)},
            {"gap", q(r.gap)}, {"argmax", partitions_json(r.argmax)}});
  return 0;
}

int cmd_scan(const Globals& g, int from, int to, bool eight_only, bool prune, double eps) {
  Out out(g.json);
  std::size_t total = 0;
  for (int n = from; n <= to; ++n) {
    progress("scan: n=" + std::to_string(n));
    cayspec::ScanOptions opts;
    opts.workers = g.workers;
    opts.eight_only = eight_only;
    opts.prune = prune;
    opts.prune_eps = eps;
    auto report = cayspec::check_eight_theorem(n, opts);
    std::size_t pruned = 0;
    for (const auto& c : report.classes) {
      pruned += c.pruned;
      if (eight_only) {
        out.emit({{"record", "eight"}, {"n", n}, {"class", c.mu.to_string()}, {"value", q(c.eight.value)},
                  {"argmax", partitions_json(c.eight.argmax)}});
      } else if (c.violation) {
        out.emit({{"record", "violation"}, {"n", n}, {"class", c.mu.to_string()},
                  {"global_value", q(c.global->value)}, {"global_argmax", partitions_json(c.global->irreps)},
                  {"eight_value", q(c.eight.value)}, {"eight_argmax", partitions_json(c.eight.argmax)}});
      }
    }
    ordered_json summary = {{"record", "scan"}, {"n", n}, {"classes", report.classes.size()}};
    if (eight_only) {
      summary["violations"] = nullptr;
    } else {
      summary["violations"] = report.violation_count();
      total += report.violation_count();
    }
    summary["exhaustive"] = report.exhaustive;
    if (prune) summary["pruned"] = pruned;
    out.emit(summary);
  }
  return total == 0 ? 0 : 1;
}

int cmd_audit_dims(const Globals& g, int from, int to, int outside, const std::string& exp_text) {
  Out out(g.json);
  Rational exponent = cayspec::parse_rational(exp_text);
  std::size_t failures = 0;
  for (int n = from; n <= to; ++n) {
    auto r = cayspec::dims_audit(n, outside, exponent);
    failures += r.failures.size();
    for (const auto& f : r.failures) {
      out.emit({{"record", "dim-failure"}, {"n", n}, {"irrep", p(f)}, {"dimension", cayspec::dimension(f).str()}});
    }
    ordered_json rec = {{"record", "audit-dims"}, {"n", n},           {"outside", outside},
                        {"exponent", q(exponent)},  {"checked", r.checked}, {"failures", r.failures.size()}};
    rec["min_dimension"] = r.min_dimension ? ordered_json(r.min_dimension->str()) : ordered_json(nullptr);
    rec["argmin"] = r.argmin ? ordered_json(p(*r.argmin)) : ordered_json(nullptr);
    out.emit(rec);
  }
  return failures == 0 ? 0 : 1;
}

int cmd_table1_check(const Globals& g, int max_n) {
  Out out(g.json);
  std::size_t cases = 0, mismatches = 0;
  for (const auto& f : cayspec::all_families(true)) {
    for (int n = std::max(1, 2 * f.k()); n <= max_n; ++n) {
      Partition lambda = cayspec::family_member(f, n);
      for (const auto& mu : cayspec::enumerate_cycle_types(n)) {
        ++cases;
        BigInt poly = cayspec::table1_character(f, mu);
        BigInt mn = cayspec::mn_character(lambda, mu);
        if (poly != mn) {
          ++mismatches;
          out.emit({{"record", "table1-mismatch"}, {"family", f.tag()}, {"n", n}, {"class", mu.to_string()},
                    {"polynomial", poly.str()}, {"mn", mn.str()}});
        }
      }
    }
  }
  out.emit({{"record", "table1-check"}, {"max_n", max_n}, {"cases", cases}, {"mismatches", mismatches}});
  return mismatches == 0 ? 0 : 1;
}

int cmd_tables23_check(const Globals& g, int from, int to, int max_c1) {
  Out out(g.json);
  std::size_t total = 0;
  for (int n = from; n <= to; ++n) {
    auto r = cayspec::check_table23(n, max_c1, g.workers);
    for (const auto& m : r.mismatches) {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < m.predicted.size(); ++i) {
        rows.push_back({{"irrep", p(m.predicted[i].irrep)}, {"condition", m.predicted[i].condition},
                        {"value", q(m.predicted_values[i])}});
      }
      out.emit({{"record", "table23-mismatch"}, {"n", n}, {"class", m.mu.to_string()}, {"predicted", rows},
                {"eight_max", q(m.eight.value)}, {"eight_argmax", partitions_json(m.eight.argmax)}});
    }
    total += r.mismatches.size();
    out.emit({{"record", "tables23-check"}, {"n", n}, {"max_c1", max_c1}, {"checked", r.checked},
              {"multi_row", r.multi_row}, {"mismatches", r.mismatches.size()}});
  }
  return total == 0 ? 0 : 1;
}

int cmd_gap_check(const Globals& g, int from, int to, int random, unsigned seed) {
  Out out(g.json);
  std::size_t failures = 0;
  std::mt19937 rng(seed);
  for (int n = from; n <= to; ++n) {
    progress("gap-check: n=" + std::to_string(n));
    auto r = cayspec::check_gap_per_class(n, g.workers);
    for (const auto& v : r.violations) {
      out.emit({{"record", "gap-violation"}, {"n", n}, {"class", v.mu.to_string()}, {"irrep", p(v.irrep)},
                {"value", q(v.value)}, {"limit", q(v.limit)}});
    }
    failures += r.violations.size();
    auto types = cayspec::enumerate_cycle_types(n);
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    std::uniform_int_distribution<int> num(1, 20), support(1, 8);
    std::size_t random_failures = 0;
    for (int t = 0; t < random; ++t) {
      cayspec::NormalElement sigma(n);
      for (int s = support(rng); s > 0; --s) sigma.add(types[pick(rng)], Rational(num(rng), num(rng)));
      auto gr = cayspec::check_gap_theorem(sigma);
      if (!gr.holds) {
        ++random_failures;
        out.emit({{"record", "gap-random-failure"}, {"n", n}, {"trial", t}, {"gap", q(gr.gap)},
                  {"bound", q(gr.bound)}});
      }
    }
    failures += random_failures;
    out.emit({{"record", "gap-check"}, {"n", n}, {"delta", q(cayspec::gap_delta(n))},
              {"pairs_checked", r.pairs_checked}, {"violations", r.violations.size()},
              {"random_elements", random}, {"random_failures", random_failures}});
  }
  return failures == 0 ? 0 : 1;
}

int cmd_lemma211_check(const Globals& g, int from, int to) {
  Out out(g.json);
  std::size_t total = 0;
  for (int n = from; n <= to; ++n) {
    auto r = cayspec::check_lemma_211(n, g.workers);
    for (const auto& [mu, v] : r.violations) {
      out.emit({{"record", "lemma211-violation"}, {"n", n}, {"class", mu.to_string()}, {"value", q(v)},
                {"bound", q(r.bound)}});
    }
    total += r.violations.size();
    out.emit({{"record", "lemma211-check"}, {"n", n}, {"bound", q(r.bound)}, {"checked", r.checked},
              {"min_value", q(r.min_value)}, {"argmin", r.argmin.to_string()},
              {"violations", r.violations.size()}});
  }
  return total == 0 ? 0 : 1;
}

int cmd_construct(const Globals& g, int n, int k, int m, bool indicator, const std::string& spec_out) {
  Out out(g.json);
  if (m == 0) m = 2 * k;
  if (indicator) {
    auto v = cayspec::build_indicator_variant(n, k, m);
    for (std::size_t i = 0; i < v.classes.size(); ++i) {
      out.emit({{"record", "indicator-row"}, {"class", v.classes[i].to_string()}, {"induced", q(v.induced[i])},
                {"target", q(v.target[i])}});
    }
    auto ann = cayspec::verify_annihilation(v.sigma, k);
    out.emit({{"record", "indicator"}, {"n", n}, {"k", k}, {"m", m}, {"residual", real(v.residual)},
              {"annihilated", ann.all_zero}});
    return 0;
  }
  auto spec = cayspec::build_annihilator(n, k, m);
  if (!spec_out.empty()) {
    std::ofstream f(spec_out);
    if (!f) throw cayspec::InputError("cannot write '" + spec_out + "'");
    cayspec::write_annihilator_spec(spec, f);
  }
  for (const auto& r : spec.rows) {
    out.emit({{"record", "annihilator-row"}, {"counts", cayspec::counts_to_string(r.counts)},
              {"probability", q(r.probability)}, {"class", r.cls.to_string()}, {"alpha", q(r.alpha)}});
  }
  auto audit = cayspec::audit_annihilator(spec);
  auto sigma = spec.element();
  auto ann = cayspec::verify_annihilation(sigma, k);
  for (const auto& v : ann.values) {
    out.emit({{"record", "annihilated"}, {"irrep", p(v.irrep)}, {"eigenvalue", q(v.eigenvalue)}});
  }
  auto beat = cayspec::find_beating_irrep(sigma, k);
  for (const auto& v : beat) {
    out.emit({{"record", "beating"}, {"irrep", p(v.irrep)}, {"eigenvalue", q(v.eigenvalue)}});
  }
  const bool ok = audit.distribution_matches && audit.all_odd && audit.prefixes_match && audit.floor_holds &&
                  ann.all_zero && !beat.empty();
  out.emit({{"record", "construct"}, {"n", n}, {"k", k}, {"m", m}, {"experimental", spec.experimental},
            {"realization", "canonical"}, {"total_weight", q(audit.total_weight)},
            {"distribution_matches", audit.distribution_matches}, {"all_odd", audit.all_odd},
            {"floor_holds", audit.floor_holds}, {"annihilated", ann.all_zero}, {"beating", beat.size()},
            {"ok", ok}});
  return ok ? 0 : 1;
}

int cmd_schreier(const Globals& g, int n, const std::string& example, double tol, const std::string& matrix_out,
                 const std::string& spectrum_out) {
  Out out(g.json);
  if (example != "cycle-transposition") throw cayspec::InputError("unknown example '" + example + "'");
  auto s = cayspec::WeightedGenSet::cycle_transposition(n);
  if (!matrix_out.empty()) {
    std::ofstream f(matrix_out);
    if (!f) throw cayspec::InputError("cannot write '" + matrix_out + "'");
    cayspec::write_matrix_market(cayspec::action_matrix(s, 2, true, g.workers), f);
  }
  auto a = cayspec::attribute_blocks(s, tol, g.workers);
  if (!spectrum_out.empty()) {
    std::ofstream f(spectrum_out);
    if (!f) throw cayspec::InputError("cannot write '" + spectrum_out + "'");
    cayspec::write_spectrum_csv(a.ordered_spectrum, f);
  }
  const double n3 = static_cast<double>(n) * n * n;
  const double gap = 1 - a.top_nontrivial();
  const double points_gap = 1 - a.standard.front();
  auto w = cayspec::rayleigh_witness(n, g.workers);
  ordered_json winners = ordered_json::array();
  for (const auto& x : a.winners(tol)) winners.push_back(x);
  const bool std_wins = std::find(winners.begin(), winners.end(), "(n-1,1)") != winners.end();
  out.emit({{"record", "schreier"},
            {"n", n},
            {"example", example},
            {"top_standard", a.standard.front()},
            {"top_two_row", a.two_row.front()},
            {"top_hook", a.hook.front()},
            {"winners", winners},
            {"gap", gap},
            {"gap_times_n3", gap * n3},
            {"points_gap_times_n2", points_gap * n * n},
            {"rayleigh_quotient", w.quotient},
            {"rayleigh_over_6_n3", w.ratio},
            {"diameter_estimate", cayspec::diameter_estimate(n, gap)},
            {"residual", a.residual}});
  const bool ok = gap >= 1 / (18 * n3) && points_gap >= 1 / (32.0 * n * n) && !std_wins;
  return ok ? 0 : 1;
}

int cmd_oracle(const Globals& g, int n, int trials, unsigned seed, const std::string& mode) {
  Out out(g.json);
  std::mt19937 rng(seed);
  std::size_t failures = 0;
  for (int t = 0; t < trials; ++t) {
    double worst = 0;
    if (mode == "normal") {
      cayspec::NormalElement sigma(n);
      std::uniform_int_distribution<int> num(0, 6);
      for (const auto& c : cayspec::enumerate_cycle_types(n)) sigma.add(c, Rational(num(rng), 4));
      auto oracle = cayspec::cayley_oracle(sigma);
      std::vector<double> expected;
      for (const auto& lambda : cayspec::enumerate_partitions(n)) {
        long d = static_cast<long>(cayspec::dimension(lambda));
        expected.insert(expected.end(), d * d, cayspec::to_double(cayspec::eigenvalue(sigma, lambda)));
      }
      std::sort(expected.begin(), expected.end(), std::greater<>());
      for (std::size_t i = 0; i < expected.size(); ++i) worst = std::max(worst, std::abs(expected[i] - oracle.values[i]));
    } else if (mode == "transpositions") {
      std::uniform_real_distribution<double> u(0, 1);
      std::vector<double> w(n * (n - 1) / 2);
      for (auto& x : w) x = u(rng);
      auto s = cayspec::WeightedGenSet::transpositions(n, w);
      auto oracle = cayspec::cayley_oracle(s);
      worst = std::abs(oracle.lambda_nontrivial - cayspec::attribute_blocks(s).standard.front());
    } else {
      throw cayspec::InputError("unknown oracle mode '" + mode + "'");
    }
    const bool ok = worst <= 1e-8;
    failures += !ok;
    out.emit({{"record", "oracle"}, {"n", n}, {"mode", mode}, {"trial", t}, {"max_error", worst}, {"ok", ok}});
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cayspec: spectra of normal Cayley graphs of S_n"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "one JSON record per line");
  app.add_option("--workers", g.workers, "worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache, "character cache file (default: $CAYSPEC_CACHE)");

  int n = 0, from = 0, to = 0, k = 2, m = 0, outside = 3, max_n = 14, max_c1 = 1, random = 100, trials = 20;
  unsigned seed = 1;
  std::string type_text, exp_text = "41/20", example = "cycle-transposition", mode = "normal";
  std::string matrix_out, spectrum_out, spec_out;
  std::vector<std::string> terms;
  bool eight_only = false, prune = false, indicator = false;
  double eps = 0.1, tol = 1e-8;
  std::function<int()> run;

  auto* rule = app.add_subcommand("rule", "ruling irreps of one cycle type");
  rule->add_option("n", n)->required();
  rule->add_option("class", type_text, "cycle type, e.g. \"5^3 1^1\"")->required();
  rule->callback([&] { run = [&] { return cmd_rule(g, n, type_text); }; });

  auto* lambda = app.add_subcommand("lambda", "largest nontrivial eigenvalue of a normal element");
  lambda->add_option("n", n)->required();
  lambda->add_option("terms", terms, "\"TYPE=alpha\" terms, alpha defaults to 1")->required();
  lambda->callback([&] { run = [&] { return cmd_lambda(g, n, terms); }; });

  auto* scan = app.add_subcommand("scan", "check that one of the eight families rules every class");
  scan->add_option("from", from)->required();
  scan->add_option("to", to)->required();
  scan->add_flag("--eight-only", eight_only, "family polynomial values only, no full scan");
  scan->add_flag("--prune", prune, "heuristic pruning with ls_bound");
  scan->add_option("--eps", eps, "epsilon for --prune");
  scan->callback([&] { run = [&] { return cmd_scan(g, from, to, eight_only, prune, eps); }; });

  auto* audit = app.add_subcommand("audit-dims", "dim >= n^exp over deep irreps");
  audit->add_option("--n", from)->required();
  audit->add_option("--n-to", to, "last n (default: --n)");
  audit->add_option("--outside", outside, "minimum blocks outside first row and column");
  audit->add_option("--exp", exp_text, "exponent as p/q or decimal");
  audit->callback([&] { run = [&] { return cmd_audit_dims(g, from, std::max(from, to), outside, exp_text); }; });

  auto* t1 = app.add_subcommand("table1-check", "family polynomials against Murnaghan-Nakayama");
  t1->add_option("--max-n", max_n);
  t1->callback([&] { run = [&] { return cmd_table1_check(g, max_n); }; });

  auto* t23 = app.add_subcommand("tables23-check", "ruling rows by short cycle counts (report)");
  t23->add_option("--n", from)->required();
  t23->add_option("--n-to", to);
  t23->add_option("--max-c1", max_c1);
  t23->callback([&] { run = [&] { return cmd_tables23_check(g, from, std::max(from, to), max_c1); }; });

  auto* gap = app.add_subcommand("gap-check", "gap against the standard gap times (1 - delta_n)");
  gap->add_option("from", from)->required();
  gap->add_option("to", to)->required();
  gap->add_option("--random", random, "random normal elements per n");
  gap->add_option("--seed", seed);
  gap->callback([&] { run = [&] { return cmd_gap_check(g, from, to, random, seed); }; });

  auto* l211 = app.add_subcommand("lemma211-check", "eight_max >= 3/(n(n-2)(n-4))");
  l211->add_option("from", from)->required();
  l211->add_option("to", to)->required();
  l211->callback([&] { run = [&] { return cmd_lemma211_check(g, from, to); }; });

  auto* construct = app.add_subcommand("construct", "annihilating normal element");
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k);
  construct->add_option("--m", m, "size of the reference group (default 2k)");
  construct->add_flag("--indicator", indicator, "best-effort 0-1 coefficient variant");
  construct->add_option("--spec-out", spec_out, "write the spec record file");
  construct->callback([&] { run = [&] { return cmd_construct(g, n, k, m, indicator, spec_out); }; });

  auto* schreier = app.add_subcommand("schreier", "actions on points and pairs");
  schreier->add_option("--n", n)->required();
  schreier->add_option("--example", example);
  schreier->add_option("--tol", tol, "multiset matching tolerance");
  schreier->add_option("--matrix-out", matrix_out, "ordered-pairs matrix, MatrixMarket");
  schreier->add_option("--spectrum-out", spectrum_out, "ordered-pairs spectrum, CSV");
  schreier->callback([&] { run = [&] { return cmd_schreier(g, n, example, tol, matrix_out, spectrum_out); }; });

  auto* oracle = app.add_subcommand("oracle", "brute-force Cayley spectra (n <= 6)");
  oracle->add_option("--n", n)->required();
  oracle->add_option("--trials", trials);
  oracle->add_option("--seed", seed);
  oracle->add_option("--mode", mode, "normal | transpositions");
  oracle->callback([&] { run = [&] { return cmd_oracle(g, n, trials, seed, mode); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (g.cache.empty()) {
    if (const char* env = std::getenv("CAYSPEC_CACHE")) g.cache = env;
  }
  try {
    if (!g.cache.empty()) {
      std::size_t loaded = cayspec::load_character_cache(cayspec::default_engine(), g.cache);
      progress("cache: loaded " + std::to_string(loaded) + " values from " + g.cache);
    }
    int status = run();
    if (!g.cache.empty()) cayspec::save_character_cache(cayspec::default_engine(), g.cache);
    return status;
  } catch (const cayspec::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
