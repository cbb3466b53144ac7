// Copyright 2026 The ri1d Authors.
//
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

// ri1d: command-line front end for the one-dimensional interlacement
// library. Every subcommand writes a CSV table (header always present) or
// a single JSON object.
//
// Exit codes: 0 success, 1 a verdict failed, 2 usage or precondition
// error, 3 any other runtime failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ri1d/acceptance.hpp"
#include "ri1d/capacity.hpp"
#include "ri1d/errors.hpp"
#include "ri1d/interlacements.hpp"
#include "ri1d/mc_harness.hpp"
#include "ri1d/ring_kernel.hpp"
#include "ri1d/version.hpp"
#include "ri1d/walks.hpp"

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  json summary = json::object();
  Table table;
  std::vector<ri1d::Verdict> verdicts;
  bool seeded = false;
};

struct Common {
  std::uint64_t seed = 20261016;
  int workers = 0;
  std::string format = "csv";
  std::string out;

  ri1d::RunOptions run() const { return {seed, workers}; }
};

std::string sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::isfinite(v) ? std::strtod(sig12(v).c_str(), nullptr) : v; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return sig12(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, c);
}

json cell_json(const Cell& c) {
  struct {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(std::int64_t v) const { return v; }
    json operator()(double v) const {
      return std::isfinite(v) ? json(round12(v)) : json(sig12(v));
    }
    json operator()(const std::string& v) const { return v; }
    json operator()(bool v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

Table verdict_table(const std::vector<ri1d::Verdict>& verdicts) {
  Table t{{"label", "statistic", "threshold", "pass", "context"}, {}};
  for (const auto& v : verdicts) {
    t.rows.push_back({v.label, v.statistic, v.threshold, v.pass, v.context});
  }
  return t;
}

json verdicts_json(const std::vector<ri1d::Verdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) {
    out.push_back({{"label", v.label},
                   {"statistic", cell_json(v.statistic)},
                   {"threshold", cell_json(v.threshold)},
                   {"pass", v.pass},
                   {"context", v.context}});
  }
  return out;
}

// Echo of the options of the selected subcommand, numbers as numbers.
json option_values(const CLI::App& sub) {
  json out = json::object();
  for (const CLI::Option* o : sub.get_options()) {
    const std::string name = o->get_single_name();
    if (name == "help" || name == "h") continue;
    std::vector<std::string> values = o->results();
    if (values.empty() && !o->get_default_str().empty()) values = {o->get_default_str()};
    if (values.empty()) continue;
    json arr = json::array();
    for (const auto& s : values) {
      char* end = nullptr;
      const double d = std::strtod(s.c_str(), &end);
      if (!s.empty() && end == s.c_str() + s.size()) {
        arr.push_back(d == std::floor(d) && std::fabs(d) < 9e15 ? json(static_cast<std::int64_t>(d))
                                                                : json(d));
      } else {
        arr.push_back(s);
      }
    }
    out[name] = arr.size() == 1 ? arr[0] : arr;
  }
  return out;
}

void emit(const std::string& command, const CLI::App& sub, const Report& report,
          const Common& common, double wall_seconds) {
  std::ostringstream text;
  if (common.format == "json") {
    json doc = json::object();
    doc["command"] = command;
    doc["version"] = ri1d::kVersion;
    doc["inputs"] = option_values(sub);
    doc["seed"] = report.seeded ? json(common.seed) : json(nullptr);
    doc["wall_time_s"] = round12(wall_seconds);
    if (!report.summary.empty()) doc["summary"] = report.summary;
    json rows = json::array();
    for (const auto& r : report.table.rows) {
      json row = json::object();
      for (std::size_t i = 0; i < r.size(); ++i) row[report.table.columns[i]] = cell_json(r[i]);
      rows.push_back(row);
    }
    doc["results"] = rows;
    doc["verdicts"] = verdicts_json(report.verdicts);
    bool pass = true;
    for (const auto& v : report.verdicts) pass = pass && v.pass;
    doc["pass"] = pass;
    text << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < report.table.columns.size(); ++i) {
      text << (i ? "," : "") << csv_field(report.table.columns[i]);
    }
    text << '\n';
    for (const auto& r : report.table.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) text << (i ? "," : "") << csv_field(cell_text(r[i]));
      text << '\n';
    }
  }
  if (common.out.empty()) {
    std::cout << text.str() << std::flush;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + common.out);
    f << text.str();
  }
}

// Empirical pmf next to a reference pmf, over the union of supports.
Table pmf_table(const ri1d::EmpiricalSummary& s, const std::vector<double>& ref) {
  Table t{{"value", "empirical", "reference"}, {}};
  std::int64_t top = static_cast<std::int64_t>(ref.size()) - 1;
  if (!s.counts.empty()) top = std::max(top, s.counts.rbegin()->first);
  for (std::int64_t v = 0; v <= top; ++v) {
    const double r = v < static_cast<std::int64_t>(ref.size()) ? ref[static_cast<std::size_t>(v)] : 0.0;
    const double e = s.frequency(v);
    if (e == 0.0 && r < 1e-15) continue;
    t.rows.push_back({v, e, r});
  }
  return t;
}

std::int64_t resolve_horizon(const std::optional<std::int64_t>& t,
                             const std::optional<double>& alpha, std::int64_t n) {
  if (t) return *t;
  if (alpha) {
    const std::int64_t scale = ri1d::ring_time_scale(n, *alpha);
    if (scale == 0) std::cerr << "warning: time scale is 0 for this n and alpha\n";
    return scale;
  }
  throw ri1d::ConfigError("give --t or --alpha");
}

std::string u128_text(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional random interlacements: exact laws, samplers and checks"};
  app.set_version_flag("--version", std::string(ri1d::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  if (const char* env = std::getenv("RI1D_WORKERS")) common.workers = std::atoi(env);
  app.add_option("--seed", common.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--workers", common.workers, "Worker threads (default RI1D_WORKERS or all cores)")
      ->check(CLI::NonNegativeNumber);
  CLI::Option* format_opt = app.add_option("--format", common.format,
                                           "Output format (default csv, or json for --out *.json)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out, "Write output to this file instead of stdout");

  struct Entry {
    CLI::App* sub;
    std::string name;
    std::function<Report()> run;
  };
  std::vector<Entry> entries;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto pos = CLI::PositiveNumber;

  // vacant-exact
  double ve_alpha = 1.0;
  std::int64_t ve_min = 0, ve_max = 0;
  {
    auto* s = add(&app, "vacant-exact", "P[[min, max] is vacant] = exp(-alpha cap_hat)");
    s->add_option("--alpha", ve_alpha)->check(pos)->capture_default_str();
    s->add_option("--min", ve_min)->required();
    s->add_option("--max", ve_max)->required();
    entries.push_back({s, "vacant-exact", [&] {
      const ri1d::IntervalSet set(ve_min, ve_max);
      const ri1d::Level level(ve_alpha);
      Report r;
      r.table = {{"alpha", "min", "max", "capacity_hat", "prob"},
                 {{ve_alpha, ve_min, ve_max, ri1d::capacity_hat(set),
                   ri1d::vacant_prob_exact(set, level)}}};
      return r;
    }});
  }

  // capacity
  std::int64_t cap_min = 0, cap_max = 0;
  {
    auto* s = add(&app, "capacity", "Capacity, capacity with the origin, equilibrium measure");
    s->add_option("--min", cap_min)->required();
    s->add_option("--max", cap_max)->required();
    entries.push_back({s, "capacity", [&] {
      const ri1d::IntervalSet set(cap_min, cap_max);
      Report r;
      r.table = {{"min", "max", "capacity", "capacity_hat"},
                 {{cap_min, cap_max, ri1d::capacity(set), ri1d::capacity_hat(set)}}};
      json masses = json::object();
      for (const auto& [site, m] : ri1d::equilibrium_measure(set).masses) {
        masses[std::to_string(site)] = round12(m);
      }
      r.summary["equilibrium_measure"] = masses;
      return r;
    }});
  }

  // sample-window
  double sw_alpha = 1.0;
  std::int64_t sw_l = 8, sw_lo = 0, sw_hi = 2, sw_m = 100000;
  {
    auto* s = add(&app, "sample-window", "Vacancy frequency of [lo, hi] from window samples");
    s->add_option("--alpha", sw_alpha)->check(pos)->capture_default_str();
    s->add_option("--L", sw_l, "Window half width")->check(pos)->capture_default_str();
    s->add_option("--lo", sw_lo)->capture_default_str();
    s->add_option("--hi", sw_hi)->capture_default_str();
    s->add_option("--samples", sw_m)->check(pos)->capture_default_str();
    entries.push_back({s, "sample-window", [&] {
      const ri1d::Level level(sw_alpha);
      if (sw_lo > sw_hi || sw_lo < -sw_l || sw_hi > sw_l) {
        throw ri1d::ConfigError("need -L <= lo <= hi <= L");
      }
      const auto sum = ri1d::run_replicates(
          [&](ri1d::Rng& rng) { return ri1d::sample_window(level, sw_l, rng).vacant(sw_lo, sw_hi); },
          sw_m, common.run().replicate());
      const double p = sum.frequency(1);
      const auto band = ri1d::binomial_band(p, sw_m, 4.0);
      Report r;
      r.seeded = true;
      r.table = {{"alpha", "L", "lo", "hi", "samples", "vacant_freq", "band_lo", "band_hi", "exact"},
                 {{sw_alpha, sw_l, sw_lo, sw_hi, sw_m, p, band.lo, band.hi,
                   ri1d::vacant_prob_exact(ri1d::IntervalSet(sw_lo, sw_hi), level)}}};
      return r;
    }});
  }

  // sample-localtime
  double sl_alpha = 1.0;
  std::int64_t sl_x = 3, sl_m = 100000;
  {
    auto* s = add(&app, "sample-localtime", "Empirical local-time pmf next to the exact pmf");
    s->add_option("--alpha", sl_alpha)->check(pos)->capture_default_str();
    s->add_option("--x", sl_x)->check(pos)->capture_default_str();
    s->add_option("--samples", sl_m)->check(pos)->capture_default_str();
    entries.push_back({s, "sample-localtime", [&] {
      const ri1d::Level level(sl_alpha);
      const auto law = ri1d::local_time_pmf(sl_x, level);
      const auto sum = ri1d::run_replicates(
          [&](ri1d::Rng& rng) { return ri1d::sample_local_time(sl_x, level, rng); }, sl_m,
          common.run().replicate());
      Report r;
      r.seeded = true;
      r.table = pmf_table(sum, law.pmf);
      r.summary = {{"mean", round12(sum.mean)},
                   {"variance", round12(sum.variance())},
                   {"exact_mean", round12(ri1d::local_time_mean(sl_x, level))},
                   {"exact_variance", round12(ri1d::local_time_variance(sl_x, level))},
                   {"tv", round12(ri1d::tv_distance(sum, law.pmf))}};
      return r;
    }});
  }

  // localtime-pmf
  double lp_alpha = 1.0;
  std::int64_t lp_x = 3;
  std::optional<std::int64_t> lp_smax;
  {
    auto* s = add(&app, "localtime-pmf", "Exact local-time pmf by Panjer recursion");
    s->add_option("--alpha", lp_alpha)->check(pos)->capture_default_str();
    s->add_option("--x", lp_x)->check(pos)->capture_default_str();
    s->add_option("--smax", lp_smax, "Truncation point (default from a Chernoff bound)")
        ->check(CLI::NonNegativeNumber);
    entries.push_back({s, "localtime-pmf", [&] {
      const auto law = ri1d::local_time_pmf(lp_x, ri1d::Level(lp_alpha), lp_smax);
      if (law.truncation_warning) {
        std::cerr << "warning: truncated tail mass " << sig12(law.tail_mass) << '\n';
      }
      Report r;
      r.table.columns = {"s", "pmf"};
      for (std::size_t i = 0; i < law.pmf.size(); ++i) {
        r.table.rows.push_back({static_cast<std::int64_t>(i), law.pmf[i]});
      }
      r.summary = {{"tail_mass", round12(law.tail_mass)},
                   {"truncation_warning", law.truncation_warning},
                   {"mean", round12(law.mean())},
                   {"variance", round12(law.variance())}};
      return r;
    }});
  }

  // localtime-cf
  double lc_alpha = 1.0;
  std::int64_t lc_x = 3;
  std::vector<double> lc_t;
  {
    auto* s = add(&app, "localtime-cf", "Characteristic function of the local time");
    s->add_option("--alpha", lc_alpha)->check(pos)->capture_default_str();
    s->add_option("--x", lc_x)->check(pos)->capture_default_str();
    s->add_option("--t", lc_t, "One or more arguments")->required();
    entries.push_back({s, "localtime-cf", [&] {
      const ri1d::Level level(lc_alpha);
      Report r;
      r.table.columns = {"t", "re", "im", "abs"};
      for (double t : lc_t) {
        const auto z = ri1d::local_time_cf(lc_x, level, t);
        r.table.rows.push_back({t, z.real(), z.imag(), std::abs(z)});
      }
      return r;
    }});
  }

  // eval-h
  std::int64_t eh_n = 10, eh_x = 5, eh_t = 0;
  std::string eh_backend = "both";
  {
    auto* s = add(&app, "eval-h", "Survival kernel h_n(x, t)");
    s->add_option("--n", eh_n)->required();
    s->add_option("--x", eh_x)->required();
    s->add_option("--t", eh_t)->required();
    s->add_option("--backend", eh_backend)
        ->check(CLI::IsMember({"dp", "spectral", "asymptotic", "both"}))
        ->capture_default_str();
    entries.push_back({s, "eval-h", [&] {
      Report r;
      Cell dp, spectral, asym;
      if (eh_backend == "dp" || eh_backend == "both") dp = ri1d::h_dp(eh_n, eh_x, eh_t);
      if (eh_backend == "spectral" || eh_backend == "both") {
        spectral = ri1d::h_spectral(eh_n, eh_x, eh_t).raw;
      }
      if (eh_backend == "asymptotic") asym = ri1d::h_asymptotic(eh_n, eh_x, eh_t).value;
      r.table = {{"n", "x", "t", "dp", "spectral", "asymptotic", "in_regime"},
                 {{eh_n, eh_x, eh_t, dp, spectral, asym, ri1d::in_regime(eh_n, eh_t)}}};
      return r;
    }});
  }

  // ring-vacant-exact
  std::int64_t rv_n = 40, rv_x0 = 20, rv_a = 1, rv_b = 2;
  std::optional<std::int64_t> rv_t;
  std::optional<double> rv_alpha;
  {
    auto* s = add(&app, "ring-vacant-exact", "Exact ring vacancy of sites [-a, b]");
    s->add_option("--n", rv_n)->capture_default_str();
    s->add_option("--x0", rv_x0)->capture_default_str();
    s->add_option("--a", rv_a)->capture_default_str();
    s->add_option("--b", rv_b)->capture_default_str();
    s->add_option("--t", rv_t, "Horizon (default ring_time_scale(n, alpha))");
    s->add_option("--alpha", rv_alpha)->check(pos);
    entries.push_back({s, "ring-vacant-exact", [&] {
      const std::int64_t t = resolve_horizon(rv_t, rv_alpha, rv_n);
      Report r;
      Cell limit;
      if (rv_alpha) limit = std::exp(-*rv_alpha * static_cast<double>(rv_a + rv_b) / 2.0);
      r.table = {{"n", "t", "x0", "a", "b", "prob", "limit"},
                 {{rv_n, t, rv_x0, rv_a, rv_b,
                   ri1d::vacant_prob_ring_exact(rv_n, t, rv_x0, rv_a, rv_b), limit}}};
      return r;
    }});
  }

  // sample-ring
  std::int64_t sr_n = 40, sr_x0 = 20, sr_a = 1, sr_b = 2, sr_m = 20000;
  std::optional<std::int64_t> sr_t;
  std::optional<double> sr_alpha;
  {
    auto* s = add(&app, "sample-ring", "Vacancy frequency of [-a, b] from conditioned ring walks");
    s->add_option("--n", sr_n)->capture_default_str();
    s->add_option("--x0", sr_x0)->capture_default_str();
    s->add_option("--a", sr_a)->capture_default_str();
    s->add_option("--b", sr_b)->capture_default_str();
    s->add_option("--t", sr_t, "Horizon (default ring_time_scale(n, alpha))");
    s->add_option("--alpha", sr_alpha)->check(pos);
    s->add_option("--samples", sr_m)->check(pos)->capture_default_str();
    entries.push_back({s, "sample-ring", [&] {
      const std::int64_t t = resolve_horizon(sr_t, sr_alpha, sr_n);
      const double exact = ri1d::vacant_prob_ring_exact(sr_n, t, sr_x0, sr_a, sr_b);
      const ri1d::RingConfig cfg{sr_n, t, sr_x0, sr_alpha};
      const auto kernel = ri1d::SurvivalKernel::dp_table(sr_n, t);
      const auto sum = ri1d::run_replicates(
          [&](ri1d::Rng& rng) {
            const auto tr = ri1d::sample_ring_trace(cfg, kernel, 0, rng);
            return tr.min_site > sr_b && tr.max_site < sr_n - sr_a;
          },
          sr_m, common.run().replicate());
      const double p = sum.frequency(1);
      const auto band = ri1d::binomial_band(p, sr_m, 4.0);
      Report r;
      r.seeded = true;
      r.table = {{"n", "t", "x0", "a", "b", "samples", "vacant_freq", "band_lo", "band_hi", "exact"},
                 {{sr_n, t, sr_x0, sr_a, sr_b, sr_m, p, band.lo, band.hi, exact}}};
      return r;
    }});
  }

  // ring-localtime
  std::int64_t rl_n = 24, rl_x = 2, rl_m = 20000;
  double rl_alpha = 1.0;
  {
    auto* s = add(&app, "ring-localtime",
                  "Local time at x of the conditioned walk on the ring of 2n sites");
    s->add_option("--n", rl_n, "Half ring size")->check(pos)->capture_default_str();
    s->add_option("--alpha", rl_alpha)->check(pos)->capture_default_str();
    s->add_option("--x", rl_x)->check(pos)->capture_default_str();
    s->add_option("--samples", rl_m)->check(pos)->capture_default_str();
    entries.push_back({s, "ring-localtime", [&] {
      const ri1d::RingLocalTimeSampler sampler(rl_n, rl_alpha, rl_x);
      const auto law = ri1d::local_time_pmf(rl_x, ri1d::Level(rl_alpha));
      const auto sum = ri1d::run_replicates(
          [&](ri1d::Rng& rng) { return sampler.sample(rng); }, rl_m, common.run().replicate());
      Report r;
      r.seeded = true;
      r.table = pmf_table(sum, law.pmf);
      r.summary = {{"t", sampler.config().t_total},
                   {"mean", round12(sum.mean)},
                   {"tv_to_limit", round12(ri1d::tv_distance(sum, law.pmf))}};
      return r;
    }});
  }

  // count-paths
  std::int64_t cp_x = 1, cp_delta = 0, cp_k = 1;
  {
    auto* s = add(&app, "count-paths", "Paths from x to k of a given length avoiding 0");
    s->add_option("--x", cp_x)->required();
    s->add_option("--delta", cp_delta)->required();
    s->add_option("--k", cp_k)->required();
    entries.push_back({s, "count-paths", [&] {
      Report r;
      Cell exact;
      if (cp_delta <= ri1d::kExactPathCountMaxLength) {
        exact = u128_text(ri1d::count_paths(cp_x, cp_delta, cp_k));
      }
      r.table = {{"x", "delta", "k", "count", "log_count"},
                 {{cp_x, cp_delta, cp_k, exact, ri1d::log_count_paths(cp_x, cp_delta, cp_k)}}};
      return r;
    }});
  }

  // verify
  CLI::App* verify = add(&app, "verify", "Run one check and report its verdicts");
  verify->require_subcommand(1);
  auto add_verify = [&](const std::string& name, const std::string& help, bool seeded,
                        std::function<std::vector<ri1d::Verdict>()> body) {
    auto* s = add(verify, name, help);
    entries.push_back({s, "verify " + name, [body, seeded] {
      Report r;
      r.seeded = seeded;
      r.verdicts = body();
      r.table = verdict_table(r.verdicts);
      return r;
    }});
    return s;
  };

  std::int64_t vm_xmax = 1000000, vm_first = 10000;
  {
    auto* s = add_verify("martingale", "Martingale defect and first-step identities", false,
                         [&] { return ri1d::check_exact_identities(vm_xmax, vm_first); });
    s->add_option("--xmax", vm_xmax)->check(CLI::Range(2, 1000000000))->capture_default_str();
    s->add_option("--first-step-max", vm_first)->check(pos)->capture_default_str();
  }
  std::int64_t vh_m = 100000;
  {
    auto* s = add_verify("hitting", "Hitting and escape frequencies against closed forms", true,
                         [&] { return ri1d::check_hitting_mc(vh_m, common.run()); });
    s->add_option("--samples", vh_m)->check(pos)->capture_default_str();
  }
  std::int64_t vp_n = 200;
  std::vector<std::int64_t> vp_a = {1, 50, 100};
  {
    auto* s = add_verify("pi4", "Conditional sine average at the regime horizon", false,
                         [&] { return ri1d::check_pi4(vp_n, vp_a); });
    s->add_option("--n", vp_n)->capture_default_str();
    s->add_option("--a", vp_a, "Start sites")->capture_default_str();
  }
  std::int64_t vmt_n = 40;
  {
    auto* s = add_verify("mid-tail", "Mid-interval tail against its bound", false,
                         [&] { return ri1d::check_mid_tail(vmt_n); });
    s->add_option("--n", vmt_n, "Half ring size")->capture_default_str();
  }
  std::int64_t vn_n = 60, vn_x = 1;
  {
    auto* s = add_verify("no-hit", "No-hit probability against its asymptotic form", false,
                         [&] { return std::vector<ri1d::Verdict>{ri1d::check_no_hit(vn_n, vn_x)}; });
    s->add_option("--n", vn_n, "Half ring size")->capture_default_str();
    s->add_option("--x", vn_x)->capture_default_str();
  }
  std::int64_t ve2_x = 2, ve2_delta = 10000, ve2_y = 10, ve2_cd = 14, ve2_cx = 6;
  double ve2_tol = 0.02;
  {
    auto* s = add_verify("endpoint", "Path counts and the small-endpoint probability", false, [&] {
      return std::vector<ri1d::Verdict>{ri1d::check_path_counts(ve2_cd, ve2_cx),
                                        ri1d::check_endpoint(ve2_x, ve2_delta, ve2_y, ve2_tol)};
    });
    s->add_option("--x", ve2_x)->capture_default_str();
    s->add_option("--delta", ve2_delta)->capture_default_str();
    s->add_option("--y", ve2_y)->capture_default_str();
    s->add_option("--tol", ve2_tol, "Relative tolerance")->capture_default_str();
    s->add_option("--count-delta", ve2_cd)
        ->check(CLI::Range(std::int64_t{0}, ri1d::kEnumerationMaxLength))
        ->capture_default_str();
    s->add_option("--count-x", ve2_cx)->check(pos)->capture_default_str();
  }
  std::vector<std::int64_t> va_n = {32, 64, 128};
  {
    auto* s = add_verify("asymp-h", "First-mode approximation at the regime horizon", false,
                         [&] { return ri1d::check_asymptotic_h(va_n); });
    s->add_option("--n", va_n, "Ring sizes")->capture_default_str();
  }
  double vc_alpha = 1.0, vc_thr = 0.02;
  std::int64_t vc_x = 400, vc_m = 100000;
  {
    auto* s = add_verify("clt", "KS distance of standardized local times to N(0,1)", true, [&] {
      return std::vector<ri1d::Verdict>{ri1d::check_clt(vc_alpha, vc_x, vc_m, vc_thr, common.run())};
    });
    s->add_option("--alpha", vc_alpha)->check(pos)->capture_default_str();
    s->add_option("--x", vc_x)->check(pos)->capture_default_str();
    s->add_option("--samples", vc_m)->check(CLI::Range(100, 1000000000))->capture_default_str();
    s->add_option("--threshold", vc_thr)->capture_default_str();
  }
  double v1_alpha = 1.0, v1_tol = 0.03;
  std::int64_t v1_n = 40, v1_a = 1, v1_b = 2, v1_m = 20000;
  std::optional<std::int64_t> v1_x0;
  {
    auto* s = add_verify("thm1", "Ring vacancy: exact ratio and sampled paths", true, [&] {
      return ri1d::check_ring_vacancy(v1_n, v1_alpha, v1_x0.value_or(v1_n / 2), v1_a, v1_b, v1_m,
                                      v1_tol, common.run());
    });
    s->add_option("--n", v1_n)->capture_default_str();
    s->add_option("--alpha", v1_alpha)->check(pos)->capture_default_str();
    s->add_option("--x0", v1_x0, "Start site (default n/2)");
    s->add_option("--a", v1_a)->capture_default_str();
    s->add_option("--b", v1_b)->capture_default_str();
    s->add_option("--samples", v1_m, "Sampled paths (0 skips sampling)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    s->add_option("--tol", v1_tol, "Relative tolerance of the exact ratio")->capture_default_str();
  }
  double v3_alpha = 1.0, v3_thr = 0.05;
  std::int64_t v3_n = 24, v3_x = 2, v3_m = 20000;
  {
    auto* s = add_verify("thm3", "Ring local time against the interlacement law", true, [&] {
      return std::vector<ri1d::Verdict>{
          ri1d::check_ring_local_time(v3_n, v3_alpha, v3_x, v3_m, v3_thr, common.run())};
    });
    s->add_option("--n", v3_n, "Half ring size")->capture_default_str();
    s->add_option("--alpha", v3_alpha)->check(pos)->capture_default_str();
    s->add_option("--x", v3_x)->check(pos)->capture_default_str();
    s->add_option("--samples", v3_m)->check(pos)->capture_default_str();
    s->add_option("--threshold", v3_thr)->capture_default_str();
  }

  // selftest
  std::vector<int> st_only;
  {
    auto* s = add(&app, "selftest", "Run the acceptance suite");
    s->add_option("--only", st_only, "Criterion ids to run (default all)")
        ->check(CLI::Range(1, ri1d::kCriterionCount));
    entries.push_back({s, "selftest", [&] {
      Report r;
      r.seeded = true;
      const auto results = ri1d::run_acceptance(common.run(), st_only,
                                                [](const ri1d::CriterionResult& c) {
                                                  std::cerr << ri1d::format_criterion(c) << '\n';
                                                });
      r.table.columns = {"id", "title", "label", "statistic", "threshold", "pass", "context"};
      for (const auto& c : results) {
        for (const auto& v : c.checks) {
          r.table.rows.push_back({static_cast<std::int64_t>(c.id), c.title, v.label, v.statistic,
                                  v.threshold, v.pass, v.context});
          ri1d::Verdict tagged = v;
          tagged.label = std::to_string(c.id) + " " + v.label;
          r.verdicts.push_back(tagged);
        }
      }
      return r;
    }});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (format_opt->count() == 0 && common.out.size() >= 5 &&
      common.out.compare(common.out.size() - 5, 5, ".json") == 0) {
    common.format = "json";
  }

  for (const auto& entry : entries) {
    if (!entry.sub->parsed()) continue;
    try {
      const auto start = std::chrono::steady_clock::now();
      const Report report = entry.run();
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(entry.name, *entry.sub, report, common, wall);
      for (const auto& v : report.verdicts) {
        if (!v.pass) return 1;
      }
      return 0;
    } catch (const std::logic_error& e) {
      // DomainError and ConfigError are logic errors: bad inputs.
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 3;
    }
  }
  std::cerr << app.help();
  return 2;
}
