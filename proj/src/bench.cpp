#include "subcons/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "subcons/bounds.hpp"
#include "subcons/brute_force.hpp"
#include "subcons/checks.hpp"
#include "subcons/rng.hpp"

namespace subcons {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double min_singleton(const SetFunction& fn) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < fn.n(); ++j) m = std::min(m, fn.singleton(j));
  return m;
}

// Mixes run coordinates into a reproducible stream seed.
std::uint64_t sub_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

SolveReport dispatch_solver(const std::string& tag, const InstanceSpec& inst,
                            double bound, const SolverParams& params) {
  const SetFunction& f = *inst.f;
  const SetFunction& g = *inst.g;
  const auto* modular_f = dynamic_cast<const ModularOracle*>(inst.f.get());

  if (inst.is_cover()) {
    const double c = bound;
    if (tag == "brute_force") return brute_force_scsc(f, g, c);
    if (tag == "ssc_greedy") {
      if (!modular_f) throw ParameterError("ssc_greedy needs a modular cost f");
      return ssc_greedy(*modular_f, g, c);
    }
    if (tag == "issc") return issc(f, g, c, params.variant, params.max_iters);
    if (tag == "eassc") return eassc(f, g, c, default_ea_weights(f));
    if (tag == "eassc_c") return eassc_c(f, g, c, default_ea_weights(f));
    throw ParameterError("unknown cover algorithm tag '" + tag + "'");
  }

  const double b = bound;
  if (tag == "brute_force") return brute_force_scsk(f, g, b);
  if (tag == "sk_greedy") {
    if (!modular_f) throw ParameterError("sk_greedy needs a modular cost f");
    return sk_greedy(*modular_f, g, b, params.enumeration);
  }
  if (tag == "gr") return gr(f, g, b);
  if (tag == "isk") {
    return isk(f, g, b, params.variant, params.max_iters, IskMode::feasible,
               params.enumeration);
  }
  if (tag == "isk_type1") {
    return isk(f, g, b, params.variant, params.max_iters, IskMode::type1,
               params.enumeration);
  }
  if (tag == "eask") return eask(f, g, b, default_ea_weights(f), params.eps);
  if (tag == "eask_c") return eask_c(f, g, b, default_ea_weights(f), params.enumeration);
  throw ParameterError("unknown budget algorithm tag '" + tag + "'");
}

// --- run_solve ----------------------------------------------------------------

std::vector<ResultRow> run_solve(const RunConfig& config) {
  if (config.algorithms.empty()) throw ParameterError("at least one algorithm required");
  if (config.bounds.empty()) throw ParameterError("empty sweep");
  config.instance.validate();

  const InstanceSpec& inst = config.instance;
  const std::string kind = inst.is_cover() ? "cover" : "budget";
  const double lo = inst.is_cover() ? min_singleton(*inst.g) : min_singleton(*inst.f);
  const double hi = inst.is_cover() ? inst.g->eval(Subset::full(inst.n))
                                    : inst.f->eval(Subset::full(inst.n));
  for (double v : config.bounds) {
    if (v < lo - kTol || v > hi + kTol) {
      throw ParameterError("sweep value " + fmt17(v) + " outside the valid bound range");
    }
  }

  // Brute-force reference values, one per bound, shared by all rows.
  std::vector<std::optional<double>> reference(config.bounds.size());
  if (inst.n <= 20) {
    for (std::size_t bi = 0; bi < config.bounds.size(); ++bi) {
      try {
        SolveReport opt = inst.is_cover()
                              ? brute_force_scsc(*inst.f, *inst.g, config.bounds[bi])
                              : brute_force_scsk(*inst.f, *inst.g, config.bounds[bi]);
        reference[bi] = inst.is_cover() ? opt.f_value : opt.g_value;
      } catch (const InfeasibleError&) {
        // Row solvers will report the same condition per-row.
      }
    }
  }

  struct Task {
    std::size_t ai;
    std::size_t bi;
  };
  std::vector<Task> tasks;
  for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
    for (std::size_t bi = 0; bi < config.bounds.size(); ++bi) tasks.push_back({ai, bi});
  }
  // Each task yields the solver row and, optionally, its baseline row.
  std::vector<std::vector<ResultRow>> slots(tasks.size());

  auto run_task = [&](std::size_t ti) {
    const Task& t = tasks[ti];
    const std::string& tag = config.algorithms[t.ai];
    const double bound = config.bounds[t.bi];
    ResultRow row;
    row.instance_id = config.instance_id;
    row.seed = inst.seed;
    row.algorithm = tag;
    row.bound_kind = kind;
    row.bound_value = bound;
    row.brute_force_opt = reference[t.bi];

    int solved_card = -1;
    const auto start = std::chrono::steady_clock::now();
    try {
      SolveReport report = dispatch_solver(tag, inst, bound, config.params);
      row.f_value = report.f_value;
      row.g_value = report.g_value;
      row.feasible = report.feasible;
      row.iterations = report.iterations;
      row.sigma = report.certificate.sigma;
      row.rho = report.certificate.rho;
      solved_card = report.solution.card();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    slots[ti].push_back(row);

    if (config.with_baseline && row.error.empty() && tag != "brute_force") {
      ResultRow base = row;
      base.algorithm = "random:" + tag;
      base.iterations = config.baseline_draws;
      base.sigma = 1.0;
      base.rho = 1.0;
      base.wall_time_ns = 0;
      Xoshiro256 rng(sub_seed(inst.seed, t.ai, t.bi));
      double sum_f = 0.0, sum_g = 0.0;
      for (int d = 0; d < config.baseline_draws; ++d) {
        Subset x(inst.n);
        for (int j : rng.sample(inst.n, solved_card)) x.add(j);
        sum_f += inst.f->eval(x);
        sum_g += inst.g->eval(x);
      }
      base.f_value = sum_f / config.baseline_draws;
      base.g_value = sum_g / config.baseline_draws;
      base.feasible = inst.is_cover() ? base.g_value >= bound - kTol
                                      : base.f_value <= bound + kTol;
      slots[ti].push_back(base);
    }
  };

  int threads = 1;
  if (const char* env = std::getenv("SUBCONS_THREADS")) {
    threads = std::max(1, std::atoi(env));
  }
  threads = std::min<int>(threads, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t ti = cursor.fetch_add(1);
          if (ti >= tasks.size()) return;
          run_task(ti);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Flatten in task order, never completion order.
  std::vector<ResultRow> rows;
  for (const auto& slot : slots) rows.insert(rows.end(), slot.begin(), slot.end());
  return rows;
}

// --- run_verify -----------------------------------------------------------------

namespace {

struct Checker {
  VerifyReport report;

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    std::string line = (ok ? "PASS " : "FAIL ") + name;
    if (!ok && !detail.empty()) line += ": " + detail;
    report.lines.push_back(line);
    if (!ok) report.ok = false;
  }
};

std::string witness_text(const PropertyReport& pr) {
  if (!pr.witness) return "no witness";
  std::ostringstream os;
  os << "element " << pr.witness->element << ", lhs " << fmt17(pr.witness->lhs)
     << " < rhs " << fmt17(pr.witness->rhs);
  return os.str();
}

}  // namespace

VerifyReport run_verify(const InstanceSpec& inst, int trials) {
  if (inst.n > 16) throw ParameterError("verify requires n <= 16");
  inst.validate();
  Checker ck;

  for (const auto& [name, oracle] :
       {std::pair<const char*, const SetFunction*>{"f", inst.f.get()},
        std::pair<const char*, const SetFunction*>{"g", inst.g.get()}}) {
    ck.check(std::abs(oracle->eval(Subset(inst.n))) <= kTol,
             std::string(name) + " normalized");
    bool positive = true;
    for (int j = 0; j < inst.n; ++j) positive = positive && oracle->singleton(j) > kTol;
    ck.check(positive, std::string(name) + " positive singletons");
    PropertyReport mono = check_monotone(*oracle, inst.seed, trials);
    ck.check(mono.ok, std::string(name) + " monotone",
             mono.ok ? "" : witness_text(mono));
    PropertyReport sub = check_submodular(*oracle, inst.seed, trials);
    ck.check(sub.ok, std::string(name) + " submodular",
             sub.ok ? "" : witness_text(sub));
  }
  if (!ck.report.ok) return ck.report;

  const SetFunction& f = *inst.f;
  const SetFunction& g = *inst.g;
  const auto* modular_f = dynamic_cast<const ModularOracle*>(inst.f.get());
  const double kappa_f = curvature(f);

  if (inst.is_cover()) {
    const double c = *inst.cover;
    const SolveReport opt = brute_force_scsc(f, g, c);
    if (modular_f) {
      const SolveReport r = ssc_greedy(*modular_f, g, c);
      ck.check(r.feasible && r.f_value <= r.certificate.sigma * opt.f_value + kTol,
               "ssc_greedy within H_g of optimum",
               fmt17(r.f_value) + " vs bound " +
                   fmt17(r.certificate.sigma * opt.f_value));
    }
    const SolveReport ri = issc(f, g, c);
    ck.check(ri.feasible && ri.f_value <= ri.certificate.sigma * opt.f_value + kTol,
             "issc certificate vs optimum",
             fmt17(ri.f_value) + " vs bound " +
                 fmt17(ri.certificate.sigma * opt.f_value));
    if (kappa_f > kTol) {
      const SolveReport re = eassc(f, g, c, default_ea_weights(f));
      ck.check(re.feasible, "eassc covers the target");
    }
  } else {
    const double b = *inst.budget;
    const SolveReport opt = brute_force_scsk(f, g, b);
    if (modular_f) {
      const SolveReport r = sk_greedy(*modular_f, g, b, Enumeration::triples);
      ck.check(r.feasible && r.g_value >= r.certificate.rho * opt.g_value - kTol,
               "sk_greedy within (1-1/e) of optimum",
               fmt17(r.g_value) + " vs bound " +
                   fmt17(r.certificate.rho * opt.g_value));
    }
    const SolveReport rg = gr(f, g, b);
    ck.check(rg.feasible && rg.g_value >= rg.certificate.rho * opt.g_value - kTol,
             "gr certificate vs optimum",
             fmt17(rg.g_value) + " vs bound " +
                 fmt17(rg.certificate.rho * opt.g_value));
    const SolveReport rk = isk(f, g, b);
    const double shrunk = rk.certificate.ingredients.reference_bound.value_or(b);
    const SolveReport opt_shrunk = brute_force_scsk(f, g, shrunk);
    ck.check(rk.feasible &&
                 rk.g_value >= rk.certificate.rho * opt_shrunk.g_value - kTol,
             "isk certificate vs shrunk-budget optimum",
             fmt17(rk.g_value) + " vs bound " +
                 fmt17(rk.certificate.rho * opt_shrunk.g_value));
  }
  return ck.report;
}

// --- Generators --------------------------------------------------------------------

namespace {

void reject_unknown_keys(const json& params, std::initializer_list<const char*> allowed) {
  for (const auto& item : params.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw ParameterError("unknown generator parameter '" + item.key() + "'");
  }
}

std::vector<double> symmetric_uniform_matrix(int n, Xoshiro256& rng) {
  std::vector<double> s(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = rng.uniform_pos();
      s[static_cast<std::size_t>(i) * n + j] = v;
      s[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return s;
}

// Utterance-word graph with Zipf(1.1) word popularity, so that the heavy head
// is shared across utterances and the neighborhood function is near fully
// curved.
OraclePtr zipf_bipartite(int n, Xoshiro256& rng) {
  const int n_words = 4 * n;
  std::vector<double> cdf(n_words);
  double total = 0.0;
  for (int r = 0; r < n_words; ++r) {
    total += std::pow(r + 1.0, -1.1);
    cdf[r] = total;
  }
  std::vector<std::vector<int>> adjacency(n);
  for (int u = 0; u < n; ++u) {
    const int len = 3 + rng.index(6);
    std::vector<int>& words = adjacency[u];
    for (int d = 0; d < len; ++d) {
      const double x = rng.uniform() * total;
      const int w = static_cast<int>(
          std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
      if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    }
    std::sort(words.begin(), words.end());
  }
  return std::make_shared<BipartiteNeighborhoodOracle>(
      n, n_words, std::move(adjacency), std::vector<double>(n_words, 1.0));
}

void set_bound(InstanceSpec& spec, const json& params) {
  const double f_total = spec.f->eval(Subset::full(spec.n));
  const double g_total = spec.g->eval(Subset::full(spec.n));
  if (params.contains("cover_frac")) {
    const double frac = params.at("cover_frac").get<double>();
    spec.cover = std::clamp(frac * g_total, min_singleton(*spec.g), g_total);
  } else {
    const double frac = params.value("budget_frac", 0.5);
    spec.budget = std::clamp(frac * f_total, min_singleton(*spec.f), f_total);
  }
}

}  // namespace

InstanceSpec gen_instance(const std::string& kind, int n, std::uint64_t seed,
                          const json& params) {
  if (n < 2) throw ParameterError("generators need n >= 2");
  Xoshiro256 rng(seed);
  InstanceSpec spec;
  spec.n = n;
  spec.seed = seed;

  if (kind == "speech-like") {
    reject_unknown_keys(params, {"budget_frac", "cover_frac"});
    spec.f = zipf_bipartite(n, rng);
    spec.g = std::make_shared<FacilityLocationOracle>(n, symmetric_uniform_matrix(n, rng));
    set_bound(spec, params);
  } else if (kind == "speech-sat") {
    reject_unknown_keys(params, {"budget_frac", "cover_frac", "alpha"});
    spec.f = zipf_bipartite(n, rng);
    spec.g = std::make_shared<SaturatedSumOracle>(n, symmetric_uniform_matrix(n, rng),
                                                  params.value("alpha", 0.5));
    set_bound(spec, params);
  } else if (kind == "modular-pair") {
    reject_unknown_keys(params, {"budget_frac", "cover_frac"});
    std::vector<double> fw(n), gw(n);
    for (int j = 0; j < n; ++j) fw[j] = rng.uniform_pos();
    for (int j = 0; j < n; ++j) gw[j] = 1.0 + rng.index(10);
    spec.f = std::make_shared<ModularOracle>(std::move(fw));
    spec.g = std::make_shared<ModularOracle>(std::move(gw));
    set_bound(spec, params);
  } else if (kind == "hardness-pair") {
    reject_unknown_keys(params, {"kappa", "x", "alpha", "beta"});
    const double kappa = params.value("kappa", 1.0);
    const double x = params.value("x", std::sqrt(5.0));
    int alpha = params.value("alpha",
                             std::max(1, static_cast<int>(std::floor(x * std::sqrt(n) / 5.0))));
    int beta = params.value("beta", std::max(1, static_cast<int>(std::floor(x * x / 5.0))));
    if (alpha > n) throw ParameterError("alpha exceeds the ground set");
    Subset hidden(n);
    for (int j : rng.sample(n, alpha)) hidden.add(j);
    spec.f = std::make_shared<HardnessHiddenOracle>(n, kappa, alpha, beta, hidden);
    spec.g = std::make_shared<ModularOracle>(std::vector<double>(n, 1.0));
    spec.cover = static_cast<double>(alpha);
  } else {
    throw ParameterError("unknown generator kind '" + kind + "'");
  }

  spec.validate();
  return spec;
}

// --- Serialization --------------------------------------------------------------------

namespace {

json row_to_json(const ResultRow& r) {
  json j{{"instance", r.instance_id},
         {"seed", r.seed},
         {"algorithm", r.algorithm},
         {"bound_kind", r.bound_kind},
         {"bound", r.bound_value},
         {"f_value", r.f_value},
         {"g_value", r.g_value},
         {"feasible", r.feasible},
         {"iterations", r.iterations},
         {"wall_time_ns", r.wall_time_ns},
         {"sigma", r.sigma},
         {"rho", r.rho},
         {"error", r.error}};
  if (r.brute_force_opt) {
    j["brute_force_opt"] = *r.brute_force_opt;
  } else {
    j["brute_force_opt"] = nullptr;
  }
  return j;
}

ResultRow row_from_json(const json& j) {
  ResultRow r;
  r.instance_id = j.at("instance").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.bound_kind = j.at("bound_kind").get<std::string>();
  r.bound_value = j.at("bound").get<double>();
  r.f_value = j.at("f_value").get<double>();
  r.g_value = j.at("g_value").get<double>();
  r.feasible = j.at("feasible").get<bool>();
  r.iterations = j.at("iterations").get<int>();
  r.wall_time_ns = j.at("wall_time_ns").get<std::int64_t>();
  r.sigma = j.at("sigma").get<double>();
  r.rho = j.at("rho").get<double>();
  r.error = j.value("error", std::string{});
  if (j.contains("brute_force_opt") && !j.at("brute_force_opt").is_null()) {
    r.brute_force_opt = j.at("brute_force_opt").get<double>();
  }
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string results_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "instance,seed,algorithm,bound_kind,bound,f_value,g_value,feasible,"
        "iterations,wall_time_ns,sigma,rho,brute_force_opt,error\n";
  for (const ResultRow& r : rows) {
    os << csv_escape(r.instance_id) << ',' << r.seed << ',' << csv_escape(r.algorithm)
       << ',' << r.bound_kind << ',' << fmt17(r.bound_value) << ','
       << fmt17(r.f_value) << ',' << fmt17(r.g_value) << ','
       << (r.feasible ? "true" : "false") << ',' << r.iterations << ','
       << r.wall_time_ns << ',' << fmt17(r.sigma) << ',' << fmt17(r.rho) << ','
       << (r.brute_force_opt ? fmt17(*r.brute_force_opt) : "") << ','
       << csv_escape(r.error) << '\n';
  }
  return os.str();
}

json results_to_json(const std::vector<ResultRow>& rows) {
  json arr = json::array();
  for (const ResultRow& r : rows) arr.push_back(row_to_json(r));
  return json{{"rows", std::move(arr)}};
}

void write_results(const std::vector<ResultRow>& rows, const std::string& path,
                   const std::string& format) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write result file: " + path);
  if (format == "csv") {
    out << results_to_csv(rows);
  } else if (format == "json") {
    out << results_to_json(rows).dump(2) << '\n';
  } else {
    throw ParameterError("unknown result format '" + format + "'");
  }
}

std::vector<ResultRow> read_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open result file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError("result file is not JSON (" + path + "): " + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array()) {
    throw ParameterError("result file schema mismatch: " + path);
  }
  std::vector<ResultRow> rows;
  try {
    for (const auto& item : j.at("rows")) rows.push_back(row_from_json(item));
  } catch (const json::exception& e) {
    throw ParameterError("result row schema mismatch (" + path + "): " + e.what());
  }
  return rows;
}

void write_report(std::vector<ResultRow> rows, const std::string& csv_path,
                  const std::string& plot_path) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    if (a.bound_value != b.bound_value) return a.bound_value < b.bound_value;
    return a.seed < b.seed;
  });

  std::ofstream csv(csv_path);
  if (!csv) throw ParameterError("cannot write report CSV: " + csv_path);
  csv << results_to_csv(rows);

  json series = json::array();
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    json x = json::array(), gv = json::array(), fv = json::array();
    while (j < rows.size() && rows[j].instance_id == rows[i].instance_id &&
           rows[j].algorithm == rows[i].algorithm) {
      if (rows[j].error.empty()) {
        x.push_back(rows[j].bound_value);
        gv.push_back(rows[j].g_value);
        fv.push_back(rows[j].f_value);
      }
      ++j;
    }
    series.push_back(json{{"instance", rows[i].instance_id},
                          {"algorithm", rows[i].algorithm},
                          {"bound_kind", rows[i].bound_kind},
                          {"x", std::move(x)},
                          {"g_value", std::move(gv)},
                          {"f_value", std::move(fv)}});
    i = j;
  }
  std::ofstream plot(plot_path);
  if (!plot) throw ParameterError("cannot write plot data: " + plot_path);
  plot << json{{"series", std::move(series)}}.dump(2) << '\n';
}

}  // namespace subcons
