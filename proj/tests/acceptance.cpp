// Acceptance gate: one PASS/FAIL line per criterion, exit code = failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcons/bench.hpp"
#include "subcons/bounds.hpp"
#include "subcons/brute_force.hpp"
#include "subcons/rng.hpp"
#include "subcons/transforms.hpp"

using namespace subcons;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(int criterion, bool ok, const std::string& label,
             const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> seeded_matrix(int n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<double> s(static_cast<std::size_t>(n) * n);
  for (auto& v : s) v = rng.uniform_pos();
  return s;
}

std::vector<double> positive_weights(int n, Xoshiro256& rng) {
  std::vector<double> w(n);
  for (auto& v : w) v = 0.1 + rng.uniform();
  return w;
}

OraclePtr unit_bipartite(int n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  const int n_words = 2 * n;
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    const int len = 1 + rng.index(4);
    for (int d = 0; d < len; ++d) {
      const int w = rng.index(n_words);
      if (std::find(adj[u].begin(), adj[u].end(), w) == adj[u].end()) adj[u].push_back(w);
    }
    std::sort(adj[u].begin(), adj[u].end());
  }
  return std::make_shared<BipartiteNeighborhoodOracle>(
      n, n_words, std::move(adj), std::vector<double>(n_words, 1.0));
}

// One representative instance of each catalog entry over a shared ground set.
std::vector<OraclePtr> catalog(int n) {
  Xoshiro256 rng(1234);
  std::vector<OraclePtr> out;
  out.push_back(std::make_shared<ModularOracle>(positive_weights(n, rng)));
  auto fac = std::make_shared<FacilityLocationOracle>(n, seeded_matrix(n, 2));
  out.push_back(fac);
  out.push_back(std::make_shared<SaturatedSumOracle>(n, seeded_matrix(n, 3), 0.5));
  out.push_back(unit_bipartite(n, 4));
  out.push_back(std::make_shared<SqrtModularOracle>(positive_weights(n, rng)));
  out.push_back(std::make_shared<CardTruncationOracle>(n, 4.0));
  out.push_back(std::make_shared<TruncationOracle>(
      fac, 0.6 * fac->eval(Subset::full(n))));
  out.push_back(std::make_shared<SumOracle>(std::vector<OraclePtr>{
      std::make_shared<ModularOracle>(positive_weights(n, rng)), fac}));
  out.push_back(std::make_shared<HardnessPlainOracle>(n, 0.6, 4));
  Subset hidden(n);
  for (int j : {0, 3, 5, 8}) hidden.add(j);
  out.push_back(std::make_shared<HardnessHiddenOracle>(n, 0.6, 4, 2, hidden));
  return out;
}

constexpr double kOneMinusInvE = 1.0 - 0.36787944117144233;

// --- criterion 1: modular bound sandwiches -----------------------------------

void criterion_1() {
  const auto start = Clock::now();
  const int n = 10;
  bool ok = true;
  std::string why;
  for (const OraclePtr& f : catalog(n)) {
    std::vector<double> values(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
      values[mask] = f->eval(Subset::from_mask(n, mask));
    }
    Xoshiro256 rng(99);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      Permutation pi(rng.permutation(n));
      ModularSurrogate h = subgradient(*f, pi);
      Subset anchor(n);
      for (int j = 0; j < n; ++j) {
        if (rng.uniform() < 0.5) anchor.add(j);
      }
      ModularSurrogate m1 = upper_bound_1(*f, anchor);
      ModularSurrogate m2 = upper_bound_2(*f, anchor);
      for (std::uint64_t mask = 0; mask < values.size() && ok; ++mask) {
        Subset x = Subset::from_mask(n, mask);
        if (h.value(x) > values[mask] + 1e-9 || m1.value(x) < values[mask] - 1e-9 ||
            m2.value(x) < values[mask] - 1e-9) {
          ok = false;
          why = "sandwich violated for kind " + f->kind();
        }
      }
      for (int i = 0; i <= n && ok; ++i) {
        Subset p = pi.prefix(i);
        if (std::abs(h.value(p) - f->eval(p)) > 1e-9) {
          ok = false;
          why = "chain tightness violated for kind " + f->kind();
        }
      }
      if (ok && (std::abs(m1.value(anchor) - f->eval(anchor)) > 1e-9 ||
                 std::abs(m2.value(anchor) - f->eval(anchor)) > 1e-9)) {
        ok = false;
        why = "anchor tightness violated for kind " + f->kind();
      }
    }
    if (!ok) break;
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 30.0) {
    ok = false;
    why = "runtime " + std::to_string(elapsed) + "s";
  }
  verdict(1, ok, "modular bound sandwiches on the full catalog", why);
}

// --- criterion 2: curvature algebra ------------------------------------------

void criterion_2() {
  const int n = 10;
  bool ok = curvature(ModularOracle({1, 2, 3})) == 0.0;
  std::string why = ok ? "" : "modular curvature is nonzero";
  for (const OraclePtr& f : catalog(n)) {
    const double kappa = curvature(*f);
    if (kappa <= kTol || kappa >= 1.0 - kTol) continue;
    OraclePtr fk = curve_normalize(f);
    if (std::abs(curvature(*fk) - 1.0) > 1e-9) {
      ok = false;
      why = "normalized curvature != 1 for kind " + f->kind();
      break;
    }
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      Subset x = Subset::from_mask(n, mask);
      double singles = 0.0;
      for (int j : x.elements()) singles += f->singleton(j);
      const double remix = kappa * fk->eval(x) + (1.0 - kappa) * singles;
      if (std::abs(remix - f->eval(x)) > 1e-9) {
        ok = false;
        why = "re-mix identity failed for kind " + f->kind();
        break;
      }
    }
    if (!ok) break;
  }
  verdict(2, ok, "curvature algebra and re-mix identity", why);
}

// --- criterion 3: Wolsey factor ----------------------------------------------

void criterion_3() {
  const int n = 10;
  int violations = 0;
  std::vector<double> ratios;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Xoshiro256 rng(seed);
    ModularOracle f(positive_weights(n, rng));
    OraclePtr g = unit_bipartite(n, seed + 10000);
    const double c = 0.6 * g->eval(Subset::full(n));
    SolveReport r = ssc_greedy(f, *g, c);
    SolveReport opt = brute_force_scsc(f, *g, c);
    if (!r.feasible || r.f_value > *r.certificate.ingredients.H_g * opt.f_value + kTol) {
      ++violations;
    }
    ratios.push_back(r.f_value / opt.f_value);
  }
  std::sort(ratios.begin(), ratios.end());
  const double median = 0.5 * (ratios[99] + ratios[100]);
  const bool ok = violations == 0 && median < 1.1;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "violations %d/200, median ratio %.4f",
                violations, median);
  verdict(3, ok, "greedy cover within the harmonic factor", detail);
}

// --- criterion 4: Sviridenko factor --------------------------------------------

void criterion_4() {
  const int n = 10;
  int violations = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Xoshiro256 rng(seed);
    ModularOracle f(positive_weights(n, rng));
    FacilityLocationOracle g(n, seeded_matrix(n, seed + 20000));
    const double b = 0.4 * f.eval(Subset::full(n));
    SolveReport r = sk_greedy(f, g, b, Enumeration::triples);
    SolveReport opt = brute_force_scsk(f, g, b);
    if (!r.feasible || r.g_value < kOneMinusInvE * opt.g_value - 1e-9) ++violations;
  }
  verdict(4, violations == 0, "partial-enumeration greedy within 1 - 1/e",
          "violations " + std::to_string(violations) + "/200");
}

// --- criterion 5: iterated surrogate certificates --------------------------------

void criterion_5() {
  const int n = 10;
  int issc_viol = 0, isk_viol = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    OraclePtr f = unit_bipartite(n, seed + 30000);
    OraclePtr g;
    if (seed % 2 == 0) {
      g = std::make_shared<FacilityLocationOracle>(n, seeded_matrix(n, seed + 40000));
    } else {
      g = std::make_shared<SaturatedSumOracle>(n, seeded_matrix(n, seed + 40000), 0.5);
    }

    const double c = 0.5 * g->eval(Subset::full(n));
    SolveReport rc = issc(*f, *g, c);
    SolveReport optc = brute_force_scsc(*f, *g, c);
    bool good = rc.feasible && rc.iterations <= 50 &&
                rc.f_value <= rc.certificate.sigma * optc.f_value + kTol;
    for (std::size_t i = 1; i < rc.trace.size(); ++i) {
      good = good && rc.trace[i].f_value < rc.trace[i - 1].f_value;
    }
    if (!good) ++issc_viol;

    const double b = 0.5 * f->eval(Subset::full(n));
    SolveReport rk = isk(*f, *g, b);
    SolveReport optk =
        brute_force_scsk(*f, *g, *rk.certificate.ingredients.reference_bound);
    good = rk.feasible && rk.iterations <= 50 &&
           rk.g_value >= kOneMinusInvE * optk.g_value - kTol;
    for (std::size_t i = 1; i < rk.trace.size(); ++i) {
      good = good && rk.trace[i].g_value > rk.trace[i - 1].g_value;
    }
    if (!good) ++isk_viol;
  }
  verdict(5, issc_viol == 0 && isk_viol == 0,
          "iterated surrogate descent/ascent certificates",
          "issc violations " + std::to_string(issc_viol) + "/200, isk violations " +
              std::to_string(isk_viol) + "/200");
}

// --- criterion 6: conversion theorems ----------------------------------------------

void criterion_6() {
  const int n = 8;
  const double eps = 0.05;
  int violations = 0;
  std::string why;

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    FacilityLocationOracle f(n, seeded_matrix(n, seed + 50000));
    SaturatedSumOracle g(n, seeded_matrix(n, seed + 60000), 0.5);
    InnerSolver cover_inner{[&](double c) { return brute_force_scsc(f, g, c); }, 1.0, 1.0};
    InnerSolver knap_inner{[&](double b) { return brute_force_scsk(f, g, b); }, 1.0, 1.0};

    double f_min = f.singleton(0), g_min = g.singleton(0);
    for (int j = 1; j < n; ++j) {
      f_min = std::min(f_min, f.singleton(j));
      g_min = std::min(g_min, g.singleton(j));
    }
    const double f_total = f.eval(Subset::full(n));
    const double g_total = g.eval(Subset::full(n));
    // keep the budget inside [min_j f(j), f(V)] so it is never degenerate
    const double b = f_min + 0.5 * (f_total - f_min);
    const double c = 0.6 * g_total;
    const SolveReport optk = brute_force_scsk(f, g, b);
    const SolveReport optc = brute_force_scsc(f, g, c);

    const int lin_k_bound =
        static_cast<int>(std::ceil(std::log(g_total / g_min) / -std::log1p(-eps))) + 1;
    const int lin_c_bound =
        static_cast<int>(std::ceil(std::log(f_total / f_min) / std::log1p(eps))) + 1;
    const int bin_k_bound =
        static_cast<int>(std::ceil(std::log2((g_total / g_min) / eps))) + 2;
    const int bin_c_bound =
        static_cast<int>(std::ceil(std::log2((f_total / f_min) / eps))) + 3;

    SolveReport a2 = scsk_via_scsc_linear(cover_inner, f, g, b, eps);
    if (a2.f_value > b + kTol || a2.g_value < (1.0 - eps) * optk.g_value - kTol ||
        a2.iterations > lin_k_bound) {
      ++violations;
      why = "linear knapsack conversion, seed " + std::to_string(seed);
    }
    SolveReport a3 = scsc_via_scsk_linear(knap_inner, f, g, c, eps);
    if (a3.g_value < c - kTol || a3.f_value > (1.0 + eps) * optc.f_value + kTol ||
        a3.iterations > lin_c_bound) {
      ++violations;
      why = "linear cover conversion, seed " + std::to_string(seed);
    }
    SolveReport a4 = scsk_via_scsc_binary(cover_inner, f, g, b, eps);
    if (a4.f_value > b + kTol || a4.g_value < (1.0 - eps) * optk.g_value - kTol ||
        a4.iterations > bin_k_bound) {
      ++violations;
      why = "binary knapsack conversion, seed " + std::to_string(seed);
    }
    SolveReport a5 = scsc_via_scsk_binary(knap_inner, f, g, c, eps);
    if (a5.g_value < c - kTol || a5.f_value > (1.0 + eps) * optc.f_value + kTol ||
        a5.iterations > bin_c_bound) {
      ++violations;
      why = "binary cover conversion, seed " + std::to_string(seed);
    }
  }

  // Integral value range 64: at most log2(64) + 1 probes.
  ModularOracle gi({57, 1, 1, 1, 1, 1, 1, 1});
  ModularOracle fi({3, 1, 4, 1, 5, 2, 6, 2});
  InnerSolver ii{[&](double c) { return brute_force_scsc(fi, gi, c); }, 1.0, 1.0};
  SolveReport bin64 = scsk_via_scsc_binary(ii, fi, gi, 6.0, eps);
  if (bin64.iterations > 7) {
    ++violations;
    why = "integral binary search used " + std::to_string(bin64.iterations) + " probes";
  }
  verdict(6, violations == 0, "bicriteria conversions against brute-force referees", why);
}

// --- criterion 7: hardness fixture -------------------------------------------------

void criterion_7() {
  const int n = 12, alpha = 4, beta = 2;
  Xoshiro256 rng(1);
  Subset hidden(n);
  for (int j : rng.sample(n, alpha)) hidden.add(j);
  HardnessPlainOracle plain(n, 1.0, alpha);
  HardnessHiddenOracle hid(n, 1.0, alpha, beta, hidden);

  int agree = 0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) {
    Subset x = Subset::from_mask(n, rng.below(std::uint64_t{1} << n));
    if (std::abs(plain.eval(x) - hid.eval(x)) <= kTol) ++agree;
  }
  const double rate = 100.0 * agree / samples;
  bool ok = agree >= 99 * samples / 100;
  std::string why;
  if (!ok) why = "sampled agreement below 99%";

  ModularOracle card(std::vector<double>(n, 1.0));
  SolveReport opt_plain = brute_force_scsc(plain, card, static_cast<double>(alpha));
  SolveReport opt_hidden = brute_force_scsc(hid, card, static_cast<double>(alpha));
  if (std::abs(opt_plain.f_value / opt_hidden.f_value -
               static_cast<double>(alpha) / beta) > kTol) {
    ok = false;
    why = "optima ratio != alpha/beta";
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "agreement %.2f%%, plain opt %.0f, hidden opt %.0f%s%s", rate,
                opt_plain.f_value, opt_hidden.f_value, why.empty() ? "" : "; ",
                why.c_str());
  verdict(7, ok, "hardness fixture indistinguishability", detail);
}

// --- criterion 8: synthetic budget-sweep comparison ---------------------------------

void criterion_8() {
  const auto start = Clock::now();
  RunConfig config;
  config.instance = gen_instance("speech-like", 50, 7, nlohmann::json::object());
  config.instance_id = "speech50";
  config.algorithms = {"gr", "isk", "isk_type1", "eask", "eask_c"};
  const double f_total = config.instance.f->eval(Subset::full(50));
  for (int i = 1; i <= 10; ++i) config.bounds.push_back(0.1 * i * f_total);

  bool ok = true;
  std::string why;
  try {
    std::vector<ResultRow> rows = run_solve(config);
    for (const ResultRow& r : rows) {
      if (!r.error.empty()) {
        ok = false;
        why = r.algorithm + " errored: " + r.error;
        break;
      }
    }
    for (const ResultRow& r : rows) {
      if (r.algorithm.rfind("random:", 0) != 0) continue;
      const std::string solver = r.algorithm.substr(7);
      for (const ResultRow& s : rows) {
        if (s.algorithm == solver && s.bound_value == r.bound_value &&
            s.g_value < r.g_value - kTol) {
          ok = false;
          why = solver + " below the random baseline at bound " +
                std::to_string(r.bound_value);
        }
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 60.0) {
    ok = false;
    why = "runtime " + std::to_string(elapsed) + "s";
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail), "%s (%.1fs)", why.empty() ? "all solvers dominate the random baseline" : why.c_str(), elapsed);
  verdict(8, ok, "budget-sweep dominance over random baselines", detail);
}

// --- criterion 9: end-to-end determinism --------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args, const std::string& stdout_path) {
  const std::string cmd = std::string(SUBCONS_CLI_PATH) + " " + args + " > " +
                          stdout_path + " 2>&1";
  return std::system(cmd.c_str());
}

void criterion_9() {
  bool ok = true;
  std::string why;
  const std::string dir = "/tmp/subcons_acceptance";
  if (std::system(("mkdir -p " + dir).c_str()) != 0) {
    verdict(9, false, "repeated gen/solve/verify runs are bit-identical modulo timing",
            "could not create scratch directory");
    return;
  }

  // gen twice into separate files; solve/verify run twice on the same file so
  // the commands are bit-identical (the result rows embed the instance path).
  for (int rep = 1; rep <= 2 && ok; ++rep) {
    const std::string suffix = std::to_string(rep);
    if (run_cli("gen --kind speech-like --n 12 --seed 7 --out " + dir + "/inst" + suffix +
                    ".json",
                dir + "/gen" + suffix + ".log") != 0) {
      ok = false;
      why = "gen failed";
    }
    if (ok && run_cli("solve --instance " + dir +
                          "/inst1.json --algo gr,isk,eask_c,brute_force --budget-frac "
                          "0.3,0.6 --out " +
                          dir + "/res" + suffix + ".json",
                      dir + "/solve" + suffix + ".log") != 0) {
      ok = false;
      why = "solve failed";
    }
    if (ok && run_cli("verify --instance " + dir + "/inst1.json --trials 200",
                      dir + "/verify" + suffix + ".log") != 0) {
      ok = false;
      why = "verify failed";
    }
  }

  if (ok && slurp(dir + "/inst1.json") != slurp(dir + "/inst2.json")) {
    ok = false;
    why = "generated instances differ";
  }
  if (ok && slurp(dir + "/verify1.log") != slurp(dir + "/verify2.log")) {
    ok = false;
    why = "verify outputs differ";
  }
  if (ok) {
    nlohmann::json a, b;
    std::ifstream(dir + "/res1.json") >> a;
    std::ifstream(dir + "/res2.json") >> b;
    for (auto* doc : {&a, &b}) {
      for (auto& row : (*doc)["rows"]) row["wall_time_ns"] = 0;
    }
    if (a != b) {
      ok = false;
      why = "solve outputs differ beyond timing fields";
    }
  }
  verdict(9, ok, "repeated gen/solve/verify runs are bit-identical modulo timing", why);
}

}  // namespace

void guarded(int criterion, void (*fn)()) {
  try {
    fn();
  } catch (const std::exception& e) {
    verdict(criterion, false, "aborted by exception", e.what());
  }
}

int main() {
  guarded(1, criterion_1);
  guarded(2, criterion_2);
  guarded(3, criterion_3);
  guarded(4, criterion_4);
  guarded(5, criterion_5);
  guarded(6, criterion_6);
  guarded(7, criterion_7);
  guarded(8, criterion_8);
  guarded(9, criterion_9);
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria failed\n", g_failures);
  }
  return g_failures;
}
