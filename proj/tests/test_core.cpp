#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "subcons/brute_force.hpp"
#include "subcons/checks.hpp"
#include "subcons/instance.hpp"
#include "subcons/rng.hpp"

using namespace subcons;

namespace {

// Supermodular counterexample used by the property-checker tests.
class SquaredCardOracle : public SetFunction {
 public:
  explicit SquaredCardOracle(int n) : SetFunction(n) {}
  std::string kind() const override { return "squared_card"; }

 protected:
  double do_eval(const Subset& x) const override {
    return static_cast<double>(x.card()) * x.card();
  }
};

std::vector<double> seeded_matrix(int n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<double> s(static_cast<std::size_t>(n) * n);
  for (auto& v : s) v = rng.uniform_pos();
  return s;
}

}  // namespace

TEST_CASE("subset basics") {
  Subset s(5);
  CHECK(s.empty());
  s.add(1);
  s.add(3);
  CHECK(s.card() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.elements() == std::vector<int>{1, 3});
  CHECK(s.complement().elements() == std::vector<int>{0, 2, 4});
  CHECK(s.with(0).card() == 3);
  CHECK(s.without(1).elements() == std::vector<int>{3});
  CHECK(Subset::from_mask(5, 0b01010) == s);
  CHECK(Subset(5).lex_less(s));
  CHECK_THROWS_AS(s.contains(7), InstanceError);
  CHECK_THROWS_AS(Subset::from_mask(3, 0b1000), InstanceError);
}

TEST_CASE("modular oracle evaluation") {
  ModularOracle f({1.0, 2.0, 3.0});
  CHECK(f.eval(Subset::from_mask(3, 0b101)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(f.eval(Subset(3)) == 0.0);
  CHECK(f.gain(1, Subset(3)) == 2.0);
  CHECK(f.gain(1, Subset::from_mask(3, 0b010)) == 0.0);  // already inside
}

TEST_CASE("facility location matches direct row-max sum") {
  const int n = 5;
  auto s = seeded_matrix(n, 11);
  FacilityLocationOracle g(n, s);
  Subset x = Subset::from_mask(n, 0b01010);  // {1,3}
  double expect = 0.0;
  for (int i = 0; i < n; ++i) {
    expect += std::max(s[static_cast<std::size_t>(i) * n + 1],
                       s[static_cast<std::size_t>(i) * n + 3]);
  }
  CHECK(g.eval(x) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(g.eval(Subset(n)) == 0.0);
}

TEST_CASE("card truncation gain saturates") {
  CardTruncationOracle f(4, 2.0);
  CHECK(f.gain(3, Subset::from_mask(4, 0b011)) == 0.0);
  CHECK(f.gain(1, Subset(4)) == 1.0);
}

TEST_CASE("gain identity holds bit-for-bit on catalog oracles") {
  const int n = 6;
  std::vector<OraclePtr> oracles = {
      std::make_shared<FacilityLocationOracle>(n, seeded_matrix(n, 3)),
      std::make_shared<SaturatedSumOracle>(n, seeded_matrix(n, 4), 0.5),
      std::make_shared<SqrtModularOracle>(std::vector<double>{1, 2, 3, 4, 5, 6}),
  };
  for (const auto& o : oracles) {
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      Subset x = Subset::from_mask(n, mask);
      for (int j = 0; j < n; ++j) {
        CHECK(o->gain(j, x) == o->eval(x.with(j)) - o->eval(x));
      }
    }
  }
}

TEST_CASE("submodularity checker") {
  CHECK(check_submodular(ModularOracle({1, 2, 3})).ok);
  SaturatedSumOracle sat(6, seeded_matrix(6, 21), 0.5);
  PropertyReport r = check_submodular(sat);
  CHECK(r.ok);
  CHECK(r.exhaustive);

  PropertyReport bad = check_submodular(SquaredCardOracle(5));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->lhs < bad.witness->rhs);
}

TEST_CASE("monotonicity checker") {
  CHECK(check_monotone(FacilityLocationOracle(5, seeded_matrix(5, 9))).ok);
}

TEST_CASE("curvature values") {
  CHECK(curvature(ModularOracle({1, 2, 3})) == 0.0);
  CHECK(curvature(CardTruncationOracle(2, 1.0)) == doctest::Approx(1.0));

  // Cross-check against the defining minimum, element by element.
  Xoshiro256 rng(17);
  const int n = 8, n_words = 5;
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    int len = 1 + rng.index(3);
    for (int d = 0; d < len; ++d) {
      int w = rng.index(n_words);
      if (std::find(adj[u].begin(), adj[u].end(), w) == adj[u].end()) adj[u].push_back(w);
    }
  }
  std::vector<double> ww(n_words);
  for (auto& v : ww) v = rng.uniform_pos();
  BipartiteNeighborhoodOracle f(n, n_words, adj, ww);
  double direct = 1.0;
  const Subset full = Subset::full(n);
  for (int j = 0; j < n; ++j) {
    direct = std::min(direct, f.gain(j, full.without(j)) / f.singleton(j));
  }
  CHECK(curvature(f) == doctest::Approx(1.0 - direct).epsilon(1e-12));
}

TEST_CASE("curvature rejects zero singletons") {
  CHECK_THROWS_AS(curvature(ModularOracle({0.0, 1.0})), InstanceError);
}

TEST_CASE("brute force cover") {
  ModularOracle ones({1, 1, 1});
  SolveReport r = brute_force_scsc(ones, ones, 2.0);
  CHECK(r.f_value == 2.0);
  CHECK(r.solution == Subset::from_mask(3, 0b011));  // lexicographic tie-break

  ModularOracle single({2.0});
  SolveReport one = brute_force_scsc(single, single, 1.5);
  CHECK(one.solution == Subset::full(1));

  CHECK_THROWS_AS(brute_force_scsc(ones, ones, 4.0), InfeasibleError);
}

TEST_CASE("brute force knapsack") {
  ModularOracle f({2, 3, 4});
  ModularOracle g({1, 1, 1});
  CHECK(brute_force_scsk(f, g, 1.0).solution.empty());
  CHECK(brute_force_scsk(f, g, 9.0).solution == Subset::full(3));

  // Exact optimum used as a referee elsewhere; sanity-check one instance.
  const int n = 10;
  FacilityLocationOracle cov(n, seeded_matrix(n, 33));
  ModularOracle cost({1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
  SolveReport opt = brute_force_scsk(cost, cov, 3.0);
  for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
    Subset x = Subset::from_mask(n, mask);
    if (cost.eval(x) <= 3.0 + kTol) CHECK(cov.eval(x) <= opt.g_value + kTol);
  }
}

TEST_CASE("truncation and constraint equivalence") {
  auto g = std::make_shared<ModularOracle>(std::vector<double>{1, 1, 1, 1, 1, 1});
  OraclePtr same = truncate(g, 6.0);
  CHECK(same->eval(Subset::from_mask(6, 0b111))- 3.0 == 0.0);
  OraclePtr capped = truncate(g, 2.0);
  CHECK(capped->eval(Subset::full(6)) == 2.0);
  CHECK_THROWS_AS(truncate(g, -1.0), ParameterError);

  // {g(X) >= alpha} iff {g'(X) = g'(V)} over all subsets.
  const double alpha = 3.0;
  OraclePtr gp = truncate(g, alpha);
  const double gpv = gp->eval(Subset::full(6));
  for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
    Subset x = Subset::from_mask(6, mask);
    CHECK((g->eval(x) >= alpha - kTol) == (std::abs(gp->eval(x) - gpv) <= kTol));
  }
}

TEST_CASE("hardness fixtures agree away from the hidden set") {
  const int n = 12, alpha = 4, beta = 2;
  const double kappa = 1.0;
  Subset hidden(n);
  for (int j : {1, 4, 7, 10}) hidden.add(j);
  HardnessPlainOracle plain(n, kappa, alpha);
  HardnessHiddenOracle hid(n, kappa, alpha, beta, hidden);
  for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
    Subset x = Subset::from_mask(n, mask);
    const int in_r = x.intersection_card(hidden);
    const int out_r = x.card() - in_r;
    const bool away = in_r <= beta ||
                      std::min(beta + out_r, x.card()) >= alpha;
    if (away) {
      CHECK(plain.eval(x) == doctest::Approx(hid.eval(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("validation rejects zero singletons and strips them") {
  auto weights = std::vector<double>{1.0, 0.0, 2.0};
  // ModularOracle accepts zero weights structurally; validation rejects them.
  ModularOracle f(weights);
  CHECK_THROWS_AS(validate_oracle(f), InstanceError);
  auto [stripped, kept] = strip_zero_singletons(std::make_shared<ModularOracle>(weights));
  CHECK(kept == std::vector<int>{0, 2});
  CHECK(stripped->n() == 2);
  CHECK(stripped->eval(Subset::full(2)) == 3.0);
}

TEST_CASE("instance JSON round trip") {
  InstanceSpec spec;
  spec.n = 4;
  spec.f = std::make_shared<ModularOracle>(std::vector<double>{1, 2, 3, 4});
  spec.g = std::make_shared<SaturatedSumOracle>(4, seeded_matrix(4, 5), 0.5);
  spec.cover = 1.5;
  spec.seed = 42;
  spec.validate();

  nlohmann::json j = instance_to_json(spec);
  InstanceSpec back = instance_from_json(j);
  CHECK(back.n == 4);
  CHECK(back.seed == 42);
  CHECK(back.is_cover());
  CHECK(*back.cover == 1.5);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    Subset x = Subset::from_mask(4, mask);
    CHECK(back.f->eval(x) == spec.f->eval(x));
    CHECK(back.g->eval(x) == spec.g->eval(x));
  }
  CHECK(instance_to_json(back) == j);
}

TEST_CASE("instance validation rejects degenerate bounds") {
  InstanceSpec spec;
  spec.n = 3;
  spec.f = std::make_shared<ModularOracle>(std::vector<double>{1, 1, 1});
  spec.g = std::make_shared<ModularOracle>(std::vector<double>{1, 1, 1});
  spec.cover = 5.0;  // above g(V)
  CHECK_THROWS_AS(spec.validate(), InstanceError);
  spec.cover.reset();
  spec.budget = 0.1;  // below min f(j)
  CHECK_THROWS_AS(spec.validate(), InstanceError);
  spec.budget = 2.0;
  CHECK_NOTHROW(spec.validate());
}
