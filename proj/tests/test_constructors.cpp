#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "dynmono/constructors.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/exact.hpp"
#include "dynmono/generators.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dynmono;

namespace {

std::vector<std::uint32_t> raw(const ThresholdProfile& phi) { return {phi.values().begin(), phi.values().end()}; }

double slack_formula(double d) { return (1 + d) * (1 + d) + (1 + d) / ((1 - d) * (1 - d)); }

double rho_max_formula(double d) {
  return (d / (1 + d)) * (1 - std::exp(-d * d / (2 * (1 - d)))) * (1 / (8 * std::log(1 / d)));
}

// Literal reading of the greedy rule: recompute the closure from scratch and
// take the smallest qualifying vertex, until none qualifies.
std::vector<Vertex> greedy_reference(const Graph& g, const Rho& rho, double delta) {
  auto phi = oracle::thresholds(g, rho.num(), rho.den());
  std::vector<char> v1(g.order());
  for (Vertex u = 0; u < g.order(); ++u) v1[u] = g.degree(u) * rho.num() < rho.den();
  std::vector<Vertex> x0;
  for (;;) {
    auto h = oracle::sweep_hull(g, phi, x0);
    bool picked = false;
    for (Vertex u = 0; u < g.order() && !picked; ++u) {
      if (v1[u] || std::find(x0.begin(), x0.end(), u) != x0.end()) continue;
      std::size_t c = 0;
      for (Vertex w : g.neighbors(u)) c += v1[w] && !h[w];
      if (static_cast<double>(c) > static_cast<double>(g.degree(u)) / (1 + delta)) {
        x0.push_back(u);
        picked = true;
      }
    }
    if (!picked) return x0;
  }
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("parameters for epsilon 0.568") {
  auto p = theorem1_params(0.568);
  CHECK(p.delta == doctest::Approx(0.1).epsilon(1e-4));
  CHECK(slack_formula(p.delta) <= 2.568);
  CHECK(2.568 - slack_formula(p.delta) <= 1e-6);
  CHECK(p.rho_max == doctest::Approx(rho_max_formula(p.delta)).epsilon(1e-9));
  CHECK(p.p2 == doctest::Approx(1 - std::exp(-p.delta * p.delta / (2 * (1 - p.delta)))).epsilon(1e-12));
}

TEST_CASE("rho_max at delta 0.1") {
  const double expect = rho_max_formula(0.1);
  CHECK(std::abs(rho_max_for_delta(0.1) - expect) <= 1e-6 * expect);
  CHECK(expect == doctest::Approx(2.73e-5).epsilon(0.01));
}

TEST_CASE("parameter invariants across epsilon") {
  const double cap = std::min(std::exp(-0.25), 0.5);
  for (double eps : {1e-6, 1e-3, 0.01, 0.1, 0.3, 0.568, 1.0, 2.0, 5.0, 100.0}) {
    auto p = theorem1_params(eps);
    CHECK(p.delta > 0);
    CHECK(p.delta <= cap);
    CHECK(slack_formula(p.delta) <= 2 + eps);
    if (p.delta < cap) CHECK(2 + eps - slack_formula(p.delta) <= 1e-6);
    CHECK(p.rho_max <= rho_max_formula(p.delta));
    CHECK(p.rho_max > 0);
  }
  CHECK(theorem1_params(100.0).delta == cap);
  auto tiny = theorem1_params(1e-9);
  CHECK(tiny.delta < 1e-3);
  CHECK(tiny.rho_max < 1e-9);
  CHECK_THROWS_AS(theorem1_params(0.0), InputError);
  CHECK_THROWS_AS(theorem1_params(-1.0), InputError);
}

TEST_CASE("default round count is the smallest admissible k") {
  for (double delta : {0.1, 0.25, 0.5, 0.7}) {
    for (std::size_t n : {1u, 2u, 10u, 100u, 1000u, 123457u}) {
      std::size_t k = 1;
      while (!(std::pow(delta, static_cast<double>(k)) * static_cast<double>(n) + 1 / (1 + delta) < 1)) ++k;
      CHECK(default_rounds(n, delta) == k);
      CHECK(theorem1_params_for_delta(delta).default_rounds(n) == k);
    }
  }
}

TEST_CASE("method tags") {
  for (auto m : {Method::Abw, Method::Girth5, Method::Tree, Method::V2}) CHECK(parse_method(method_name(m)) == m);
  CHECK_THROWS_AS(parse_method("chang"), InputError);
}

TEST_CASE("greedy X0 examples") {
  CHECK(greedy_x0(fixtures::petersen(), Rho(1, 3), 0.5).empty());
  CHECK(greedy_x0(fixtures::petersen(), Rho(1, 3), 0.1).empty());

  // K_{1,5} with a pendant chain 5-6-7: the centre sees five open V1 leaves
  auto chain = fixtures::edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {5, 6}, {6, 7}});
  CHECK(greedy_x0(chain, Rho(1, 5), 0.5) == std::vector<Vertex>{0});

  // every V2 vertex sees at most d/1.5 open V1 neighbours from the start
  auto calm = fixtures::edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}});
  CHECK(greedy_x0(calm, Rho(1, 3), 0.5).empty());

  CHECK_THROWS_AS(greedy_x0(fixtures::path(20), Rho(1, 10), 0.5), PreconditionError);
  CHECK_THROWS_AS(greedy_x0(fixtures::petersen(), Rho(1, 3), 0.0), PreconditionError);
  CHECK_THROWS_AS(greedy_x0(fixtures::petersen(), Rho(1, 3), 1.0), PreconditionError);
}

TEST_CASE("greedy X0 matches the literal rule and its guarantees") {
  std::mt19937_64 rng(123);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::erdos_renyi(8 + i % 30, 0.1 + 0.02 * (i % 7), rng);
    if (g.max_degree() == 0) continue;
    const Rho rho(1, 1 + i % g.max_degree());
    for (double delta : {0.1, 0.3, 0.5}) {
      auto x0 = greedy_x0(g, rho, delta);
      CHECK(x0 == greedy_reference(g, rho, delta));
      auto h = oracle::sweep_hull(g, oracle::thresholds(g, rho.num(), rho.den()), x0);
      for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) * rho.num() < rho.den()) continue;
        if (std::find(x0.begin(), x0.end(), u) != x0.end()) continue;
        std::size_t c = 0;
        for (Vertex w : g.neighbors(u)) c += g.degree(w) * rho.num() < rho.den() && !h[w];
        CHECK(static_cast<double>(c) <= static_cast<double>(g.degree(u)) / (1 + delta));
      }
      CHECK(static_cast<double>(x0.size()) <= (1 + delta) * rho.value() * static_cast<double>(g.order()));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("girth-5 construction on the Petersen graph") {
  auto pet = fixtures::petersen();
  Theorem1Options opts;
  opts.delta = 0.5;
  opts.rng_seed = 1;
  opts.max_rounds = 10;
  auto r = theorem1_construct(pet, Rho(1, 3), opts);
  CHECK(r.method == Method::Girth5);
  CHECK(r.verified);
  CHECK(oracle::all_on(oracle::sweep_hull(pet, oracle::thresholds(pet, 1, 3), r.seed)));
  REQUIRE(r.trace);
  CHECK(r.trace->x0.empty());
  CHECK(r.trace->hull_after_x0 == 0);
  std::size_t last = r.trace->hull_after_x0;
  for (const auto& round : r.trace->rounds) {
    CHECK(round.hull_size >= last);
    last = round.hull_size;
  }
  if (!r.trace->fallback_used) CHECK(last == 10);
  CHECK(r.params.rng_seed == 1u);
  CHECK(r.params.p1 == doctest::Approx(2.0 / 3.0));
  REQUIRE(r.params.constraints);
  CHECK(r.params.constraints->girth_ok);
  CHECK_FALSE(r.params.constraints->rho_below_max);
}

TEST_CASE("girth-5 construction is deterministic") {
  auto g = random_girth5(200, 0.03, 5);
  const Rho rho(1, g.max_degree());
  Theorem1Options opts;
  opts.rng_seed = 42;
  opts.max_restarts = 3;
  auto a = theorem1_construct(g, rho, opts);
  auto b = theorem1_construct(g, rho, opts);
  CHECK(a.seed == b.seed);
  REQUIRE(a.trace);
  REQUIRE(b.trace);
  CHECK(a.trace->rounds.size() == b.trace->rounds.size());
  for (std::size_t i = 0; i < a.trace->rounds.size(); ++i) {
    CHECK(a.trace->rounds[i].sample == b.trace->rounds[i].sample);
    CHECK(a.trace->rounds[i].added == b.trace->rounds[i].added);
  }
  opts.rng_seed = 43;
  auto c = theorem1_construct(g, rho, opts);
  CHECK(c.verified);
}

TEST_CASE("girth-5 construction fallback and early finish") {
  auto pet = fixtures::petersen();
  Theorem1Options opts;
  opts.max_rounds = 0;
  auto r = theorem1_construct(pet, Rho(1, 3), opts);
  REQUIRE(r.trace);
  CHECK(r.trace->fallback_used);
  CHECK(r.params.fallback_used);
  CHECK(r.trace->rounds.empty());
  CHECK(r.seed.size() == 10);
  CHECK(r.verified);

  // the centre of K_{1,5} alone floods the star
  auto star = fixtures::star(5);
  auto s = theorem1_construct(star, Rho(1, 5), Theorem1Options{});
  REQUIRE(s.trace);
  CHECK(s.seed == std::vector<Vertex>{0});
  CHECK(s.trace->rounds.empty());
  CHECK_FALSE(s.trace->fallback_used);
}

TEST_CASE("girth-5 construction preconditions") {
  Theorem1Options opts;
  CHECK_THROWS_AS(theorem1_construct(fixtures::edges(4, {{0, 1}, {2, 3}}), Rho(1, 1), opts), PreconditionError);
  CHECK_THROWS_AS(theorem1_construct(fixtures::complete(4), Rho(1, 3), opts), PreconditionError);
  CHECK_THROWS_AS(theorem1_construct(fixtures::path(20), Rho(1, 10), opts), PreconditionError);
  CHECK_THROWS_AS(theorem1_construct(fixtures::petersen(), Rho(1, 1), opts), PreconditionError);
  opts.delta = 0.0;
  CHECK_THROWS_AS(theorem1_construct(fixtures::petersen(), Rho(1, 3), opts), PreconditionError);

  Theorem1Options loose;
  loose.allow_low_girth = true;
  auto k4 = theorem1_construct(fixtures::complete(4), Rho(1, 3), loose);
  CHECK(k4.verified);
  CHECK_FALSE(k4.params.constraints->girth_ok);
}

TEST_CASE("girth-5 trace invariants against the oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = random_girth5(150 + 10 * s, 0.04, s);
    const Rho rho(1, g.max_degree());
    auto phi = oracle::thresholds(g, 1, g.max_degree());
    Theorem1Options opts;
    opts.rng_seed = s;
    auto r = theorem1_construct(g, rho, opts);
    REQUIRE(r.trace);
    const auto& t = *r.trace;
    auto h0 = oracle::stack_hull(g, phi, t.x0);
    CHECK(t.hull_after_x0 == oracle::count_on(h0));
    std::vector<Vertex> xs = t.x0, ys = t.x0;
    std::vector<char> taken(g.order(), 0);
    for (Vertex v : t.x0) taken[v] = 1;
    for (const auto& round : t.rounds) {
      auto before = oracle::stack_hull(g, phi, ys);
      CHECK(round.sample.size() == round.sampled);
      for (Vertex v : round.sample) CHECK_FALSE(h0[v]);
      for (Vertex v : round.added) {
        CHECK_FALSE(before[v]);
        CHECK_FALSE(taken[v]);
        taken[v] = 1;
        CHECK(std::binary_search(round.sample.begin(), round.sample.end(), v));
      }
      for (Vertex v : round.sample) {
        if (!before[v]) CHECK(std::binary_search(round.added.begin(), round.added.end(), v));
      }
      xs.insert(xs.end(), round.sample.begin(), round.sample.end());
      ys.insert(ys.end(), round.added.begin(), round.added.end());
      auto hy = oracle::stack_hull(g, phi, ys);
      CHECK(hy == oracle::stack_hull(g, phi, xs));
      CHECK(oracle::count_on(hy) == round.hull_size);
    }
    CHECK(oracle::all_on(oracle::stack_hull(g, phi, r.seed)));
  }
}

TEST_CASE("restarts keep the smaller run") {
  auto g = random_girth5(300, 0.02, 9);
  const Rho rho(1, g.max_degree());
  Theorem1Options once;
  once.rng_seed = 3;
  once.max_rounds = 1;
  Theorem1Options many = once;
  many.max_restarts = 5;
  auto a = theorem1_construct(g, rho, once);
  auto b = theorem1_construct(g, rho, many);
  CHECK(b.seed.size() <= a.seed.size());
  CHECK(b.verified);
  const double target = first_moment_target(0.5, rho, g.order());
  if (static_cast<double>(a.seed.size()) <= target) CHECK(b.params.restarts == 0);
}

TEST_CASE("ordering rule") {
  auto k2 = fixtures::complete(2);
  auto full = ThresholdProfile::from_values(k2, {1, 1});
  std::vector<Vertex> forward{0, 1}, backward{1, 0};
  CHECK(abw_seed_for_order(k2, full, forward) == std::vector<Vertex>{1});
  CHECK(abw_seed_for_order(k2, full, backward) == std::vector<Vertex>{0});

  auto c5 = fixtures::cycle(5);
  auto zero = ThresholdProfile::from_values(c5, {0, 0, 0, 0, 0});
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(abw_construct(c5, zero, s).seed.empty());

  std::vector<Vertex> bad{0, 0, 1, 2, 3};
  CHECK_THROWS_AS(abw_seed_for_order(c5, zero, bad), InputError);
}

TEST_CASE("ordering rule gives monopolies for every permutation") {
  for (const auto& [name, g] : fixtures::small_connected()) {
    if (g.order() > 6) continue;
    for (auto rho : {Rho(1, 3), Rho(1, 2), Rho(1, 1)}) {
      auto phi = proportional_thresholds(g, rho);
      std::vector<Vertex> order(g.order());
      std::iota(order.begin(), order.end(), Vertex{0});
      do {
        auto d = abw_seed_for_order(g, phi, order);
        CHECK_MESSAGE(oracle::all_on(oracle::sweep_hull(g, raw(phi), d)), name);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("ordering rule mean on C5") {
  auto c5 = fixtures::cycle(5);
  auto phi = proportional_thresholds(c5, Rho(1, 1));
  double sum = 0, sq = 0;
  const int trials = 4000;
  for (int s = 0; s < trials; ++s) {
    const double k = static_cast<double>(abw_construct(c5, phi, static_cast<std::uint64_t>(s)).seed.size());
    sum += k;
    sq += k * k;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - 10.0 / 3.0) <= 3 * se);
}

TEST_CASE("tree recursion examples") {
  auto k14 = tree_construct(fixtures::star(4), Rho(1, 5));
  CHECK(k14.seed == std::vector<Vertex>{0});
  CHECK(k14.verified);

  auto ds = tree_construct(fixtures::double_star(), Rho(1, 3));
  CHECK(ds.seed == std::vector<Vertex>{0, 1});

  auto p20 = tree_construct(fixtures::path(20), Rho(1, 10));
  CHECK(p20.seed == std::vector<Vertex>{1});
  CHECK(oracle::all_on(oracle::sweep_hull(fixtures::path(20), oracle::thresholds(fixtures::path(20), 1, 10),
                                          p20.seed)));

  CHECK_THROWS_AS(tree_construct(fixtures::cycle(5), Rho(1, 2)), PreconditionError);
  CHECK_THROWS_AS(tree_construct(fixtures::path(3), Rho(1, 5)), PreconditionError);
  CHECK_NOTHROW(tree_construct(fixtures::path(5), Rho(1, 5)));
}

TEST_CASE("tree recursion bound and oracle dominance") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& t : oracle::all_trees(n)) {
      for (auto rho : {Rho(1, 4), Rho(1, 3), Rho(1, 2), Rho(1, 1)}) {
        if (n * rho.num() < rho.den()) continue;
        auto r = tree_construct(t, rho);
        auto phi = oracle::thresholds(t, rho.num(), rho.den());
        CHECK(oracle::all_on(oracle::sweep_hull(t, phi, r.seed)));
        CHECK(r.seed.size() * rho.den() <= rho.num() * n);
        CHECK(r.seed.size() >= oracle::brute_min_monopoly(t, phi));
      }
    }
  }
}

TEST_CASE("V2 baseline") {
  auto pet = v2_baseline(fixtures::petersen(), Rho(1, 3));
  CHECK(pet.seed.size() == 10);
  CHECK(v2_baseline(fixtures::path(20), Rho(1, 10)).seed == std::vector<Vertex>{0});
  CHECK(v2_baseline(fixtures::star(5), Rho(1, 5)).seed == std::vector<Vertex>{0});
  CHECK_THROWS_AS(v2_baseline(fixtures::edges(4, {{0, 1}, {2, 3}}), Rho(1, 2)), PreconditionError);
}

}
