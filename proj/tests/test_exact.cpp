#include <doctest.h>

#include <random>

#include "dynmono/errors.hpp"
#include "dynmono/exact.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dynmono;

TEST_SUITE("exact") {

TEST_CASE("exact minimum on small fixtures") {
  auto star = fixtures::star(4);
  auto r = min_monopoly_exact(star, proportional_thresholds(star, Rho(1, 5)));
  CHECK(r.h == 1);
  CHECK(r.witness == std::vector<Vertex>{0});

  auto c5 = fixtures::cycle(5);
  auto rc = min_monopoly_exact(c5, proportional_thresholds(c5, Rho(1, 1)));
  CHECK(rc.h == 3);
  CHECK(rc.witness == std::vector<Vertex>{0, 1, 3});
  CHECK(rc.nodes_explored > 0);

  auto isolated = fixtures::edges(4, {});
  auto ri = min_monopoly_exact(isolated, proportional_thresholds(isolated, Rho(1, 2)));
  CHECK(ri.h == 0);
  CHECK(ri.witness.empty());

  auto empty = Graph::from_edges(0, {});
  CHECK(min_monopoly_exact(empty, proportional_thresholds(empty, Rho(1, 1))).h == 0);
}

TEST_CASE("size limit") {
  auto p = fixtures::path(10);
  auto phi = proportional_thresholds(p, Rho(1, 1));
  CHECK_THROWS_AS(min_monopoly_exact(p, phi, 9), SizeLimitError);
  CHECK(min_monopoly_exact(p, phi, 9, true).h == min_monopoly_exact(p, phi).h);
}

TEST_CASE("exact search agrees with subset enumeration") {
  std::mt19937_64 rng(31);
  const Rho rhos[] = {Rho(1, 4), Rho(1, 3), Rho(1, 2), Rho(1, 1)};
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 9;
    auto g = oracle::erdos_renyi(n, 0.35, rng);
    const Rho rho = rhos[i % 4];
    auto phi = proportional_thresholds(g, rho);
    std::vector<std::uint32_t> raw(phi.values().begin(), phi.values().end());
    auto r = min_monopoly_exact(g, phi);
    CHECK(r.h == oracle::brute_min_monopoly(g, raw));
    CHECK(r.witness.size() == r.h);
    CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
    CHECK(oracle::all_on(oracle::sweep_hull(g, raw, r.witness)));
    if (r.h > 0 && n <= 8) CHECK(oracle::no_monopoly_of_size(g, raw, r.h - 1));
  }
}

TEST_CASE("witness is the lexicographically first optimum") {
  auto c6 = fixtures::cycle(6);
  auto phi = proportional_thresholds(c6, Rho(1, 1));
  auto r = min_monopoly_exact(c6, phi);
  std::vector<std::uint32_t> raw(phi.values().begin(), phi.values().end());
  // first size-h mask in lexicographic order of sorted member lists
  std::vector<std::vector<Vertex>> optima;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r.h) continue;
    auto s = oracle::mask_members(mask);
    if (oracle::all_on(oracle::sweep_hull(c6, raw, s))) optima.push_back(s);
  }
  REQUIRE_FALSE(optima.empty());
  CHECK(r.witness == *std::min_element(optima.begin(), optima.end()));
}

TEST_CASE("abw bound values") {
  auto c5 = fixtures::cycle(5);
  CHECK(abw_bound(c5, proportional_thresholds(c5, Rho(1, 1))) == Rational(10, 3));
  auto star = fixtures::star(4);
  CHECK(abw_bound(star, proportional_thresholds(star, Rho(1, 5))) == Rational(11, 5));
  auto edgeless = fixtures::edges(5, {});
  CHECK(abw_bound(edgeless, proportional_thresholds(edgeless, Rho(1, 3))) == 0);
}

TEST_CASE("abw bound matches a fraction oracle") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::erdos_renyi(1 + i % 12, 0.3, rng);
    const Rho rho(1 + i % 3, 3 + i % 3);
    auto phi = proportional_thresholds(g, rho);
    auto f = oracle::abw_sum(g, {phi.values().begin(), phi.values().end()});
    CHECK(abw_bound(g, phi) == Rational(f.num, f.den));
  }
}

}
