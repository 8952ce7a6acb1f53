#include "dynmono/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dynmono/errors.hpp"
#include "dynmono/random.hpp"

namespace dynmono {

// ---------------------------------------------------------------------------
// Parameter calculus
// ---------------------------------------------------------------------------

double slack_curve(double delta) {
  const double a = 1.0 + delta;
  const double b = 1.0 - delta;
  return a * a + a / (b * b);
}

double p2_for_delta(double delta) { return 1.0 - std::exp(-delta * delta / (2.0 * (1.0 - delta))); }

double rho_max_for_delta(double delta) {
  // Shaved by a relative 1e-12 so that rounding never lifts it above the bound.
  const double value = delta / (1.0 + delta) * p2_for_delta(delta) / (8.0 * std::log(1.0 / delta));
  return value * (1.0 - 1e-12);
}

std::size_t default_rounds(std::size_t n, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0, 1)");
  const double nn = static_cast<double>(std::max<std::size_t>(n, 1));
  auto ok = [&](std::size_t k) {
    return std::pow(delta, static_cast<double>(k)) * nn + 1.0 / (1.0 + delta) < 1.0;
  };
  double estimate = std::ceil(std::log(nn * (1.0 + delta) / delta) / std::log(1.0 / delta));
  std::size_t k = estimate < 1.0 ? 1 : static_cast<std::size_t>(estimate);
  while (!ok(k)) ++k;
  while (k > 1 && ok(k - 1)) --k;
  return k;
}

double first_moment_target(double delta, const Rho& rho, std::size_t n) {
  const double b = 1.0 - delta;
  return (1.0 + delta) * ((1.0 + delta) + 1.0 / (b * b)) * rho.value() * static_cast<double>(n);
}

double Theorem1Params::p1(const Rho& rho) const { return rho.value() / (1.0 - delta); }

std::size_t Theorem1Params::default_rounds(std::size_t n) const {
  return dynmono::default_rounds(n, delta);
}

Theorem1Params theorem1_params(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("epsilon must be a positive finite number");
  }
  const double cap = std::min(std::exp(-0.25), 0.5);
  double delta = cap;
  if (slack_curve(cap) > 2.0 + epsilon) {
    // slack_curve is increasing on (0, 1) with slack_curve(0) = 2; keep the
    // feasible side of the bracket.
    double lo = 0.0;
    double hi = cap;
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      (slack_curve(mid) <= 2.0 + epsilon ? lo : hi) = mid;
    }
    delta = lo;
  }
  Theorem1Params out;
  out.epsilon = epsilon;
  out.delta = delta;
  out.rho_max = rho_max_for_delta(delta);
  out.p2 = p2_for_delta(delta);
  return out;
}

Theorem1Params theorem1_params_for_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0, 1)");
  Theorem1Params out;
  out.delta = delta;
  out.epsilon = slack_curve(delta) - 2.0;
  out.rho_max = rho_max_for_delta(delta);
  out.p2 = p2_for_delta(delta);
  return out;
}

// ---------------------------------------------------------------------------
// Method tags
// ---------------------------------------------------------------------------

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Abw: return "abw";
    case Method::Girth5: return "girth5";
    case Method::Tree: return "tree";
    case Method::V2: return "v2";
  }
  return "?";
}

Method parse_method(std::string_view tag) {
  if (tag == "abw") return Method::Abw;
  if (tag == "girth5") return Method::Girth5;
  if (tag == "tree") return Method::Tree;
  if (tag == "v2") return Method::V2;
  throw InputError("unknown method '" + std::string(tag) + "' (expected abw, girth5, tree or v2)");
}

namespace {

void finish(const Graph& g, const ThresholdProfile& phi, MonopolySeed& out) {
  std::sort(out.seed.begin(), out.seed.end());
  out.verified = is_monopoly(g, phi, out.seed);
  if (!out.verified) {
    throw std::logic_error(std::string(method_name(out.method)) + " construction produced a non-monopoly");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Random ordering construction
// ---------------------------------------------------------------------------

std::vector<Vertex> abw_seed_for_order(const Graph& g, const ThresholdProfile& phi,
                                       std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n || phi.size() != n) throw InputError("ordering does not match the graph");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != kUnset) throw InputError("ordering is not a permutation");
    position[order[i]] = i;
  }
  std::vector<Vertex> seed;
  for (Vertex u = 0; u < n; ++u) {
    std::uint32_t later = 0;
    for (Vertex v : g.neighbors(u)) later += position[v] > position[u];
    if (later < phi[u]) seed.push_back(u);
  }
  return seed;
}

MonopolySeed abw_construct(const Graph& g, const ThresholdProfile& phi, std::uint64_t rng_seed) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  auto rng = make_rng(rng_seed, 0);
  std::shuffle(order.begin(), order.end(), rng);

  MonopolySeed out;
  out.method = Method::Abw;
  out.params.rng_seed = rng_seed;
  out.seed = abw_seed_for_order(g, phi, order);
  finish(g, phi, out);
  return out;
}

// ---------------------------------------------------------------------------
// Girth-5 construction
// ---------------------------------------------------------------------------

std::vector<Vertex> greedy_x0(const Graph& g, const Rho& rho, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("delta must lie in (0, 1)");
  const auto phi = proportional_thresholds(g, rho);
  const auto part = degree_partition(g, rho);
  if (part.v2.empty()) throw PreconditionError("maximum degree is below 1/rho (V2 is empty)");

  std::vector<char> in_v1(g.order(), 0);
  for (Vertex v : part.v1) in_v1[v] = 1;

  HullState closure(g, phi);
  auto open_v1_neighbours = [&](Vertex u) {
    std::size_t c = 0;
    for (Vertex w : g.neighbors(u)) c += in_v1[w] && !closure.active(w);
    return c;
  };
  auto qualifies = [&](Vertex u) {
    return static_cast<double>(open_v1_neighbours(u)) * (1.0 + delta) > static_cast<double>(g.degree(u));
  };

  // Counts only shrink as the closure grows, so a vertex that fails once fails
  // for good; one ascending pass therefore matches "take the smallest
  // qualifying vertex until none is left".
  std::vector<Vertex> x0;
  for (Vertex u : part.v2) {
    if (qualifies(u)) {
      x0.push_back(u);
      closure.activate(u);
    }
  }

  std::vector<char> in_x0(g.order(), 0);
  for (Vertex v : x0) in_x0[v] = 1;
  for (Vertex u : part.v2) {
    if (!in_x0[u] && qualifies(u)) {
      throw std::logic_error("greedy_x0: maximality violated at vertex " + std::to_string(u));
    }
  }
  const double size_bound = (1.0 + delta) * rho.value() * static_cast<double>(g.order());
  if (static_cast<double>(x0.size()) > size_bound * (1.0 + 1e-12)) {
    throw std::logic_error("greedy_x0: |X0| = " + std::to_string(x0.size()) + " exceeds (1+delta) rho n");
  }
  return x0;
}

namespace {

struct Theorem1Run {
  std::vector<Vertex> seed;
  Theorem1Trace trace;
};

Theorem1Run run_theorem1_once(const Graph& g, const ThresholdProfile& phi, const Rho& rho, double delta,
                              double p1, std::size_t max_rounds, std::mt19937_64& rng) {
  Theorem1Run run;
  auto& trace = run.trace;
  trace.x0 = greedy_x0(g, rho, delta);

  HullState by_y(g, phi);  // H(Y_0 u ... u Y_i)
  by_y.activate(trace.x0);
  HullState by_x(g, phi);  // H(X_0 u ... u X_i)
  by_x.activate(trace.x0);
  trace.hull_after_x0 = by_y.active_count();

  // Every round samples from the same universe V \ H(X_0).
  const std::vector<Vertex> universe = by_y.inactive_vertices();
  std::bernoulli_distribution coin(p1);
  run.seed = trace.x0;

  for (std::size_t i = 1; i <= max_rounds && !by_y.complete(); ++i) {
    std::vector<Vertex> sample;
    for (Vertex v : universe) {
      if (coin(rng)) sample.push_back(v);
    }
    RoundRecord record;
    record.sampled = sample.size();
    for (Vertex v : sample) {
      if (!by_y.active(v)) record.added.push_back(v);
    }
    const std::size_t before = by_y.active_count();
    by_y.activate(record.added);
    by_x.activate(sample);
    if (by_y.active_count() < before || by_x.active_vertices() != by_y.active_vertices()) {
      throw std::logic_error("girth5 construction: closure of the samples diverged in round " +
                             std::to_string(i));
    }
    record.hull_size = by_y.active_count();
    run.seed.insert(run.seed.end(), record.added.begin(), record.added.end());
    record.sample = std::move(sample);
    trace.rounds.push_back(std::move(record));
  }

  if (!by_y.complete()) {
    trace.fallback_used = true;
    trace.fallback_added = by_y.inactive_vertices();
    run.seed.insert(run.seed.end(), trace.fallback_added.begin(), trace.fallback_added.end());
  }
  std::sort(run.seed.begin(), run.seed.end());
  return run;
}

}  // namespace

MonopolySeed theorem1_construct(const Graph& g, const Rho& rho, const Theorem1Options& options) {
  const double delta = options.delta;
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("delta must lie in (0, 1)");
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("girth5 construction needs a connected graph");
  if (!rho.reaches_inverse(g.max_degree())) {
    throw PreconditionError("maximum degree " + std::to_string(g.max_degree()) + " is below 1/rho = " +
                            rho.str() + "^-1");
  }
  const Girth gir = girth(g);
  if (!gir.at_least(5) && !options.allow_low_girth) {
    throw PreconditionError("girth is " + std::to_string(*gir.value) +
                            " < 5 (pass allow_low_girth to run anyway)");
  }
  const auto params = theorem1_params_for_delta(delta);
  const double p1 = params.p1(rho);
  if (p1 > 1.0) throw PreconditionError("sampling probability rho/(1-delta) exceeds 1");

  const auto phi = proportional_thresholds(g, rho);
  const std::size_t n = g.order();
  const std::size_t max_rounds = options.max_rounds.value_or(params.default_rounds(n));
  const double target = first_moment_target(delta, rho, n);

  auto rng = make_rng(options.rng_seed, 0);
  Theorem1Run best = run_theorem1_once(g, phi, rho, delta, p1, max_rounds, rng);
  std::size_t restarts = 0;
  while (static_cast<double>(best.seed.size()) > target && restarts < options.max_restarts) {
    ++restarts;
    auto fresh = make_rng(options.rng_seed, restarts);
    Theorem1Run next = run_theorem1_once(g, phi, rho, delta, p1, max_rounds, fresh);
    if (next.seed.size() < best.seed.size()) best = std::move(next);
  }
  best.trace.restarts = restarts;

  MonopolySeed out;
  out.method = Method::Girth5;
  out.seed = std::move(best.seed);
  auto& p = out.params;
  p.rho = rho;
  p.rng_seed = options.rng_seed;
  p.delta = delta;
  p.epsilon = options.epsilon.value_or(params.epsilon);
  p.p1 = p1;
  p.max_rounds = max_rounds;
  p.rounds_used = best.trace.rounds.size();
  p.fallback_used = best.trace.fallback_used;
  p.restarts = restarts;
  Theorem1Constraints c;
  c.delta_small = delta <= std::min(std::exp(-0.25), 0.5);
  c.slack_ok = slack_curve(delta) <= 2.0 + *p.epsilon + 1e-12;
  c.rho_below_max = rho.value() < params.rho_max;
  c.max_degree_ok = true;
  c.girth_ok = gir.at_least(5);
  p.constraints = c;
  out.trace = std::move(best.trace);
  finish(g, phi, out);
  return out;
}

// ---------------------------------------------------------------------------
// Tree recursion
// ---------------------------------------------------------------------------

namespace {

// Splitting step on a tree with at least two V2 vertices: the chosen vertex and
// the vertex set of the only V2-containing component left after removing it.
struct Split {
  Vertex u = 0;
  std::vector<Vertex> component;
};

Split split_tree(const Graph& t, const std::vector<char>& in_v2) {
  const std::size_t n = t.order();
  // Root at 0 and collect subtree sizes and V2 counts.
  std::vector<Vertex> parent(n, 0), bfs;
  std::vector<char> seen(n, 0);
  bfs.reserve(n);
  bfs.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (Vertex y : t.neighbors(bfs[i])) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = bfs[i];
        bfs.push_back(y);
      }
    }
  }
  std::vector<std::size_t> size(n, 1), v2_count(n, 0);
  for (Vertex v = 0; v < n; ++v) v2_count[v] = in_v2[v];
  for (std::size_t i = bfs.size(); i-- > 1;) {
    size[parent[bfs[i]]] += size[bfs[i]];
    v2_count[parent[bfs[i]]] += v2_count[bfs[i]];
  }
  const std::size_t total_v2 = v2_count[0];

  // For vertex u, each component of T-u is identified by the neighbour it
  // contains: a child c (the subtree of c) or the parent (everything outside
  // the subtree of u).
  auto component_of = [&](Vertex u, Vertex nb) -> std::pair<std::size_t, std::size_t> {
    if (u != 0 && nb == parent[u]) return {n - size[u], total_v2 - v2_count[u]};
    return {size[nb], v2_count[nb]};
  };

  Split best;
  std::size_t best_order = 0;
  Vertex best_nb = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (!in_v2[u]) continue;
    std::size_t order = 0;
    Vertex where = 0;
    for (Vertex nb : t.neighbors(u)) {
      auto [sz, cnt] = component_of(u, nb);
      if (cnt > 0 && sz > order) {
        order = sz;
        where = nb;
      }
    }
    if (order > best_order) {
      best_order = order;
      best.u = u;
      best_nb = where;
    }
  }

  std::size_t v2_components = 0;
  for (Vertex nb : t.neighbors(best.u)) v2_components += component_of(best.u, nb).second > 0;
  if (v2_components != 1) {
    throw std::logic_error("tree_construct: split vertex " + std::to_string(best.u) + " leaves " +
                           std::to_string(v2_components) + " components containing V2 vertices");
  }

  std::vector<char> mark(n, 0);
  mark[best.u] = 1;
  mark[best_nb] = 1;
  best.component.push_back(best_nb);
  for (std::size_t i = 0; i < best.component.size(); ++i) {
    for (Vertex y : t.neighbors(best.component[i])) {
      if (!mark[y]) {
        mark[y] = 1;
        best.component.push_back(y);
      }
    }
  }
  return best;
}

}  // namespace

MonopolySeed tree_construct(const Graph& t, const Rho& rho) {
  if (!is_tree(t)) throw PreconditionError("tree construction needs a tree");
  if (!rho.reaches_inverse(t.order())) {
    throw PreconditionError("tree order " + std::to_string(t.order()) + " is below 1/rho for rho = " +
                            rho.str());
  }

  MonopolySeed out;
  out.method = Method::Tree;
  out.params.rho = rho;

  Graph current = t;
  std::vector<Vertex> to_original(t.order());
  std::iota(to_original.begin(), to_original.end(), Vertex{0});

  for (;;) {
    const std::size_t n = current.order();
    std::vector<char> in_v2(n, 0);
    std::vector<Vertex> v2;
    for (Vertex v = 0; v < n; ++v) {
      if (rho.reaches_inverse(current.degree(v))) {
        in_v2[v] = 1;
        v2.push_back(v);
      }
    }
    if (v2.size() == 1) {
      out.seed.push_back(to_original[v2.front()]);
      break;
    }
    if (v2.empty()) {
      // Every threshold is at most one, so any single vertex floods the tree.
      Vertex pick = 0;
      for (Vertex v = 1; v < n; ++v) {
        if (current.degree(v) > current.degree(pick)) pick = v;
      }
      out.seed.push_back(to_original[pick]);
      break;
    }
    Split split = split_tree(current, in_v2);
    out.seed.push_back(to_original[split.u]);
    auto sub = induced_subgraph(current, split.component);
    std::vector<Vertex> next(sub.to_parent.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = to_original[sub.to_parent[i]];
    to_original = std::move(next);
    current = std::move(sub.graph);
  }

  finish(t, proportional_thresholds(t, rho), out);
  if (out.seed.size() * rho.den() > rho.num() * t.order()) {
    throw std::logic_error("tree_construct: seed of size " + std::to_string(out.seed.size()) +
                           " exceeds rho * n");
  }
  return out;
}

// ---------------------------------------------------------------------------
// V2 baseline
// ---------------------------------------------------------------------------

MonopolySeed v2_baseline(const Graph& g, const Rho& rho) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("v2 baseline needs a connected graph");
  MonopolySeed out;
  out.method = Method::V2;
  out.params.rho = rho;
  out.seed = degree_partition(g, rho).v2;
  if (out.seed.empty()) out.seed.push_back(0);
  finish(g, proportional_thresholds(g, rho), out);
  return out;
}

}  // namespace dynmono
