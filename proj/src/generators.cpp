#include "dynmono/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "dynmono/errors.hpp"
#include "dynmono/random.hpp"

namespace dynmono {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Petersen: return "petersen";
    case Family::RandomTree: return "random_tree";
    case Family::RandomGirth5: return "random_girth5";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  for (Family f : {Family::Star, Family::Path, Family::Cycle, Family::Complete, Family::Petersen,
                   Family::RandomTree, Family::RandomGirth5}) {
    if (family_name(f) == tag) return f;
  }
  throw InputError("unknown family '" + std::string(tag) + "'");
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph make_star(std::size_t leaves) {
  EdgeList edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph make_path(std::size_t n) {
  if (n == 0) throw InputError("path needs n >= 1");
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

Graph make_complete(std::size_t n) {
  if (n == 0) throw InputError("complete graph needs n >= 1");
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph make_petersen() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
  EdgeList edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence) {
  if (n == 0) throw InputError("tree needs n >= 1");
  if (n == 1) {
    if (!sequence.empty()) throw InputError("Pruefer sequence for n = 1 must be empty");
    return Graph::from_edges(1, {});
  }
  if (sequence.size() != n - 2) throw InputError("Pruefer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw InputError("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  EdgeList edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t rng_seed) {
  if (n == 0) throw InputError("random_tree needs n >= 1");
  auto rng = make_rng(rng_seed);
  std::vector<Vertex> sequence(n >= 2 ? n - 2 : 0);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (auto& v : sequence) v = pick(rng);
  return tree_from_pruefer(n, sequence);
}

Graph random_girth5(std::size_t n, double p, std::uint64_t rng_seed) {
  if (n == 0) throw InputError("random_girth5 needs n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw InputError("random_girth5 needs p in (0, 1)");
  auto rng = make_rng(rng_seed);
  std::bernoulli_distribution coin(p);

  std::vector<std::vector<Vertex>> adj(n);
  EdgeList sampled;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        sampled.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }

  // Removing an edge never puts another edge on a short cycle, so a single
  // pass in lexicographic order equals repeatedly removing the smallest
  // offending edge.
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t clock = 0;
  EdgeList kept;
  for (auto [u, v] : sampled) {
    ++clock;
    for (Vertex b : adj[v]) {
      if (b != u) stamp[b] = clock;
    }
    bool short_cycle = false;
    for (Vertex a : adj[u]) {
      if (a == v) continue;
      if (stamp[a] == clock) {  // triangle u-a-v
        short_cycle = true;
        break;
      }
      for (Vertex b : adj[a]) {
        if (b != u && stamp[b] == clock) {  // 4-cycle u-a-b-v
          short_cycle = true;
          break;
        }
      }
      if (short_cycle) break;
    }
    if (short_cycle) {
      std::erase(adj[u], v);
      std::erase(adj[v], u);
    } else {
      kept.emplace_back(u, v);
    }
  }

  Graph g = Graph::from_edges(n, kept);
  auto blocks = connected_components(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].size() > blocks[best].size()) best = i;
  }
  return induced_subgraph(g, blocks[best]).graph;
}

Graph generate(const GeneratorSpec& spec) {
  if (spec.n == 0 && spec.family != Family::Petersen) throw InputError("generator needs n >= 1");
  switch (spec.family) {
    case Family::Star: return make_star(spec.n);
    case Family::Path: return make_path(spec.n);
    case Family::Cycle: return make_cycle(spec.n);
    case Family::Complete: return make_complete(spec.n);
    case Family::Petersen: return make_petersen();
    case Family::RandomTree: return random_tree(spec.n, spec.rng_seed);
    case Family::RandomGirth5: return random_girth5(spec.n, spec.p, spec.rng_seed);
  }
  throw InputError("unknown family");
}

}  // namespace dynmono
