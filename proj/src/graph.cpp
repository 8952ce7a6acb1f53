#include "dynmono/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "dynmono/errors.hpp"

namespace dynmono {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw InputError("vertex count exceeds the supported range");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " has an endpoint >= n = " + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& adj = g.adjacency_[u];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw InputError("duplicate edge " + std::to_string(std::min<Vertex>(u, *dup)) + "-" +
                       std::to_string(std::max<Vertex>(u, *dup)));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Vertex>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) fail_at(line_no, "expected two integers");

    if (!header) {
      header.emplace(parse_count(tokens[0], line_no), parse_count(tokens[1], line_no));
      if (header->first > std::numeric_limits<Vertex>::max()) fail_at(line_no, "vertex count too large");
      seen.resize(header->first);
      continue;
    }
    if (edges.size() == header->second) {
      fail_at(line_no, "more edge lines than the declared m = " + std::to_string(header->second));
    }
    auto u = parse_count(tokens[0], line_no);
    auto v = parse_count(tokens[1], line_no);
    if (u >= header->first || v >= header->first) {
      fail_at(line_no, "vertex id >= n = " + std::to_string(header->first));
    }
    if (u == v) fail_at(line_no, "self-loop at vertex " + std::to_string(u));
    auto a = static_cast<Vertex>(std::min(u, v));
    auto b = static_cast<Vertex>(std::max(u, v));
    if (std::find(seen[a].begin(), seen[a].end(), b) != seen[a].end()) {
      fail_at(line_no, "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    seen[a].push_back(b);
    edges.emplace_back(a, b);
  }
  if (!header) throw InputError("missing header line \"n m\"");
  if (edges.size() != header->second) {
    throw InputError("declared m = " + std::to_string(header->second) + " but found " +
                     std::to_string(edges.size()) + " edge lines");
  }
  return Graph::from_edges(header->first, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Girth girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> touched;
  std::queue<Vertex> queue;

  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : touched) dist[v] = kUnseen;
    touched.clear();
    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      // Any cycle found from here on is at least 2*dist[x]+1 long.
      if (best != kUnseen && 2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
    queue = {};
  }
  if (best == kUnseen) return {};
  return {best};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    auto& block = blocks.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
  }
  return blocks;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> to_parent(keep.begin(), keep.end());
  for (Vertex v : to_parent) {
    if (v >= g.order()) {
      throw InputError("induced_subgraph: vertex " + std::to_string(v) + " >= n = " +
                       std::to_string(g.order()));
    }
  }
  std::sort(to_parent.begin(), to_parent.end());
  to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());

  std::vector<Vertex> to_child(g.order(), kAbsent);
  for (Vertex i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = i;

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(to_parent[i])) {
      if (to_child[w] != kAbsent && i < to_child[w]) edges.emplace_back(i, to_child[w]);
    }
  }
  return {Graph::from_edges(to_parent.size(), edges), std::move(to_parent)};
}

}  // namespace dynmono
