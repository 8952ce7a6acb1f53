// Small named instances written out edge by edge.
#pragma once

#include <string>
#include <vector>

#include "dynmono/graph.hpp"
#include "oracle.hpp"

namespace fixtures {

using dynmono::Graph;
using dynmono::Vertex;

inline Graph edges(std::size_t n, oracle::Edges e) { return Graph::from_edges(n, e); }

inline Graph path(std::size_t n) {
  oracle::Edges e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return edges(n, e);
}

inline Graph cycle(std::size_t n) {
  oracle::Edges e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(0, static_cast<Vertex>(n - 1));
  return edges(n, e);
}

inline Graph star(std::size_t leaves) {
  oracle::Edges e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return edges(leaves + 1, e);
}

inline Graph complete(std::size_t n) {
  oracle::Edges e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return edges(n, e);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  return edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Centres 0 and 1, leaves 2,3 on 0 and 4,5 on 1.
inline Graph double_star() { return edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

inline Graph k33() { return edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }

inline Graph prism() { return edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

// Two triangles sharing vertex 0, plus a pendant at 4.
inline Graph bowtie_tail() { return edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {4, 5}}); }

struct Named {
  std::string name;
  Graph graph;
};

// Connected fixtures on at most 12 vertices.
inline std::vector<Named> small_connected() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 10; ++n) out.push_back({"P" + std::to_string(n), path(n)});
  for (std::size_t n = 3; n <= 10; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
  for (std::size_t k = 1; k <= 9; ++k) out.push_back({"K1," + std::to_string(k), star(k)});
  for (std::size_t n = 2; n <= 7; ++n) out.push_back({"K" + std::to_string(n), complete(n)});
  out.push_back({"petersen", petersen()});
  out.push_back({"double_star", double_star()});
  out.push_back({"K3,3", k33()});
  out.push_back({"prism", prism()});
  out.push_back({"bowtie_tail", bowtie_tail()});
  return out;
}

}  // namespace fixtures
