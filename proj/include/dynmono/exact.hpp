#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dynmono/cascade.hpp"
#include "dynmono/graph.hpp"

namespace dynmono {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kDefaultExactLimit = 24;

struct ExactResult {
  std::size_t h = 0;
  std::vector<Vertex> witness;  // sorted, |witness| == h
  std::uint64_t nodes_explored = 0;
};

// Minimum monopoly size by enumerating candidate sets in increasing
// cardinality, lexicographically within a cardinality. The first monopoly met
// is returned, so its witness is the lexicographically smallest optimum.
// Throws SizeLimitError when n > limit unless `force` is set.
ExactResult min_monopoly_exact(const Graph& g, const ThresholdProfile& phi,
                               std::size_t limit = kDefaultExactLimit, bool force = false);

// sum over u of phi(u) / (d(u) + 1), exact.
Rational abw_bound(const Graph& g, const ThresholdProfile& phi);

}  // namespace dynmono
