#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynmono/graph.hpp"

namespace dynmono {

enum class Family { Star, Path, Cycle, Complete, Petersen, RandomTree, RandomGirth5 };

std::string_view family_name(Family f);
Family parse_family(std::string_view tag);

struct GeneratorSpec {
  Family family = Family::Path;
  std::size_t n = 1;        // star: number of leaves; petersen: ignored
  double p = 0.0;           // random_girth5 only
  std::uint64_t rng_seed = 0;  // random families only
};

// Throws InputError on invalid parameters.
Graph generate(const GeneratorSpec& spec);

Graph make_star(std::size_t leaves);   // K_{1,leaves}, centre 0
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);       // n >= 3
Graph make_complete(std::size_t n);
Graph make_petersen();

// Tree decoded from a Prüfer sequence over 0..n-1 (length n-2).
Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence);
Graph random_tree(std::size_t n, std::uint64_t rng_seed);

// G(n, p), then edges on 3- or 4-cycles are removed smallest first until the
// girth is at least 5; the largest component (ties: the one holding the
// smallest id) is returned, relabelled in ascending order.
Graph random_girth5(std::size_t n, double p, std::uint64_t rng_seed);

}  // namespace dynmono
