#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "dynmono/graph.hpp"
#include "dynmono/rho.hpp"

namespace dynmono {

// Per-vertex activation thresholds phi(u) with 0 <= phi(u) <= d(u).
class ThresholdProfile {
 public:
  ThresholdProfile() = default;

  // Throws InputError if the length differs from n or some phi(u) > d(u).
  static ThresholdProfile from_values(const Graph& g, std::vector<std::uint32_t> values);

  std::size_t size() const { return phi_.size(); }
  std::uint32_t operator[](Vertex u) const { return phi_[u]; }
  std::span<const std::uint32_t> values() const { return phi_; }

  friend bool operator==(const ThresholdProfile&, const ThresholdProfile&) = default;

 private:
  std::vector<std::uint32_t> phi_;
};

// phi(u) = ceil(rho * d(u)), exact.
ThresholdProfile proportional_thresholds(const Graph& g, const Rho& rho);

// max(rho, 1/Delta), which yields the same proportional thresholds as rho
// whenever rho <= 1/Delta. Throws PreconditionError on an edgeless graph.
Rho effective_rho(const Graph& g, const Rho& rho);

struct CascadeResult {
  std::vector<Vertex> active;                       // sorted
  std::vector<std::optional<std::uint32_t>> round;  // 0 for seeds, empty when inactive
  bool is_monopoly = false;
};

// The closure of `seed` under "u joins once phi(u) of its neighbours have".
// Rounds are synchronous generations. Vertices with phi = 0 that are not in
// the seed join at round 1.
CascadeResult hull(const Graph& g, const ThresholdProfile& phi, std::span<const Vertex> seed);

// Same closure, but the pending worklist is drained in a random order. Only the
// active set is returned (rounds are order dependent).
std::vector<Vertex> hull_in_random_order(const Graph& g, const ThresholdProfile& phi,
                                         std::span<const Vertex> seed, std::mt19937_64& rng);

bool is_monopoly(const Graph& g, const ThresholdProfile& phi, std::span<const Vertex> seed);

// Incrementally maintained closure. Holds references to `g` and `phi`, which
// must outlive it.
class HullState {
 public:
  HullState(const Graph& g, const ThresholdProfile& phi);

  // Adds vertices (already active ones are ignored) and propagates to the
  // closure. Returns the number of newly active vertices.
  std::size_t activate(std::span<const Vertex> vertices);
  std::size_t activate(Vertex v) { return activate(std::span<const Vertex>(&v, 1)); }

  bool active(Vertex v) const { return active_[v] != 0; }
  std::size_t active_count() const { return count_; }
  bool complete() const { return count_ == active_.size(); }
  std::vector<Vertex> active_vertices() const;
  std::vector<Vertex> inactive_vertices() const;

 private:
  void propagate();

  const Graph* g_;
  const ThresholdProfile* phi_;
  std::vector<char> active_;
  std::vector<std::uint32_t> hits_;
  std::vector<Vertex> pending_;
  std::size_t count_ = 0;
};

struct DegreePartition {
  std::vector<Vertex> v1;  // d(u) < 1/rho
  std::vector<Vertex> v2;  // d(u) >= 1/rho
};

DegreePartition degree_partition(const Graph& g, const Rho& rho);

}  // namespace dynmono
