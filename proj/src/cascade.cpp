#include "dynmono/cascade.hpp"

#include <algorithm>
#include <deque>

#include "dynmono/errors.hpp"

namespace dynmono {

ThresholdProfile ThresholdProfile::from_values(const Graph& g, std::vector<std::uint32_t> values) {
  if (values.size() != g.order()) {
    throw InputError("threshold profile has " + std::to_string(values.size()) +
                     " entries for a graph on " + std::to_string(g.order()) + " vertices");
  }
  for (Vertex u = 0; u < values.size(); ++u) {
    if (values[u] > g.degree(u)) {
      throw InputError("threshold " + std::to_string(values[u]) + " of vertex " + std::to_string(u) +
                       " exceeds its degree " + std::to_string(g.degree(u)));
    }
  }
  ThresholdProfile out;
  out.phi_ = std::move(values);
  return out;
}

ThresholdProfile proportional_thresholds(const Graph& g, const Rho& rho) {
  std::vector<std::uint32_t> values(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    values[u] = static_cast<std::uint32_t>(rho.ceil_times(g.degree(u)));
  }
  return ThresholdProfile::from_values(g, std::move(values));
}

Rho effective_rho(const Graph& g, const Rho& rho) {
  const std::size_t max_deg = g.max_degree();
  if (max_deg == 0) throw PreconditionError("effective_rho: graph has no edges");
  if (rho.reaches_inverse(max_deg)) return rho;
  return Rho(1, max_deg);
}

namespace {

void check_seed(const Graph& g, std::span<const Vertex> seed) {
  for (Vertex v : seed) {
    if (v >= g.order()) {
      throw InputError("seed vertex " + std::to_string(v) + " >= n = " + std::to_string(g.order()));
    }
  }
}

}  // namespace

CascadeResult hull(const Graph& g, const ThresholdProfile& phi, std::span<const Vertex> seed) {
  check_seed(g, seed);
  const std::size_t n = g.order();
  CascadeResult out;
  out.round.assign(n, std::nullopt);
  std::vector<std::uint32_t> hits(n, 0);
  std::deque<Vertex> queue;

  std::vector<Vertex> sorted(seed.begin(), seed.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    if (!out.round[v]) {
      out.round[v] = 0;
      queue.push_back(v);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!out.round[v] && phi[v] == 0) {
      out.round[v] = 1;
      queue.push_back(v);
    }
  }
  // FIFO order processes vertices in nondecreasing round, so the vertex that
  // completes a count determines the synchronous generation.
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (out.round[y]) continue;
      if (++hits[y] >= phi[y]) {
        out.round[y] = *out.round[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.round[v]) out.active.push_back(v);
  }
  out.is_monopoly = out.active.size() == n;
  return out;
}

std::vector<Vertex> hull_in_random_order(const Graph& g, const ThresholdProfile& phi,
                                         std::span<const Vertex> seed, std::mt19937_64& rng) {
  check_seed(g, seed);
  const std::size_t n = g.order();
  std::vector<char> active(n, 0);
  std::vector<std::uint32_t> hits(n, 0);
  std::vector<Vertex> pool;
  for (Vertex v : seed) {
    if (!active[v]) {
      active[v] = 1;
      pool.push_back(v);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!active[v] && phi[v] == 0) {
      active[v] = 1;
      pool.push_back(v);
    }
  }
  while (!pool.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::swap(pool[pick(rng)], pool.back());
    Vertex x = pool.back();
    pool.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (active[y]) continue;
      if (++hits[y] >= phi[y]) {
        active[y] = 1;
        pool.push_back(y);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (active[v]) out.push_back(v);
  }
  return out;
}

bool is_monopoly(const Graph& g, const ThresholdProfile& phi, std::span<const Vertex> seed) {
  check_seed(g, seed);
  HullState state(g, phi);
  state.activate(seed);
  return state.complete();
}

HullState::HullState(const Graph& g, const ThresholdProfile& phi)
    : g_(&g), phi_(&phi), active_(g.order(), 0), hits_(g.order(), 0) {
  if (phi.size() != g.order()) throw InputError("threshold profile does not match the graph");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (phi[v] == 0) {
      active_[v] = 1;
      ++count_;
      pending_.push_back(v);
    }
  }
  propagate();
}

std::size_t HullState::activate(std::span<const Vertex> vertices) {
  const std::size_t before = count_;
  for (Vertex v : vertices) {
    if (v >= active_.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (!active_[v]) {
      active_[v] = 1;
      ++count_;
      pending_.push_back(v);
    }
  }
  propagate();
  return count_ - before;
}

void HullState::propagate() {
  while (!pending_.empty()) {
    Vertex x = pending_.back();
    pending_.pop_back();
    for (Vertex y : g_->neighbors(x)) {
      if (active_[y]) continue;
      if (++hits_[y] >= (*phi_)[y]) {
        active_[y] = 1;
        ++count_;
        pending_.push_back(y);
      }
    }
  }
}

std::vector<Vertex> HullState::active_vertices() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < active_.size(); ++v) {
    if (active_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> HullState::inactive_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < active_.size(); ++v) {
    if (!active_[v]) out.push_back(v);
  }
  return out;
}

DegreePartition degree_partition(const Graph& g, const Rho& rho) {
  DegreePartition out;
  for (Vertex u = 0; u < g.order(); ++u) {
    (rho.reaches_inverse(g.degree(u)) ? out.v2 : out.v1).push_back(u);
  }
  return out;
}

}  // namespace dynmono
