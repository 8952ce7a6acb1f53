#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dynmono/cascade.hpp"
#include "dynmono/graph.hpp"
#include "dynmono/rho.hpp"

namespace dynmono {

// ---------------------------------------------------------------------------
// Parameters of the girth-5 construction.
//
// For a target slack epsilon the construction needs delta with
//   delta <= min{e^{-1/4}, 1/2}
//   (1+delta)^2 + (1+delta)/(1-delta)^2 <= 2 + epsilon
// and a proportionality bound
//   rho_max = delta/(1+delta) * (1 - e^{-delta^2/(2(1-delta))}) / (8 ln(1/delta)).
// ---------------------------------------------------------------------------
struct Theorem1Params {
  double epsilon = 0.0;
  double delta = 0.0;
  double rho_max = 0.0;
  double p2 = 0.0;

  // Per-round sampling probability rho / (1 - delta).
  double p1(const Rho& rho) const;
  // Smallest k >= 1 with delta^k * n + 1/(1+delta) < 1.
  std::size_t default_rounds(std::size_t n) const;
};

// Throws InputError unless epsilon > 0.
Theorem1Params theorem1_params(double epsilon);

// Same quantities for a caller-chosen delta in (0, 1); epsilon is set to the
// smallest slack this delta achieves.
Theorem1Params theorem1_params_for_delta(double delta);

// (1+delta)^2 + (1+delta)/(1-delta)^2
double slack_curve(double delta);
double rho_max_for_delta(double delta);
double p2_for_delta(double delta);
std::size_t default_rounds(std::size_t n, double delta);

// Size target (1+delta) * ((1+delta) + 1/(1-delta)^2) * rho * n used to accept
// or restart a run of the girth-5 construction.
double first_moment_target(double delta, const Rho& rho, std::size_t n);

// ---------------------------------------------------------------------------
// Seeds and traces.
// ---------------------------------------------------------------------------
enum class Method { Abw, Girth5, Tree, V2 };

std::string_view method_name(Method m);
// Throws InputError on an unknown tag.
Method parse_method(std::string_view tag);

struct RoundRecord {
  std::size_t sampled = 0;     // |X_i|
  std::vector<Vertex> sample;  // X_i, sorted
  std::vector<Vertex> added;   // Y_i, sorted
  std::size_t hull_size = 0;   // |H(Y_0 u ... u Y_i)|
};

struct Theorem1Trace {
  std::vector<Vertex> x0;
  std::size_t hull_after_x0 = 0;
  std::vector<RoundRecord> rounds;
  bool fallback_used = false;
  std::vector<Vertex> fallback_added;
  std::size_t restarts = 0;
};

// Which of the guarantee's side conditions the chosen parameters satisfy.
// They are reported, not enforced.
struct Theorem1Constraints {
  bool delta_small = false;          // delta <= min{e^{-1/4}, 1/2}
  bool slack_ok = false;             // slack_curve(delta) <= 2 + epsilon (when epsilon is known)
  bool rho_below_max = false;        // rho < rho_max(delta)
  bool max_degree_ok = false;        // Delta >= 1/rho
  bool girth_ok = false;             // girth >= 5
};

struct SeedParams {
  std::optional<Rho> rho;
  std::optional<std::uint64_t> rng_seed;
  std::optional<double> delta;
  std::optional<double> epsilon;
  std::optional<double> p1;
  std::optional<std::size_t> max_rounds;
  std::size_t rounds_used = 0;
  bool fallback_used = false;
  std::size_t restarts = 0;
  std::optional<Theorem1Constraints> constraints;
};

struct MonopolySeed {
  std::vector<Vertex> seed;  // sorted
  Method method = Method::V2;
  SeedParams params;
  bool verified = false;
  std::optional<Theorem1Trace> trace;
};

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

// Seed picked out by a vertex ordering: u is kept when fewer than phi(u) of
// its neighbours come after it. Any ordering gives a monopoly.
std::vector<Vertex> abw_seed_for_order(const Graph& g, const ThresholdProfile& phi,
                                       std::span<const Vertex> order);

// The same rule applied to a uniformly random ordering.
MonopolySeed abw_construct(const Graph& g, const ThresholdProfile& phi, std::uint64_t rng_seed);

// Greedy set of high-degree vertices after which no vertex of V2 outside the set
// keeps more than d(u)/(1+delta) neighbours in V1 outside the closure. Throws
// PreconditionError when V2 is empty or delta is outside (0, 1), and
// std::logic_error if the size guarantee |X0| <= (1+delta) rho n fails.
std::vector<Vertex> greedy_x0(const Graph& g, const Rho& rho, double delta);

struct Theorem1Options {
  double delta = 0.5;
  std::optional<double> epsilon;
  std::uint64_t rng_seed = 1;
  std::optional<std::size_t> max_rounds;  // default_rounds(n) when empty
  std::size_t max_restarts = 0;
  bool allow_low_girth = false;
};

MonopolySeed theorem1_construct(const Graph& g, const Rho& rho, const Theorem1Options& options);

// Tree recursion: split off the unique V2-containing component at the vertex
// that maximises its order, recurse, and add the split vertex. Result has at
// most floor(rho * n) vertices.
MonopolySeed tree_construct(const Graph& t, const Rho& rho);

// V2 when nonempty, else vertex 0. A monopoly on connected graphs.
MonopolySeed v2_baseline(const Graph& g, const Rho& rho);

}  // namespace dynmono
