#include "dynmono/exact.hpp"

#include <numeric>

#include "dynmono/errors.hpp"

namespace dynmono {

namespace {

// Closure test with buffers reused across calls.
class MonopolyTester {
 public:
  MonopolyTester(const Graph& g, const ThresholdProfile& phi)
      : g_(g), phi_(phi), active_(g.order()), hits_(g.order()) {}

  bool test(std::span<const Vertex> seed) {
    std::fill(active_.begin(), active_.end(), 0);
    std::fill(hits_.begin(), hits_.end(), 0);
    stack_.clear();
    std::size_t count = 0;
    auto push = [&](Vertex v) {
      active_[v] = 1;
      ++count;
      stack_.push_back(v);
    };
    for (Vertex v : seed) push(v);
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!active_[v] && phi_[v] == 0) push(v);
    }
    while (!stack_.empty()) {
      Vertex x = stack_.back();
      stack_.pop_back();
      for (Vertex y : g_.neighbors(x)) {
        if (!active_[y] && ++hits_[y] >= phi_[y]) push(y);
      }
    }
    return count == g_.order();
  }

 private:
  const Graph& g_;
  const ThresholdProfile& phi_;
  std::vector<char> active_;
  std::vector<std::uint32_t> hits_;
  std::vector<Vertex> stack_;
};

// Advances `combo` (strictly increasing, values < n) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Vertex>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ExactResult min_monopoly_exact(const Graph& g, const ThresholdProfile& phi, std::size_t limit,
                               bool force) {
  const std::size_t n = g.order();
  if (phi.size() != n) throw InputError("threshold profile does not match the graph");
  if (n > limit && !force) {
    throw SizeLimitError("exact search refused: n = " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(limit) + " (use force to override)");
  }
  MonopolyTester tester(g, phi);
  ExactResult out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Vertex> combo(k);
    std::iota(combo.begin(), combo.end(), Vertex{0});
    do {
      ++out.nodes_explored;
      if (tester.test(combo)) {
        out.h = k;
        out.witness = std::move(combo);
        return out;
      }
    } while (next_combination(combo, n));
  }
  // V itself is always a monopoly, so the loop returns before reaching here.
  throw std::logic_error("min_monopoly_exact: no monopoly found");
}

Rational abw_bound(const Graph& g, const ThresholdProfile& phi) {
  if (phi.size() != g.order()) throw InputError("threshold profile does not match the graph");
  Rational total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (phi[u] != 0) total += Rational(phi[u], g.degree(u) + 1);
  }
  return total;
}

}  // namespace dynmono
