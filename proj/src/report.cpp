#include "dynmono/report.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dynmono/errors.hpp"

namespace dynmono {

using nlohmann::json;

std::vector<Vertex> parse_seed_set(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j == i) break;
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
      if (ec != std::errc() || ptr != line.data() + j) {
        throw InputError("seed set line " + std::to_string(line_no) + ": invalid vertex id '" +
                         std::string(line.substr(i, j - i)) + "'");
      }
      out.push_back(v);
      i = j;
    }
  }
  return out;
}

std::vector<Vertex> load_seed_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open seed-set file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seed_set(buf.str());
}

json to_json(const CascadeResult& result) {
  json rounds = json::object();
  for (Vertex v = 0; v < result.round.size(); ++v) {
    if (result.round[v]) rounds[std::to_string(v)] = *result.round[v];
  }
  return {{"active", result.active}, {"rounds", std::move(rounds)}, {"is_monopoly", result.is_monopoly}};
}

json to_json(const ExactResult& result) {
  return {{"h", result.h}, {"witness", result.witness}, {"nodes_explored", result.nodes_explored}};
}

json to_json(const Theorem1Params& params) {
  return {{"epsilon", params.epsilon},
          {"delta", params.delta},
          {"rho_max", params.rho_max},
          {"p2", params.p2},
          {"slack", slack_curve(params.delta)}};
}

json to_json(const Theorem1Trace& trace) {
  json rounds = json::array();
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const auto& r = trace.rounds[i];
    rounds.push_back({{"round", i + 1},
                      {"sampled", r.sampled},
                      {"added", r.added.size()},
                      {"hull_size", r.hull_size},
                      {"added_vertices", r.added}});
  }
  return {{"x0", trace.x0},
          {"hull_after_x0", trace.hull_after_x0},
          {"rounds", std::move(rounds)},
          {"fallback_used", trace.fallback_used},
          {"fallback_added", trace.fallback_added},
          {"restarts", trace.restarts}};
}

json to_json(const MonopolySeed& seed) {
  const auto& p = seed.params;
  json params = json::object();
  if (p.rho) params["rho"] = p.rho->str();
  if (p.rng_seed) params["rng_seed"] = *p.rng_seed;
  if (seed.method == Method::Girth5) {
    params["delta"] = *p.delta;
    params["epsilon"] = *p.epsilon;
    params["p1"] = *p.p1;
    params["max_rounds"] = *p.max_rounds;
    params["rounds"] = p.rounds_used;
    params["fallback"] = p.fallback_used;
    params["restarts"] = p.restarts;
  }
  if (p.constraints) {
    const auto& c = *p.constraints;
    params["constraints"] = {{"delta_small", c.delta_small},
                             {"slack_ok", c.slack_ok},
                             {"rho_below_max", c.rho_below_max},
                             {"max_degree_ok", c.max_degree_ok},
                             {"girth_ok", c.girth_ok}};
  }
  json out = {{"method", std::string(method_name(seed.method))},
              {"parameters", std::move(params)},
              {"seed", seed.seed},
              {"size", seed.seed.size()},
              {"verified", seed.verified}};
  if (seed.trace) out["trace"] = to_json(*seed.trace);
  return out;
}

std::string trace_table(const Theorem1Trace& trace) {
  std::ostringstream out;
  out << "round\tsampled\tadded\thull\n";
  out << "0\t" << trace.x0.size() << '\t' << trace.x0.size() << '\t' << trace.hull_after_x0 << '\n';
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const auto& r = trace.rounds[i];
    out << i + 1 << '\t' << r.sampled << '\t' << r.added.size() << '\t' << r.hull_size << '\n';
  }
  if (trace.fallback_used) out << "fallback\t-\t" << trace.fallback_added.size() << "\t-\n";
  return out.str();
}

}  // namespace dynmono
