#include "dynmono/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include <fmt/format.h>

#include "dynmono/cascade.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/exact.hpp"

namespace dynmono {

using nlohmann::json;

std::string BenchRho::label() const { return fixed ? fixed->str() : "1/Delta"; }

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw InputError("bench config: unknown key '" + key + "' in " + std::string(where));
  }
}

BenchInstance parse_instance(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw InputError("bench config: each instance must be an object");
  reject_unknown_keys(j, {"family", "n", "p", "seed", "file"}, "instance");
  BenchInstance out;
  if (j.contains("file")) {
    if (j.contains("family")) throw InputError("bench config: instance has both 'file' and 'family'");
    std::filesystem::path p = j.at("file").get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    out.path = p.string();
    return out;
  }
  GeneratorSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.n = j.value("n", static_cast<std::size_t>(spec.family == Family::Petersen ? 10 : 0));
  spec.p = j.value("p", 0.0);
  spec.rng_seed = j.value("seed", std::uint64_t{0});
  out.generator = spec;
  return out;
}

BenchRho parse_bench_rho(const json& j) {
  const std::string text = j.is_string() ? j.get<std::string>() : j.dump();
  if (text == "1/Delta" || text == "inverse_max_degree") return {};
  return {parse_rho(text)};
}

BenchMethod parse_bench_method(const json& j) {
  BenchMethod out;
  if (j.is_string()) {
    out.method = parse_method(j.get<std::string>());
    return out;
  }
  if (!j.is_object()) throw InputError("bench config: a method must be a string or an object");
  reject_unknown_keys(j, {"method", "delta", "max_rounds", "max_restarts", "allow_low_girth"}, "method");
  out.method = parse_method(j.at("method").get<std::string>());
  out.delta = j.value("delta", 0.5);
  if (j.contains("max_rounds")) out.max_rounds = j.at("max_rounds").get<std::size_t>();
  out.max_restarts = j.value("max_restarts", std::size_t{0});
  out.allow_low_girth = j.value("allow_low_girth", false);
  return out;
}

}  // namespace

BenchConfig parse_bench_config(const json& doc, const std::string& base_dir) {
  if (!doc.is_object()) throw InputError("bench config must be a JSON object");
  try {
    reject_unknown_keys(doc,
                        {"instances", "rhos", "methods", "trials", "rng_seed_base", "epsilon", "output",
                         "oracle_limit", "threads"},
                        "config");
    BenchConfig cfg;
    for (const auto& j : doc.value("instances", json::array())) cfg.instances.push_back(parse_instance(j, base_dir));
    for (const auto& j : doc.value("rhos", json::array())) cfg.rhos.push_back(parse_bench_rho(j));
    for (const auto& j : doc.value("methods", json::array())) cfg.methods.push_back(parse_bench_method(j));
    cfg.trials = doc.value("trials", std::size_t{1});
    cfg.rng_seed_base = doc.value("rng_seed_base", std::uint64_t{0});
    if (doc.contains("epsilon") && !doc.at("epsilon").is_null()) {
      cfg.epsilon = doc.at("epsilon").get<double>();
      if (!(*cfg.epsilon > 0.0)) throw InputError("bench config: epsilon must be positive");
    }
    cfg.output = doc.value("output", std::string{});
    cfg.oracle_limit = doc.value("oracle_limit", std::size_t{12});
    cfg.threads = doc.value("threads", std::size_t{1});
    if (cfg.trials < 1) throw InputError("bench config: trials must be at least 1");
    if (cfg.threads < 1) throw InputError("bench config: threads must be at least 1");
    return cfg;
  } catch (const json::exception& e) {
    throw InputError(std::string("bench config: ") + e.what());
  }
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open bench config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_bench_config(doc, std::filesystem::path(path).parent_path().string());
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

std::uint64_t cell_seed(std::uint64_t base, const std::string& family, std::size_t n, const Rho& rho,
                        Method method, std::size_t trial) {
  const std::string key = fmt::format("{}|{}|{}|{}|{}|{}", base, family, n, rho.str(), method_name(method), trial);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

namespace {

struct PreparedInstance {
  std::string family;
  Graph graph;
};

struct PreparedRho {
  std::size_t instance = 0;
  std::optional<Rho> rho;  // empty when 1/Delta is undefined
  ThresholdProfile phi;
  double bound_abw = 0.0;
  std::optional<std::size_t> exact_h;
};

struct Cell {
  std::size_t prepared = 0;
  std::size_t method = 0;
  std::size_t trial = 0;
};

bool deterministic(Method m) { return m == Method::Tree || m == Method::V2; }

using CellOutcome = std::variant<BenchRow, SkippedCell>;

CellOutcome run_cell(const BenchConfig& cfg, const PreparedInstance& inst, const PreparedRho& pr,
                     const BenchMethod& bm, std::size_t trial) {
  const Graph& g = inst.graph;
  const Rho& rho = *pr.rho;
  const std::uint64_t seed = cell_seed(cfg.rng_seed_base, inst.family, g.order(), rho, bm.method, trial);

  const auto start = std::chrono::steady_clock::now();
  MonopolySeed result;
  try {
    switch (bm.method) {
      case Method::Abw:
        result = abw_construct(g, pr.phi, seed);
        break;
      case Method::Girth5: {
        Theorem1Options opts;
        opts.delta = bm.delta;
        opts.epsilon = cfg.epsilon;
        opts.rng_seed = seed;
        opts.max_rounds = bm.max_rounds;
        opts.max_restarts = bm.max_restarts;
        opts.allow_low_girth = bm.allow_low_girth;
        result = theorem1_construct(g, rho, opts);
        break;
      }
      case Method::Tree:
        result = tree_construct(g, rho);
        break;
      case Method::V2:
        result = v2_baseline(g, rho);
        break;
    }
  } catch (const PreconditionError& e) {
    return SkippedCell{inst.family, g.order(), rho.str(), bm.method, e.what()};
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  // Independent re-check with the synchronous-round closure.
  if (!hull(g, pr.phi, result.seed).is_monopoly) {
    throw std::logic_error(fmt::format("bench: {} seed on {} (n = {}, rho = {}) is not a monopoly",
                                       method_name(bm.method), inst.family, g.order(), rho.str()));
  }
  if (pr.exact_h && result.seed.size() < *pr.exact_h) {
    throw std::logic_error(fmt::format("bench: {} seed of size {} beats the exact minimum {} on {}",
                                       method_name(bm.method), result.seed.size(), *pr.exact_h, inst.family));
  }

  const double rho_n = rho.value() * static_cast<double>(g.order());
  BenchRow row;
  row.family = inst.family;
  row.n = g.order();
  row.m = g.size();
  row.rho = rho;
  row.method = bm.method;
  row.trial = trial;
  row.seed_size = result.seed.size();
  row.bound_abw = pr.bound_abw;
  row.bound_583 = (2.0 * std::sqrt(2.0) + 3.0) * rho_n;
  row.bound_492 = 4.92 * rho_n;
  if (cfg.epsilon) row.bound_2eps = (2.0 + *cfg.epsilon) * rho_n;
  row.bound_rho_n = rho_n;
  row.valid = true;
  if (bm.method == Method::Girth5) {
    row.delta = bm.delta;
    row.rounds = result.params.rounds_used;
    row.fallback = result.params.fallback_used;
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return row;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  std::vector<PreparedInstance> instances;
  for (const auto& bi : cfg.instances) {
    if (bi.generator) {
      const auto& spec = *bi.generator;
      std::string label(family_name(spec.family));
      if (spec.family == Family::RandomTree) {
        label += fmt::format("[n={} seed={}]", spec.n, spec.rng_seed);
      } else if (spec.family == Family::RandomGirth5) {
        label += fmt::format("[n={} p={} seed={}]", spec.n, spec.p, spec.rng_seed);
      }
      instances.push_back({std::move(label), generate(spec)});
    } else {
      instances.push_back({bi.path, load_graph(bi.path)});
    }
  }

  BenchReport report;
  std::vector<PreparedRho> prepared;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Graph& g = instances[i].graph;
    for (const auto& br : cfg.rhos) {
      PreparedRho pr;
      pr.instance = i;
      if (br.fixed) {
        pr.rho = br.fixed;
      } else if (g.max_degree() > 0) {
        pr.rho = Rho(1, g.max_degree());
      } else {
        for (const auto& bm : cfg.methods) {
          report.skipped.push_back({instances[i].family, g.order(), br.label(), bm.method,
                                    "1/Delta is undefined on an edgeless graph"});
        }
        continue;
      }
      pr.phi = proportional_thresholds(g, *pr.rho);
      pr.bound_abw = static_cast<double>(abw_bound(g, pr.phi));
      if (cfg.oracle_limit > 0 && g.order() <= cfg.oracle_limit) {
        pr.exact_h = min_monopoly_exact(g, pr.phi, cfg.oracle_limit).h;
      }
      prepared.push_back(std::move(pr));
    }
  }

  std::vector<Cell> cells;
  for (std::size_t p = 0; p < prepared.size(); ++p) {
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      const std::size_t trials = deterministic(cfg.methods[mi].method) ? 1 : cfg.trials;
      for (std::size_t t = 0; t < trials; ++t) cells.push_back({p, mi, t});
    }
  }

  std::vector<std::optional<CellOutcome>> outcomes(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const Cell& cell = cells[c];
      const PreparedRho& pr = prepared[cell.prepared];
      try {
        outcomes[c] = run_cell(cfg, instances[pr.instance], pr, cfg.methods[cell.method], cell.trial);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(cfg.threads, std::max<std::size_t>(cells.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // A precondition failure does not depend on the trial; report it once.
  std::set<std::pair<std::size_t, std::size_t>> skipped_once;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (auto* row = std::get_if<BenchRow>(&*outcomes[c])) {
      report.rows.push_back(std::move(*row));
    } else if (skipped_once.insert({cells[c].prepared, cells[c].method}).second) {
      report.skipped.push_back(std::get<SkippedCell>(*outcomes[c]));
    }
  }

  for (const auto& bm : cfg.methods) {
    bool seen = false;
    for (const auto& s : report.summary) seen = seen || s.method == bm.method;
    if (seen) continue;
    MethodSummary s;
    s.method = bm.method;
    double total = 0.0;
    for (const auto& row : report.rows) {
      if (row.method != bm.method) continue;
      const double ratio = static_cast<double>(row.seed_size) / row.bound_rho_n;
      total += ratio;
      s.max_ratio = s.rows == 0 ? ratio : std::max(s.max_ratio, ratio);
      ++s.rows;
    }
    s.mean_ratio = s.rows == 0 ? 0.0 : total / static_cast<double>(s.rows);
    report.summary.push_back(s);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

std::string bench_csv_header() {
  return "family,n,m,rho,delta,method,trial,seed_size,bound_abw,bound_583,bound_492,bound_2eps,"
         "bound_rho_n,valid,rounds,fallback,runtime_ms\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string opt_field(const std::optional<T>& v, const char* spec = "{}") {
  return v ? fmt::format(fmt::runtime(spec), *v) : std::string{};
}

}  // namespace

std::string bench_csv(const BenchReport& report) {
  std::string out = bench_csv_header();
  for (const auto& r : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{:.6f},{:.6f},{:.6f},{},{:.6f},{},{},{},{}\n", csv_field(r.family),
                       r.n, r.m, r.rho.str(), opt_field(r.delta, "{:.6g}"), method_name(r.method), r.trial,
                       r.seed_size, r.bound_abw, r.bound_583, r.bound_492, opt_field(r.bound_2eps, "{:.6f}"),
                       r.bound_rho_n, r.valid, opt_field(r.rounds), opt_field(r.fallback), r.runtime_ms);
  }
  return out;
}

json bench_summary(const BenchReport& report) {
  json methods = json::array();
  for (const auto& s : report.summary) {
    methods.push_back({{"method", std::string(method_name(s.method))},
                       {"rows", s.rows},
                       {"mean_ratio", s.mean_ratio},
                       {"max_ratio", s.max_ratio}});
  }
  json skipped = json::array();
  for (const auto& s : report.skipped) {
    skipped.push_back({{"family", s.family},
                       {"n", s.n},
                       {"rho", s.rho},
                       {"method", std::string(method_name(s.method))},
                       {"reason", s.reason}});
  }
  return {{"rows", report.rows.size()}, {"methods", std::move(methods)}, {"skipped", std::move(skipped)}};
}

}  // namespace dynmono
