// Command-line front end. Talks to the library only through the C interface.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynmono/dynmono.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { dm_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(dm_graph* g) const { dm_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<dm_graph, GraphDeleter>;

struct CascadeDeleter {
  void operator()(dm_cascade* c) const { dm_cascade_free(c); }
};

struct IdsDeleter {
  void operator()(uint32_t* p) const { dm_ids_free(p); }
};

// Unwinds to main with the status of a failed library call.
struct Failure {
  dm_status status;
};

void check(dm_status s) {
  if (s != DM_OK) {
    std::cerr << "error: " << dm_last_error() << '\n';
    throw Failure{s};
  }
}

OwnedGraph load(const std::string& path) {
  dm_graph* g = nullptr;
  check(dm_graph_load(path.c_str(), &g));
  return OwnedGraph(g);
}

struct RhoArg {
  uint64_t num = 1;
  uint64_t den = 1;
};

RhoArg parse_rho(const std::string& text) {
  RhoArg r;
  check(dm_rho_parse(text.c_str(), &r.num, &r.den));
  return r;
}

struct SeedSet {
  std::unique_ptr<uint32_t, IdsDeleter> ids;
  size_t len = 0;
};

SeedSet load_seeds(const std::string& path) {
  uint32_t* ids = nullptr;
  SeedSet s;
  check(dm_seed_set_load(path.c_str(), &ids, &s.len));
  s.ids.reset(ids);
  return s;
}

void print_json(const char* text) { std::cout << nlohmann::json::parse(text).dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{DM_ERR_INPUT};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic monopolies for degree-proportional thresholds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dm_version()));

  std::string graph_path, rho_text, seed_path, out_path, family, method = "v2", config_path;
  size_t n = 0, limit = 24, max_rounds = 0, max_restarts = 0;
  double p = 0.0, delta = 0.0, epsilon = 0.0;
  uint64_t seed = 0, rng_seed = 1;
  bool as_json = false, force = false, allow_low_girth = false;

  auto* gen = app.add_subcommand("gen", "Generate an instance in edge-list format");
  gen->add_option("--family", family, "star|path|cycle|complete|petersen|random_tree|random_girth5")->required();
  gen->add_option("--n", n, "Size parameter (leaves for star)");
  gen->add_option("--p", p, "Edge probability (random_girth5)");
  gen->add_option("--seed", seed, "RNG seed (random families)");
  gen->add_option("-o,--output", out_path, "Output file")->required();

  auto* gir = app.add_subcommand("girth", "Print the girth of a graph");
  gir->add_option("-g,--graph", graph_path, "Edge-list file")->required();

  auto* hull = app.add_subcommand("hull", "Compute the activation closure of a seed set");
  hull->add_option("-g,--graph", graph_path)->required();
  hull->add_option("--rho", rho_text, "P/Q or decimal")->required();
  hull->add_option("--seed-set", seed_path)->required();
  hull->add_flag("--json", as_json, "Emit the full record as JSON");

  auto* verify = app.add_subcommand("verify", "Check whether a seed set is a monopoly");
  verify->add_option("-g,--graph", graph_path)->required();
  verify->add_option("--rho", rho_text)->required();
  verify->add_option("--seed-set", seed_path)->required();

  auto* solve = app.add_subcommand("solve", "Exact minimum monopoly by exhaustive search");
  solve->add_option("-g,--graph", graph_path)->required();
  solve->add_option("--rho", rho_text)->required();
  solve->add_option("--limit", limit, "Largest n searched without --force");
  solve->add_flag("--force", force, "Search even above the limit");

  auto* construct = app.add_subcommand("construct", "Build a monopoly with one of the constructions");
  construct->add_option("-g,--graph", graph_path)->required();
  construct->add_option("--rho", rho_text)->required();
  construct->add_option("--method", method, "abw|girth5|tree|v2")->required();
  construct->add_option("--delta", delta, "girth5: delta (default 0.5)");
  construct->add_option("--epsilon", epsilon, "girth5: epsilon; sets delta when --delta is absent");
  construct->add_option("--rng-seed", rng_seed);
  auto* rounds_opt = construct->add_option("--max-rounds", max_rounds, "girth5: sampling rounds before fallback");
  construct->add_option("--max-restarts", max_restarts);
  construct->add_flag("--allow-low-girth", allow_low_girth);

  auto* params = app.add_subcommand("params", "Parameter calculus for a given epsilon");
  params->add_option("--epsilon", epsilon)->required();

  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  bench->add_option("--config", config_path, "JSON config")->required();
  bench->add_option("-o,--output", out_path, "CSV output (defaults to the config's output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return DM_ERR_INPUT;
  }

  try {
    if (*gen) {
      dm_graph* g = nullptr;
      check(dm_graph_generate(family.c_str(), n, p, seed, &g));
      OwnedGraph owned(g);
      check(dm_graph_save(g, out_path.c_str()));
      std::cout << "wrote " << out_path << " (n = " << dm_graph_order(g) << ", m = " << dm_graph_size(g) << ")\n";
    } else if (*gir) {
      auto g = load(graph_path);
      size_t value = 0;
      check(dm_graph_girth(g.get(), &value));
      if (value == 0) {
        std::cout << "acyclic\n";
      } else {
        std::cout << value << '\n';
      }
    } else if (*hull) {
      auto g = load(graph_path);
      auto rho = parse_rho(rho_text);
      auto seeds = load_seeds(seed_path);
      dm_cascade* c = nullptr;
      check(dm_hull(g.get(), rho.num, rho.den, seeds.ids.get(), seeds.len, &c));
      std::unique_ptr<dm_cascade, CascadeDeleter> owned(c);
      if (as_json) {
        char* text = nullptr;
        check(dm_cascade_to_json(c, &text));
        OwnedString s(text);
        print_json(text);
      } else {
        int64_t last = 0;
        for (uint32_t v = 0; v < dm_graph_order(g.get()); ++v) last = std::max(last, dm_cascade_round(c, v));
        std::cout << "active: " << dm_cascade_active_count(c) << " / " << dm_graph_order(g.get()) << '\n'
                  << "rounds: " << last << '\n'
                  << "is_monopoly: " << (dm_cascade_is_monopoly(c) ? "true" : "false") << '\n';
      }
    } else if (*verify) {
      auto g = load(graph_path);
      auto rho = parse_rho(rho_text);
      auto seeds = load_seeds(seed_path);
      int result = 0;
      check(dm_is_monopoly(g.get(), rho.num, rho.den, seeds.ids.get(), seeds.len, &result));
      std::cout << (result ? "true" : "false") << '\n';
    } else if (*solve) {
      auto g = load(graph_path);
      auto rho = parse_rho(rho_text);
      char* text = nullptr;
      check(dm_solve(g.get(), rho.num, rho.den, limit, force ? 1 : 0, &text));
      OwnedString s(text);
      print_json(text);
    } else if (*construct) {
      auto g = load(graph_path);
      auto rho = parse_rho(rho_text);
      dm_construct_options opts;
      dm_construct_options_init(&opts);
      opts.method = method.c_str();
      opts.delta = delta;
      opts.epsilon = epsilon;
      opts.rng_seed = rng_seed;
      opts.max_rounds = max_rounds;
      opts.max_rounds_set = rounds_opt->count() > 0 ? 1 : 0;
      opts.max_restarts = max_restarts;
      opts.allow_low_girth = allow_low_girth ? 1 : 0;
      char* text = nullptr;
      check(dm_construct(g.get(), rho.num, rho.den, &opts, &text));
      OwnedString s(text);
      print_json(text);
    } else if (*params) {
      char* text = nullptr;
      check(dm_params(epsilon, &text));
      OwnedString s(text);
      print_json(text);
    } else if (*bench) {
      char *csv = nullptr, *summary = nullptr, *cfg_out = nullptr;
      check(dm_bench_file(config_path.c_str(), &csv, &summary, &cfg_out));
      OwnedString a(csv), b(summary), c(cfg_out);
      std::string target = !out_path.empty() ? out_path : (cfg_out ? cfg_out : "");
      if (target.empty()) {
        std::cout << csv;
      } else {
        write_file(target, csv);
        std::cerr << "wrote " << target << '\n';
      }
      std::cerr << nlohmann::json::parse(summary).dump(2) << '\n';
    }
  } catch (const Failure& f) {
    return f.status;
  }
  return 0;
}
