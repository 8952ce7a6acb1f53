#include "dynmono/dynmono.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "dynmono/bench.hpp"
#include "dynmono/cascade.hpp"
#include "dynmono/constructors.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/exact.hpp"
#include "dynmono/generators.hpp"
#include "dynmono/graph.hpp"
#include "dynmono/report.hpp"

struct dm_graph {
  dynmono::Graph graph;
};

struct dm_cascade {
  dynmono::CascadeResult result;
};

namespace {

thread_local std::string last_error;

dm_status fail(dm_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
dm_status guarded(F&& body) {
  try {
    body();
    return DM_OK;
  } catch (const dynmono::InputError& e) {
    return fail(DM_ERR_INPUT, e.what());
  } catch (const dynmono::PreconditionError& e) {
    return fail(DM_ERR_PRECONDITION, e.what());
  } catch (const dynmono::SizeLimitError& e) {
    return fail(DM_ERR_SIZE_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_ids(const std::vector<dynmono::Vertex>& ids, uint32_t** out, size_t* len) {
  auto* buf = static_cast<uint32_t*>(std::malloc(std::max<size_t>(ids.size(), 1) * sizeof(uint32_t)));
  if (!buf) throw std::bad_alloc();
  std::copy(ids.begin(), ids.end(), buf);
  *out = buf;
  *len = ids.size();
}

void require(bool cond, const char* what) {
  if (!cond) throw dynmono::InputError(what);
}

std::span<const dynmono::Vertex> as_span(const uint32_t* ids, size_t len) {
  require(ids != nullptr || len == 0, "null seed array");
  return {ids, len};
}

}  // namespace

extern "C" {

const char* dm_version(void) { return "1.0.0"; }
const char* dm_last_error(void) { return last_error.c_str(); }
void dm_string_free(char* s) { std::free(s); }
void dm_ids_free(uint32_t* ids) { std::free(ids); }

dm_status dm_graph_parse(const char* text, dm_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new dm_graph{dynmono::parse_graph(text)};
  });
}

dm_status dm_graph_load(const char* path, dm_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new dm_graph{dynmono::load_graph(path)};
  });
}

dm_status dm_graph_generate(const char* family, size_t n, double p, uint64_t seed, dm_graph** out) {
  return guarded([&] {
    require(family && out, "null argument");
    dynmono::GeneratorSpec spec;
    spec.family = dynmono::parse_family(family);
    spec.n = n;
    spec.p = p;
    spec.rng_seed = seed;
    *out = new dm_graph{dynmono::generate(spec)};
  });
}

void dm_graph_free(dm_graph* g) { delete g; }

size_t dm_graph_order(const dm_graph* g) { return g ? g->graph.order() : 0; }
size_t dm_graph_size(const dm_graph* g) { return g ? g->graph.size() : 0; }
size_t dm_graph_max_degree(const dm_graph* g) { return g ? g->graph.max_degree() : 0; }

size_t dm_graph_degree(const dm_graph* g, uint32_t v) {
  return g && v < g->graph.order() ? g->graph.degree(v) : 0;
}

int dm_graph_is_tree(const dm_graph* g) { return g && dynmono::is_tree(g->graph) ? 1 : 0; }
int dm_graph_is_connected(const dm_graph* g) { return g && dynmono::is_connected(g->graph) ? 1 : 0; }

dm_status dm_graph_girth(const dm_graph* g, size_t* girth) {
  return guarded([&] {
    require(g && girth, "null argument");
    *girth = dynmono::girth(g->graph).value.value_or(0);
  });
}

dm_status dm_graph_serialize(const dm_graph* g, char** text) {
  return guarded([&] {
    require(g && text, "null argument");
    *text = dup_string(dynmono::serialize_graph(g->graph));
  });
}

dm_status dm_graph_save(const dm_graph* g, const char* path) {
  return guarded([&] {
    require(g && path, "null argument");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dynmono::InputError(std::string("cannot write '") + path + "'");
    out << dynmono::serialize_graph(g->graph);
    if (!out) throw dynmono::InputError(std::string("failed writing '") + path + "'");
  });
}

dm_status dm_rho_parse(const char* text, uint64_t* num, uint64_t* den) {
  return guarded([&] {
    require(text && num && den, "null argument");
    auto rho = dynmono::parse_rho(text);
    *num = rho.num();
    *den = rho.den();
  });
}

dm_status dm_seed_set_parse(const char* text, uint32_t** ids, size_t* len) {
  return guarded([&] {
    require(text && ids && len, "null argument");
    put_ids(dynmono::parse_seed_set(text), ids, len);
  });
}

dm_status dm_seed_set_load(const char* path, uint32_t** ids, size_t* len) {
  return guarded([&] {
    require(path && ids && len, "null argument");
    put_ids(dynmono::load_seed_set(path), ids, len);
  });
}

dm_status dm_hull(const dm_graph* g, uint64_t num, uint64_t den, const uint32_t* seed, size_t len,
                  dm_cascade** out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto phi = dynmono::proportional_thresholds(g->graph, dynmono::Rho(num, den));
    *out = new dm_cascade{dynmono::hull(g->graph, phi, as_span(seed, len))};
  });
}

void dm_cascade_free(dm_cascade* c) { delete c; }
int dm_cascade_is_monopoly(const dm_cascade* c) { return c && c->result.is_monopoly ? 1 : 0; }
size_t dm_cascade_active_count(const dm_cascade* c) { return c ? c->result.active.size() : 0; }

int64_t dm_cascade_round(const dm_cascade* c, uint32_t v) {
  if (!c || v >= c->result.round.size() || !c->result.round[v]) return -1;
  return *c->result.round[v];
}

dm_status dm_cascade_to_json(const dm_cascade* c, char** json) {
  return guarded([&] {
    require(c && json, "null argument");
    *json = dup_string(dynmono::to_json(c->result).dump());
  });
}

dm_status dm_is_monopoly(const dm_graph* g, uint64_t num, uint64_t den, const uint32_t* seed, size_t len,
                         int* result) {
  return guarded([&] {
    require(g && result, "null argument");
    auto phi = dynmono::proportional_thresholds(g->graph, dynmono::Rho(num, den));
    *result = dynmono::is_monopoly(g->graph, phi, as_span(seed, len)) ? 1 : 0;
  });
}

dm_status dm_solve(const dm_graph* g, uint64_t num, uint64_t den, size_t limit, int force, char** json) {
  return guarded([&] {
    require(g && json, "null argument");
    auto phi = dynmono::proportional_thresholds(g->graph, dynmono::Rho(num, den));
    const auto start = std::chrono::steady_clock::now();
    auto result = dynmono::min_monopoly_exact(g->graph, phi, limit == 0 ? dynmono::kDefaultExactLimit : limit,
                                              force != 0);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    auto doc = dynmono::to_json(result);
    doc["runtime_ms"] = ms.count();
    *json = dup_string(doc.dump());
  });
}

dm_status dm_abw_bound(const dm_graph* g, uint64_t num, uint64_t den, char** exact, double* value) {
  return guarded([&] {
    require(g, "null argument");
    auto phi = dynmono::proportional_thresholds(g->graph, dynmono::Rho(num, den));
    auto bound = dynmono::abw_bound(g->graph, phi);
    if (value) *value = static_cast<double>(bound);
    if (exact) *exact = dup_string(bound.str());
  });
}

void dm_construct_options_init(dm_construct_options* opts) {
  if (!opts) return;
  *opts = dm_construct_options{};
  opts->method = "v2";
  opts->rng_seed = 1;
}

dm_status dm_construct(const dm_graph* g, uint64_t num, uint64_t den, const dm_construct_options* opts,
                       char** json) {
  return guarded([&] {
    require(g && opts && opts->method && json, "null argument");
    const dynmono::Rho rho(num, den);
    dynmono::MonopolySeed seed;
    switch (dynmono::parse_method(opts->method)) {
      case dynmono::Method::Abw:
        seed = dynmono::abw_construct(g->graph, dynmono::proportional_thresholds(g->graph, rho), opts->rng_seed);
        seed.params.rho = rho;
        break;
      case dynmono::Method::Girth5: {
        dynmono::Theorem1Options t;
        if (opts->epsilon > 0.0) t.epsilon = opts->epsilon;
        if (opts->delta > 0.0) {
          t.delta = opts->delta;
        } else if (t.epsilon) {
          t.delta = dynmono::theorem1_params(*t.epsilon).delta;
        }
        t.rng_seed = opts->rng_seed;
        if (opts->max_rounds_set || opts->max_rounds > 0) t.max_rounds = opts->max_rounds;
        t.max_restarts = opts->max_restarts;
        t.allow_low_girth = opts->allow_low_girth != 0;
        seed = dynmono::theorem1_construct(g->graph, rho, t);
        break;
      }
      case dynmono::Method::Tree:
        seed = dynmono::tree_construct(g->graph, rho);
        break;
      case dynmono::Method::V2:
        seed = dynmono::v2_baseline(g->graph, rho);
        break;
    }
    *json = dup_string(dynmono::to_json(seed).dump());
  });
}

dm_status dm_params(double epsilon, char** json) {
  return guarded([&] {
    require(json, "null argument");
    *json = dup_string(dynmono::to_json(dynmono::theorem1_params(epsilon)).dump());
  });
}

namespace {

void emit_bench(const dynmono::BenchConfig& cfg, char** csv, char** summary_json) {
  auto report = dynmono::run_bench(cfg);
  if (csv) *csv = dup_string(dynmono::bench_csv(report));
  if (summary_json) *summary_json = dup_string(dynmono::bench_summary(report).dump());
}

}  // namespace

dm_status dm_bench(const char* config_json, const char* base_dir, char** csv, char** summary_json) {
  return guarded([&] {
    require(config_json, "null argument");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw dynmono::InputError(std::string("bench config: ") + e.what());
    }
    emit_bench(dynmono::parse_bench_config(doc, base_dir ? base_dir : ""), csv, summary_json);
  });
}

dm_status dm_bench_file(const char* config_path, char** csv, char** summary_json, char** output_path) {
  return guarded([&] {
    require(config_path, "null argument");
    auto cfg = dynmono::load_bench_config(config_path);
    emit_bench(cfg, csv, summary_json);
    if (output_path) *output_path = cfg.output.empty() ? nullptr : dup_string(cfg.output);
  });
}

}  // extern "C"
