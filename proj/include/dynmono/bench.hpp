#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynmono/constructors.hpp"
#include "dynmono/generators.hpp"
#include "dynmono/rho.hpp"

namespace dynmono {

struct BenchInstance {
  std::optional<GeneratorSpec> generator;  // exactly one of generator / path
  std::string path;
};

// A fixed rho, or (when empty) 1/Delta of each instance.
struct BenchRho {
  std::optional<Rho> fixed;
  std::string label() const;
};

struct BenchMethod {
  Method method = Method::V2;
  double delta = 0.5;
  std::optional<std::size_t> max_rounds;
  std::size_t max_restarts = 0;
  bool allow_low_girth = false;
};

struct BenchConfig {
  std::vector<BenchInstance> instances;
  std::vector<BenchRho> rhos;
  std::vector<BenchMethod> methods;
  std::size_t trials = 1;
  std::uint64_t rng_seed_base = 0;
  std::optional<double> epsilon;
  std::string output;
  // Cells on at most this many vertices are cross-checked against the exact
  // minimum; 0 disables the check.
  std::size_t oracle_limit = 12;
  std::size_t threads = 1;
};

// Relative instance paths are resolved against `base_dir`.
BenchConfig parse_bench_config(const nlohmann::json& doc, const std::string& base_dir = "");
BenchConfig load_bench_config(const std::string& path);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  Rho rho;
  std::optional<double> delta;
  Method method = Method::V2;
  std::size_t trial = 0;
  std::size_t seed_size = 0;
  double bound_abw = 0.0;
  double bound_583 = 0.0;
  double bound_492 = 0.0;
  std::optional<double> bound_2eps;
  double bound_rho_n = 0.0;
  bool valid = false;
  std::optional<std::size_t> rounds;
  std::optional<bool> fallback;
  std::int64_t runtime_ms = 0;
};

struct SkippedCell {
  std::string family;
  std::size_t n = 0;
  std::string rho;
  Method method = Method::V2;
  std::string reason;
};

struct MethodSummary {
  Method method = Method::V2;
  std::size_t rows = 0;
  double mean_ratio = 0.0;  // seed_size / (rho n)
  double max_ratio = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<SkippedCell> skipped;
  std::vector<MethodSummary> summary;
};

// Deterministic per-cell seed: FNV-1a over "base|family|n|rho|method|trial",
// finished with a splitmix64 step.
std::uint64_t cell_seed(std::uint64_t base, const std::string& family, std::size_t n, const Rho& rho,
                        Method method, std::size_t trial);

BenchReport run_bench(const BenchConfig& config);

std::string bench_csv_header();
std::string bench_csv(const BenchReport& report);
nlohmann::json bench_summary(const BenchReport& report);

}  // namespace dynmono
