#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pocket/audit.hpp"
#include "pocket/graph.hpp"

namespace pocket {

enum class OutputFormat { Default, Csv, Json, Table, Edges };

OutputFormat parse_format(std::string_view text);

struct BenchSize {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t l = 0;
};

std::vector<BenchSize> default_bench_sizes();

struct RunConfig {
  std::string command;
  std::optional<std::filesystem::path> f;
  std::optional<std::filesystem::path> h1;
  std::optional<std::filesystem::path> h2;
  std::optional<std::filesystem::path> hv;
  std::optional<Vertex> v_id;
  std::optional<std::vector<Vertex>> attach;  // default: every F vertex in order
  bool oracle = false;
  OutputFormat format = OutputFormat::Default;
  Tolerances tolerances;
  std::uint64_t seed = 42;
  std::size_t max_n = 6;
  std::size_t max_m = 8;   // l <= min(4, max_m), m - l <= min(4, max_m - l)
  std::size_t count = 24;  // random specs in the verify sweep
  std::vector<BenchSize> bench_sizes = default_bench_sizes();
  std::optional<std::filesystem::path> out;

  void validate() const;
  SweepBounds sweep_bounds() const;
};

/// Comma separated vertex ids, e.g. "0,2,1".
std::vector<Vertex> parse_vertex_list(std::string_view text);
/// "n:m:l" triples separated by commas.
std::vector<BenchSize> parse_bench_sizes(std::string_view text);

/// Spec from the graph files named in the config.
PocketSpec load_spec(const RunConfig& config);

struct BenchRow {
  BenchSize size;
  std::size_t total_order = 0;
  double t_structured = 0.0;
  double t_oracle = 0.0;
  double kf_structured = 0.0;
  double kf_oracle = 0.0;
  bool agree = false;

  double speedup() const { return t_oracle / t_structured; }
};

/// Random connected F of order n with a pocket on every vertex; Kf by both
/// paths, timed separately.
BenchRow bench_row(const BenchSize& size, std::uint64_t seed);

// Each command writes its result to config.out (or `out` when unset),
// diagnostics to `err`, and returns the process exit status.
int run_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_resist(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pocket
