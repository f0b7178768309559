// pocket-kirch: build pocket graphs, compute resistances and Kirchhoff
// indices, audit the closed forms against a dense oracle.
#include <iostream>

#include "CLI11.hpp"
#include "pocket/commands.hpp"

namespace {

void add_spec_options(CLI::App* cmd, pocket::RunConfig& cfg, std::string& attach) {
  cmd->add_option("--f", cfg.f, "graph F (edge list or JSON)");
  cmd->add_option("--h1", cfg.h1, "graph H1");
  cmd->add_option("--h2", cfg.h2, "graph H2 (omit for l = m)");
  cmd->add_option("--hv", cfg.hv, "whole pocket H_v; split using --v-id");
  cmd->add_option("--v-id", cfg.v_id, "vertex of H_v glued to F");
  cmd->add_option("--attach", attach, "comma separated F vertices (default: all)");
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resistance distance and Kirchhoff index of pocket graphs"};
  app.require_subcommand(1);

  pocket::RunConfig cfg;
  std::string attach;
  std::string format;
  std::string sizes;

  auto* build = app.add_subcommand("build", "assemble the pocket graph and its block layout");
  add_spec_options(build, cfg, attach);
  build->add_option("--format", format, "edges | json");

  auto* resist = app.add_subcommand("resist", "all-pairs resistance and Kf");
  add_spec_options(resist, cfg, attach);
  resist->add_option("--format", format, "csv | json | table");
  resist->add_flag("--oracle", cfg.oracle, "use the dense pseudoinverse instead of the block construction");

  auto* verify = app.add_subcommand("verify", "audit structured and printed values against the oracle");
  add_spec_options(verify, cfg, attach);
  verify->add_option("--format", format, "json | table");
  verify->add_option("--tol-r", cfg.tolerances.resistance, "resistance tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--tol-kf", cfg.tolerances.kirchhoff, "Kirchhoff tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "seed of the random sweep");
  verify->add_option("--max-n", cfg.max_n, "largest F in the sweep")->check(CLI::PositiveNumber);
  verify->add_option("--max-m", cfg.max_m, "largest pocket order m in the sweep")->check(CLI::PositiveNumber);
  verify->add_option("--count", cfg.count, "number of random specs");

  auto* bench = app.add_subcommand("bench", "time the block construction against the dense oracle");
  bench->add_option("--seed", cfg.seed, "seed for the random instances");
  bench->add_option("--sizes", sizes, "n:m:l triples, comma separated");
  bench->add_option("--out", cfg.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!attach.empty()) cfg.attach = pocket::parse_vertex_list(attach);
    if (!format.empty()) cfg.format = pocket::parse_format(format);
    if (!sizes.empty()) cfg.bench_sizes = pocket::parse_bench_sizes(sizes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return pocket::run_command(cfg, std::cout, std::cerr);
}
