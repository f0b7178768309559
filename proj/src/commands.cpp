#include "pocket/commands.hpp"

#include <charconv>
#include <chrono>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "pocket/geninv.hpp"
#include "pocket/graph_io.hpp"
#include "pocket/numfmt.hpp"
#include "pocket/resistance.hpp"

namespace pocket {

namespace {

std::size_t parse_count(std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Writes to config.out when set, otherwise to the fallback stream.
void emit(const RunConfig& config, std::ostream& fallback, const std::string& text) {
  if (!config.out) {
    fallback << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + config.out->string());
  file << text;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const DisconnectedError& e) {
    err << "disconnected: " << e.what() << '\n';
  } catch (const StructureError& e) {
    err << "structure error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "table") return OutputFormat::Table;
  if (text == "edges") return OutputFormat::Edges;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (csv, json, table, edges)");
}

std::vector<BenchSize> default_bench_sizes() {
  return {{5, 4, 2}, {10, 8, 2}, {10, 3, 3}, {20, 12, 3}, {40, 24, 4}};
}

void RunConfig::validate() const {
  const auto& t = tolerances;
  if (!(t.resistance > 0 && t.kirchhoff > 0 && t.one_inverse > 0 && t.metric > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
  if (max_m < 1) throw std::invalid_argument("--max-m must be at least 1");
}

SweepBounds RunConfig::sweep_bounds() const {
  SweepBounds b;
  b.max_n = max_n;
  b.max_l = std::min<std::size_t>(4, max_m);
  b.max_rest = std::min<std::size_t>(4, max_m - b.max_l);
  return b;
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_count(trim(part), "vertex id"));
  return out;
}

std::vector<BenchSize> parse_bench_sizes(std::string_view text) {
  std::vector<BenchSize> out;
  for (std::string_view item : split(text, ',')) {
    const auto fields = split(trim(item), ':');
    if (fields.size() != 3) throw std::invalid_argument("bench size must be n:m:l, got '" + std::string(item) + "'");
    BenchSize s{parse_count(fields[0], "n"), parse_count(fields[1], "m"), parse_count(fields[2], "l")};
    if (s.n < 1 || s.l < 1 || s.l > s.m) throw std::invalid_argument("bench size needs n >= 1 and 1 <= l <= m");
    out.push_back(s);
  }
  return out;
}

PocketSpec load_spec(const RunConfig& config) {
  if (!config.f) throw std::invalid_argument("--f is required");
  PocketSpec spec;
  spec.f = read_graph_file(*config.f);
  if (config.hv) {
    if (config.h1 || config.h2) throw std::invalid_argument("give either --hv or --h1/--h2, not both");
    if (!config.v_id) throw std::invalid_argument("--hv needs --v-id");
    JoinParts parts = validate_join_structure(read_graph_file(*config.hv), *config.v_id);
    spec.h1 = std::move(parts.first);
    spec.h2 = std::move(parts.second);
  } else {
    if (!config.h1) throw std::invalid_argument("--h1 (or --hv with --v-id) is required");
    spec.h1 = read_graph_file(*config.h1);
    if (config.h2) spec.h2 = read_graph_file(*config.h2);
  }
  if (config.attach) {
    spec.attach = *config.attach;
  } else {
    spec.attach.resize(spec.f.order());
    std::iota(spec.attach.begin(), spec.attach.end(), Vertex{0});
  }
  spec.validate();
  return spec;
}

int run_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const PocketGraph built = build_pocket_graph(load_spec(config));
    if (!is_connected(built.graph)) throw DisconnectedError("assembled graph is disconnected");
    const bool json = config.format == OutputFormat::Json;
    if (!json && config.format != OutputFormat::Default && config.format != OutputFormat::Edges) {
      throw std::invalid_argument("build writes edges or json");
    }
    if (config.out) {
      emit(config, out, json ? to_json(built.graph).dump(2) + "\n" : to_edge_list(built.graph));
      std::filesystem::path layout_path = *config.out;
      layout_path += ".layout.json";
      std::ofstream layout(layout_path, std::ios::binary);
      if (!layout) throw std::runtime_error("cannot write " + layout_path.string());
      layout << to_json(built.layout).dump(2) << '\n';
    } else if (json) {
      out << nlohmann::json{{"graph", to_json(built.graph)}, {"layout", to_json(built.layout)}}.dump(2) << '\n';
    } else {
      out << to_edge_list(built.graph);
    }
    return 0;
  });
}

int run_resist(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const PocketSpec spec = load_spec(config);
    const unsigned threads = worker_count_from_env();
    ResistanceMatrix rs;
    KirchhoffResult kf;
    std::string backend;
    if (config.oracle) {
      OracleResult oracle = oracle_resistance(build_pocket_graph(spec).graph, threads);
      rs = std::move(oracle.resistances);
      kf = oracle.kirchhoff;
      backend = "oracle";
    } else {
      const StructuredOneInverse structured = structured_one_inverse(spec);
      rs = resistance_matrix(structured.matrix, threads);
      kf = kirchhoff_from_one_inverse(structured.matrix);
      backend = std::string(to_string(structured.path));
    }

    const std::size_t n = rs.order();
    std::ostringstream os;
    switch (config.format) {
      case OutputFormat::Default:
      case OutputFormat::Csv:
        os << "u,v,r\n";
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) os << u << ',' << v << ',' << format_number(rs(u, v)) << '\n';
        os << "# kf=" << format_number(kf.value) << '\n';
        break;
      case OutputFormat::Json: {
        nlohmann::json rows = nlohmann::json::array();
        for (Vertex u = 0; u < n; ++u) {
          nlohmann::json row = nlohmann::json::array();
          for (Vertex v = 0; v < n; ++v) row.push_back(round_significant(rs(u, v)));
          rows.push_back(std::move(row));
        }
        os << nlohmann::json{{"backend", backend},
                             {"order", n},
                             {"resistance", std::move(rows)},
                             {"kf", round_significant(kf.value)}}
                  .dump(2)
           << '\n';
        break;
      }
      case OutputFormat::Table: {
        std::vector<std::string> cells(n * n);
        std::size_t width = std::to_string(n).size();
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = 0; v < n; ++v) width = std::max(width, (cells[u * n + v] = format_number(rs(u, v))).size());
        os << std::setw(static_cast<int>(width)) << "";
        for (Vertex v = 0; v < n; ++v) os << ' ' << std::setw(static_cast<int>(width)) << v;
        os << '\n';
        for (Vertex u = 0; u < n; ++u) {
          os << std::setw(static_cast<int>(width)) << u;
          for (Vertex v = 0; v < n; ++v) os << ' ' << std::setw(static_cast<int>(width)) << cells[u * n + v];
          os << '\n';
        }
        os << "Kf = " << format_number(kf.value) << " (" << backend << ")\n";
        break;
      }
      case OutputFormat::Edges:
        throw std::invalid_argument("resist writes csv, json or table");
    }
    emit(config, out, os.str());
    return 0;
  });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    std::vector<NamedSpec> specs;
    if (config.f) {
      specs.push_back({config.f->filename().string(), load_spec(config), std::nullopt});
    } else {
      specs = builtin_fixtures();
      for (NamedSpec& s : random_sweep(config.count, config.seed, config.sweep_bounds())) specs.push_back(std::move(s));
    }
    std::vector<DiscrepancyReport> reports;
    reports.reserve(specs.size());
    for (const NamedSpec& s : specs) reports.push_back(verify_construction(s, config.tolerances, true));
    const VerifySummary summary = summarize(std::move(reports));

    switch (config.format) {
      case OutputFormat::Default:
      case OutputFormat::Json:
        emit(config, out, to_json(summary).dump(2) + "\n");
        break;
      case OutputFormat::Table:
        emit(config, out, to_table(summary));
        break;
      default:
        throw std::invalid_argument("verify writes json or table");
    }
    for (const auto& r : summary.reports) {
      if (!r.structured_ok()) err << "structured check failed on " << r.instance.label << '\n';
    }
    return summary.structured_ok() ? 0 : 1;
  });
}

BenchRow bench_row(const BenchSize& size, std::uint64_t seed) {
  Rng rng(seed);
  PocketSpec spec;
  spec.f = random_connected_graph(size.n, 0.2, rng);
  spec.attach = random_permutation(size.n, rng);
  spec.h1 = random_graph(size.l, 0.5, rng);
  spec.h2 = random_graph(size.m - size.l, 0.5, rng);
  spec.validate();
  const Graph g = build_pocket_graph(spec).graph;

  BenchRow row;
  row.size = size;
  row.total_order = g.order();

  auto start = std::chrono::steady_clock::now();
  const StructuredOneInverse structured = structured_one_inverse(spec);
  row.kf_structured = kirchhoff_from_one_inverse(structured.matrix).value;
  row.t_structured = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const Matrix pinv = pseudo_inverse_laplacian(laplacian(g));
  row.kf_oracle = kirchhoff_from_one_inverse(pinv, KirchhoffMethod::Oracle).value;
  row.t_oracle = seconds_since(start);

  const double tol = row.total_order < 50 ? 1e-8 : 1e-6;
  row.agree = std::abs(row.kf_structured - row.kf_oracle) <= tol;
  return row;
}

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    std::ostringstream os;
    os << "n,m,l,total_order,t_structured,t_oracle,speedup,kf_structured,kf_oracle,agree\n";
    for (std::size_t i = 0; i < config.bench_sizes.size(); ++i) {
      const BenchRow row = bench_row(config.bench_sizes[i], config.seed + i);
      os << row.size.n << ',' << row.size.m << ',' << row.size.l << ',' << row.total_order << ','
         << format_number(row.t_structured) << ',' << format_number(row.t_oracle) << ','
         << format_number(row.speedup()) << ',' << format_number(row.kf_structured) << ','
         << format_number(row.kf_oracle) << ',' << (row.agree ? "yes" : "FLAGGED") << '\n';
      if (!row.agree) err << "bench row " << i << ": Kf disagreement\n";
    }
    emit(config, out, os.str());
    return 0;
  });
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "build") return run_build(config, out, err);
  if (config.command == "resist") return run_resist(config, out, err);
  if (config.command == "verify") return run_verify(config, out, err);
  if (config.command == "bench") return run_bench(config, out, err);
  err << "unknown command '" << config.command << "'\n";
  return 2;
}

}  // namespace pocket
