#include "pocket/audit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "pocket/graph_io.hpp"
#include "pocket/numfmt.hpp"
#include "pocket/resistance.hpp"

namespace pocket {

namespace {

nlohmann::json number(double v) { return round_significant(v); }

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : nlohmann::json(nullptr);
}

std::string pair_blocks(const BlockLayout& layout, Vertex u, Vertex v) {
  return std::string(to_string(layout.locate(u).block)) + "-" + std::string(to_string(layout.locate(v).block));
}

QuantityRecord compare(std::string id, QuantityKind kind, double oracle, double structured, double tol) {
  QuantityRecord q;
  q.id = std::move(id);
  q.kind = kind;
  q.oracle = oracle;
  q.structured = structured;
  q.structured_error = std::abs(structured - oracle);
  q.structured_pass = q.structured_error <= tol;
  return q;
}

void attach_printed(QuantityRecord& q, PrintedCase c, std::optional<double> printed, double tol) {
  q.printed_case = c;
  q.printed = printed;
  if (printed) {
    q.printed_error = std::abs(*printed - q.oracle);
    q.printed_pass = *q.printed_error <= tol;
  }
}

double worst_violation(const MetricCheck& m) {
  return std::max({m.max_asymmetry, m.max_abs_diagonal, -m.most_negative, m.worst_triangle_excess});
}

}  // namespace

std::string_view to_string(QuantityKind k) {
  switch (k) {
    case QuantityKind::Resistance: return "resistance";
    case QuantityKind::Kirchhoff: return "kirchhoff";
    case QuantityKind::OneInverseResidual: return "one_inverse_residual";
    case QuantityKind::Metric: return "metric";
  }
  return "?";
}

bool DiscrepancyReport::structured_ok() const {
  return std::all_of(quantities.begin(), quantities.end(), [](const auto& q) { return q.structured_pass; });
}

std::size_t DiscrepancyReport::printed_deviations() const {
  return static_cast<std::size_t>(std::count_if(quantities.begin(), quantities.end(), [](const auto& q) {
    return q.printed_pass.has_value() && !*q.printed_pass;
  }));
}

double DiscrepancyReport::max_structured_error(QuantityKind kind) const {
  double worst = 0.0;
  for (const auto& q : quantities)
    if (q.kind == kind) worst = std::max(worst, q.structured_error);
  return worst;
}

const QuantityRecord* DiscrepancyReport::find(std::string_view id) const {
  auto it = std::find_if(quantities.begin(), quantities.end(), [&](const auto& q) { return q.id == id; });
  return it == quantities.end() ? nullptr : &*it;
}

DiscrepancyReport verify_construction(const PocketSpec& spec, const Tolerances& tol, bool include_printed,
                                      std::string label, std::optional<std::uint64_t> seed) {
  spec.validate();
  const PocketGraph built = build_pocket_graph(spec);
  const StructuredOneInverse structured = structured_one_inverse(spec);
  const OracleResult oracle = oracle_resistance(built.graph);
  const Matrix lap = laplacian(built.graph);
  const std::size_t order = built.graph.order();

  DiscrepancyReport report;
  report.instance = {std::move(label), seed, spec, structured.path};
  report.tolerances = tol;

  report.quantities.push_back(compare("one_inverse_residual", QuantityKind::OneInverseResidual, 0.0,
                                      one_inverse_residual(lap, structured.matrix), tol.one_inverse));

  const ResistanceMatrix rs = resistance_matrix(structured.matrix);
  std::optional<PrintedFormulas> printed;
  if (include_printed) printed.emplace(spec, structured);

  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      QuantityRecord base = compare("r(" + std::to_string(u) + "," + std::to_string(v) + ")",
                                    QuantityKind::Resistance, oracle.resistances(u, v), rs(u, v), tol.resistance);
      base.u = u;
      base.v = v;
      base.blocks = pair_blocks(built.layout, u, v);
      const auto cases = printed ? printed->cases_for_pair(u, v) : std::vector<CaseEvaluation>{};
      if (cases.empty()) {
        report.quantities.push_back(std::move(base));
        continue;
      }
      for (const CaseEvaluation& c : cases) {
        QuantityRecord q = base;
        const auto value = printed->resistance(c.which, c.first, c.second);
        attach_printed(q, c.which, value, tol.resistance);
        if (value) report.covered_cases.insert(c.which);
        report.quantities.push_back(std::move(q));
      }
    }
  }

  QuantityRecord kf = compare("kf", QuantityKind::Kirchhoff, oracle.kirchhoff.value,
                              kirchhoff_from_one_inverse(structured.matrix).value, tol.kirchhoff);
  if (printed) {
    const PrintedCase c =
        structured.path == StructuredPath::AllAttached ? PrintedCase::AllKf : PrintedCase::JoinKf;
    attach_printed(kf, c, printed->kirchhoff(), tol.kirchhoff);
    report.covered_cases.insert(c);
  }
  report.quantities.push_back(std::move(kf));
  report.quantities.push_back(
      compare("kf_pair_sum", QuantityKind::Kirchhoff, oracle.kirchhoff.value, rs.pair_sum(), tol.kirchhoff));
  report.quantities.push_back(compare("kf_spectral", QuantityKind::Kirchhoff, oracle.kirchhoff.value,
                                      kirchhoff_spectral(eigenvalues_sym(lap), order).value, tol.kirchhoff));

  report.quantities.push_back(
      compare("metric.structured", QuantityKind::Metric, 0.0, worst_violation(rs.check_metric()), tol.metric));
  report.quantities.push_back(compare("metric.oracle", QuantityKind::Metric, 0.0,
                                      worst_violation(oracle.resistances.check_metric()), tol.metric));
  return report;
}

DiscrepancyReport verify_construction(const NamedSpec& named, const Tolerances& tol, bool include_printed) {
  return verify_construction(named.spec, tol, include_printed, named.label, named.seed);
}

nlohmann::json to_json(const PocketSpec& spec) {
  return {{"f", to_json(spec.f)}, {"attach", spec.attach}, {"h1", to_json(spec.h1)}, {"h2", to_json(spec.h2)}};
}

nlohmann::json to_json(const DiscrepancyReport& report) {
  const auto& inst = report.instance;
  nlohmann::json instance = {{"label", inst.label},
                             {"seed", inst.seed ? nlohmann::json(*inst.seed) : nlohmann::json(nullptr)},
                             {"path", std::string(to_string(inst.path))},
                             {"n", inst.spec.n()},
                             {"k", inst.spec.k()},
                             {"l", inst.spec.l()},
                             {"m", inst.spec.m()},
                             {"total_order", inst.spec.total_order()},
                             {"spec", to_json(inst.spec)}};

  nlohmann::json quantities = nlohmann::json::array();
  for (const auto& q : report.quantities) {
    nlohmann::json j = {{"id", q.id}, {"kind", std::string(to_string(q.kind))}};
    if (q.u) j["u"] = *q.u;
    if (q.v) j["v"] = *q.v;
    if (!q.blocks.empty()) j["blocks"] = q.blocks;
    j["printed_case"] = q.printed_case ? nlohmann::json(std::string(to_string(*q.printed_case))) : nullptr;
    j["oracle"] = number(q.oracle);
    j["structured"] = number(q.structured);
    j["printed"] = optional_number(q.printed);
    j["structured_error"] = number(q.structured_error);
    j["printed_error"] = optional_number(q.printed_error);
    j["structured_pass"] = q.structured_pass;
    j["printed_pass"] = q.printed_pass ? nlohmann::json(*q.printed_pass) : nullptr;
    quantities.push_back(std::move(j));
  }

  nlohmann::json covered = nlohmann::json::array();
  for (PrintedCase c : report.covered_cases) covered.push_back(std::string(to_string(c)));

  return {{"instance", std::move(instance)},
          {"tolerances",
           {{"resistance", report.tolerances.resistance},
            {"kirchhoff", report.tolerances.kirchhoff},
            {"one_inverse", report.tolerances.one_inverse},
            {"metric", report.tolerances.metric}}},
          {"quantities", std::move(quantities)},
          {"covered_cases", std::move(covered)},
          {"printed_deviations", report.printed_deviations()},
          {"structured_pass", report.structured_ok()}};
}

bool VerifySummary::structured_ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.structured_ok(); });
}

bool VerifySummary::all_cases_covered() const {
  return std::all_of(coverage.begin(), coverage.end(), [](const auto& kv) { return kv.second > 0; });
}

VerifySummary summarize(std::vector<DiscrepancyReport> reports) {
  VerifySummary s;
  for (PrintedCase c : all_printed_cases()) s.coverage[c] = 0;
  for (const auto& r : reports)
    for (PrintedCase c : r.covered_cases) ++s.coverage[c];
  s.reports = std::move(reports);
  return s;
}

nlohmann::json to_json(const VerifySummary& summary) {
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& r : summary.reports) instances.push_back(to_json(r));
  nlohmann::json coverage = nlohmann::json::object();
  for (const auto& [c, count] : summary.coverage) coverage[std::string(to_string(c))] = count;
  return {{"instances", std::move(instances)},
          {"coverage", std::move(coverage)},
          {"all_cases_covered", summary.all_cases_covered()},
          {"structured_pass", summary.structured_ok()}};
}

std::string to_table(const VerifySummary& summary) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "instance" << std::setw(15) << "path" << std::right << std::setw(4) << "n"
     << std::setw(4) << "k" << std::setw(4) << "l" << std::setw(4) << "m" << std::setw(7) << "order"
     << std::setw(19) << "max|dr|" << std::setw(16) << "Kf oracle" << std::setw(16) << "Kf structured"
     << std::setw(16) << "Kf printed" << std::setw(10) << "printed!=" << "  status\n";
  for (const auto& r : summary.reports) {
    const auto& inst = r.instance;
    const QuantityRecord* kf = r.find("kf");
    os << std::left << std::setw(24) << inst.label << std::setw(15) << to_string(inst.path) << std::right
       << std::setw(4) << inst.spec.n() << std::setw(4) << inst.spec.k() << std::setw(4) << inst.spec.l()
       << std::setw(4) << inst.spec.m() << std::setw(7) << inst.spec.total_order() << std::setw(19)
       << format_number(r.max_structured_error(QuantityKind::Resistance)) << std::setw(16)
       << format_number(kf->oracle) << std::setw(16) << format_number(kf->structured) << std::setw(16)
       << (kf->printed ? format_number(*kf->printed) : std::string("-")) << std::setw(10)
       << r.printed_deviations() << "  " << (r.structured_ok() ? "ok" : "FAIL") << '\n';
  }
  os << "\nprinted case coverage (instances with a value):\n";
  for (const auto& [c, count] : summary.coverage) {
    os << "  " << std::left << std::setw(24) << to_string(c) << std::right << count << '\n';
  }
  os << "\nstructured vs oracle: " << (summary.structured_ok() ? "PASS" : "FAIL")
     << "; printed cases covered: " << (summary.all_cases_covered() ? "all" : "incomplete") << '\n';
  return os.str();
}

}  // namespace pocket
