#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pocket/fixtures.hpp"
#include "pocket/geninv.hpp"
#include "pocket/graph.hpp"
#include "pocket/printed.hpp"

namespace pocket {

struct Tolerances {
  double resistance = 1e-9;
  double kirchhoff = 1e-8;
  double one_inverse = 1e-9;
  double metric = 1e-9;
};

enum class QuantityKind { Resistance, Kirchhoff, OneInverseResidual, Metric };

std::string_view to_string(QuantityKind k);

/// One audited number: the oracle value, the structured value, and when a
/// printed expression covers it, the printed value.
struct QuantityRecord {
  std::string id;
  QuantityKind kind = QuantityKind::Resistance;
  std::optional<Vertex> u;
  std::optional<Vertex> v;
  std::string blocks;
  std::optional<PrintedCase> printed_case;
  double oracle = 0.0;
  double structured = 0.0;
  /// nullopt when no printed expression applies or it has no value here.
  std::optional<double> printed;
  double structured_error = 0.0;
  std::optional<double> printed_error;
  bool structured_pass = true;
  std::optional<bool> printed_pass;
};

struct InstanceInfo {
  std::string label;
  std::optional<std::uint64_t> seed;
  PocketSpec spec;
  StructuredPath path = StructuredPath::AllAttached;
};

struct DiscrepancyReport {
  InstanceInfo instance;
  Tolerances tolerances;
  std::vector<QuantityRecord> quantities;
  /// Printed cases that produced a value on this instance.
  std::set<PrintedCase> covered_cases;

  bool structured_ok() const;
  std::size_t printed_deviations() const;
  double max_structured_error(QuantityKind kind) const;
  const QuantityRecord* find(std::string_view id) const;
};

/// Builds the pocket graph, runs the dense oracle and the structured
/// construction side by side, and (when asked) every printed expression that
/// applies. Structured-vs-oracle violations mark the report as failed;
/// printed deviations are only recorded. An invalid PocketSpec throws.
DiscrepancyReport verify_construction(const PocketSpec& spec, const Tolerances& tol, bool include_printed,
                                      std::string label = {}, std::optional<std::uint64_t> seed = {});

DiscrepancyReport verify_construction(const NamedSpec& named, const Tolerances& tol, bool include_printed);

nlohmann::json to_json(const DiscrepancyReport& report);
nlohmann::json to_json(const PocketSpec& spec);

/// Aggregate over many instances.
struct VerifySummary {
  std::vector<DiscrepancyReport> reports;
  std::map<PrintedCase, std::size_t> coverage;  // every case, count of instances covering it

  bool structured_ok() const;
  bool all_cases_covered() const;
};

VerifySummary summarize(std::vector<DiscrepancyReport> reports);
nlohmann::json to_json(const VerifySummary& summary);
std::string to_table(const VerifySummary& summary);

}  // namespace pocket
