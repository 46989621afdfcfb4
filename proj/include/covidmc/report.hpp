#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covidmc/absorbing.hpp"
#include "covidmc/csv.hpp"
#include "covidmc/findings.hpp"
#include "covidmc/fit.hpp"
#include "covidmc/simulate.hpp"

namespace covidmc {

struct FitSummary {
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};

/// Everything a command can emit, with provenance metadata. Absent sections
/// are omitted from the output; the JSON form round-trips losslessly.
struct ReportDocument {
  // metadata
  std::string matrix_source;
  std::vector<int> horizons;
  std::vector<std::pair<std::string, std::string>> parameters;

  // body
  std::optional<HorizonTable> horizon_table;
  std::optional<StochasticMatrix> matrix;
  std::optional<AbsorptionReport> absorption;
  std::optional<Findings> findings;
  std::optional<FitSummary> fit;
  std::optional<CohortResult> cohort;
  std::optional<ComparisonTable> comparison;
};

enum class ReportFormat { csv, json };

/// Deterministic serialization: identical documents produce identical bytes.
/// CSV concatenates the present sections (blank line between them) using the
/// same headers the parsers accept; JSON uses the stable field names
/// documented in the README.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

/// Inverse of emit_report(..., json).
ReportDocument parse_report_json(std::string_view text);

}  // namespace covidmc
