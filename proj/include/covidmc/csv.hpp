#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covidmc/counts.hpp"
#include "covidmc/findings.hpp"
#include "covidmc/horizon.hpp"
#include "covidmc/matrix.hpp"
#include "covidmc/regions.hpp"

namespace covidmc {

/// One row of the official per-locality table.
struct DelegationRecord {
  std::string locality;
  long long population = 0;
  long long cases = 0;
  long long deaths = 0;
  long long hospitalized = 0;
  long long non_hospitalized = 0;
  long long uci = 0;
  long long recovered = 0;
  long long intubated = 0;
};

// All parsers take UTF-8 CSV bytes with an exact header row, comma delimiter,
// no quoting and no thousands separators. They throw HeaderMismatchError,
// FieldParseError (1-based coordinates) and DuplicateHorizonError.

/// header: locality,population,cases,deaths,hospitalized,non_hospitalized,uci,recovered,intubated
std::vector<DelegationRecord> parse_delegation_table(std::string_view csv);

/// header: locality,r1,r2,r3,r4,r5,r6,r7,r8
std::vector<RegionRow> parse_region_table(std::string_view csv);

/// header: days,EF,HF,UF,IF,HU,UI,HI,HS,US,IS  (scientific notation accepted;
/// horizons sorted ascending on return)
HorizonTable parse_horizon_table(std::string_view csv);

/// header: state,S,E,H,U,I,F  (or D); cells are counts or "-" for unpublished
CountTable parse_count_table(std::string_view csv);

/// header: state,S,E,H,U,I,D  (or F); six probability rows, validated
StochasticMatrix parse_matrix_csv(std::string_view csv);

std::string emit_delegation_csv(const std::vector<DelegationRecord>& rows);
std::string emit_region_csv(const std::vector<RegionRow>& rows);
std::string emit_horizon_csv(const HorizonTable& table);
std::string emit_count_csv(const CountTable& counts);
std::string emit_matrix_csv(const StochasticMatrix& p);
std::string emit_findings_csv(const Findings& findings);

/// hospitalized + non_hospitalized must equal cases; per-row findings.
Findings delegation_findings(const std::vector<DelegationRecord>& rows);

/// Canonical locality key: resolves the spelling differences between the
/// source tables ("Gustavo A." vs "Gustavo A. Madero", "Benito J" vs
/// "BJuarez", ...). Unknown names are returned trimmed but unchanged.
std::string canonical_locality(std::string_view name);

/// Probability formatting used by every CSV emitter: up to 6 significant
/// digits, scientific notation below 1e-3 (the source tables' style).
std::string format_value(double x);

}  // namespace covidmc
