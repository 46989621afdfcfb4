#pragma once

#include <array>
#include <string>

#include "covidmc/counts.hpp"
#include "covidmc/findings.hpp"

namespace covidmc {

/// One row of the hospitalization table: eight Venn-region counts I..VIII
/// within the hospitalized population of a locality.
struct RegionRow {
  std::string locality;
  std::array<long long, 8> regions{};
};

/// The eight regions mapped to named quantities. Regions I..VII partition the
/// U/I/D overlaps; VIII is the hospitalized total (not the sum of the others).
struct VennCounts {
  long long u_only = 0;                // I
  long long d_only_hospitalized = 0;   // II
  long long i_only = 0;                // III
  long long ui_only = 0;               // IV
  long long ud_only = 0;               // V
  long long id_only = 0;               // VI
  long long uid = 0;                   // VII
  long long hospitalized_total = 0;    // VIII
};

struct VennDecomposition {
  VennCounts venn;
  Findings violations;  // failed total-checks; empty when all hold
};

/// Maps the region counts and verifies them against the locality's published
/// UCI and Intubated totals: I+IV+V+VII must equal uci_total and
/// III+IV+VI+VII must equal intubated_total. Violations are findings, never
/// exceptions.
VennDecomposition decompose_regions(const RegionRow& row, long long uci_total,
                                    long long intubated_total);

/// Cross-checks a Venn decomposition against the crossed-values counts:
/// IV+VII = crossed(U,I), V+VII = crossed(U,D), VI+VII = crossed(I,D).
/// Returns one finding per check.
Findings check_crossed_consistency(const CountTable& crossed,
                                   const VennCounts& venn);

}  // namespace covidmc
