#pragma once

#include <string_view>

#include "covidmc/csv.hpp"
#include "covidmc/fit.hpp"

namespace covidmc::fixtures {

/// The one-step matrix exactly as published (rows S,E,H,U,I,D).
const StochasticMatrix& paper_matrix();

/// Zero pattern of the published matrix; rows project onto this support.
const StructureMask& paper_mask();

/// The eleven published day horizons {7,...,365}.
std::span<const int> table_horizons();

// Raw CSV for each source table, byte-identical to the files under data/.
std::string_view table1_csv();  // per-delegation official counts
std::string_view table2_csv();  // hospitalization Venn regions
std::string_view table3_csv();  // crossed values for Mexico City
std::string_view table4_csv();  // horizon probabilities, Mexico City
std::string_view table5_csv();  // horizon probabilities, Tlalpan
std::string_view table6_csv();  // horizon probabilities, Gustavo A. Madero
std::string_view table7_csv();  // horizon probabilities, Iztapalapa
std::string_view table8_csv();  // horizon probabilities, Alvaro Obregon

const std::vector<DelegationRecord>& table1();
const std::vector<RegionRow>& table2();
const CountTable& table3();
const HorizonTable& table4();
const HorizonTable& table5();
const HorizonTable& table6();
const HorizonTable& table7();
const HorizonTable& table8();

}  // namespace covidmc::fixtures
