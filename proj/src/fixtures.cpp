#include "covidmc/fixtures.hpp"

namespace covidmc::fixtures {

namespace {
#include "fixtures_data.inc"

constexpr std::array<int, 11> kHorizons = {7,  15, 21,  30,  45, 60,
                                           90, 120, 180, 240, 365};
}  // namespace

const StochasticMatrix& paper_matrix() {
  static const StochasticMatrix p = make_matrix(Mat6{{
      {0.68, 0.32, 0.00, 0.00, 0.00, 0.00},
      {0.31, 0.65, 0.04, 0.00, 0.00, 0.00},
      {0.66, 0.00, 0.08, 0.01, 0.02, 0.23},
      {0.49, 0.00, 0.00, 0.20, 0.26, 0.05},
      {0.25, 0.00, 0.00, 0.00, 0.00, 0.75},
      {0.00, 0.00, 0.00, 0.00, 0.00, 1.00},
  }});
  return p;
}

const StructureMask& paper_mask() {
  static const StructureMask mask = [] {
    std::array<std::array<bool, 6>, 6> allowed{};
    const StochasticMatrix& p = paper_matrix();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) allowed[i][j] = p.at(i, j) > 0.0;
    return make_mask(allowed);
  }();
  return mask;
}

std::span<const int> table_horizons() { return kHorizons; }

std::string_view table1_csv() { return kTable1Csv; }
std::string_view table2_csv() { return kTable2Csv; }
std::string_view table3_csv() { return kTable3Csv; }
std::string_view table4_csv() { return kTable4Csv; }
std::string_view table5_csv() { return kTable5Csv; }
std::string_view table6_csv() { return kTable6Csv; }
std::string_view table7_csv() { return kTable7Csv; }
std::string_view table8_csv() { return kTable8Csv; }

const std::vector<DelegationRecord>& table1() {
  static const auto parsed = parse_delegation_table(kTable1Csv);
  return parsed;
}

const std::vector<RegionRow>& table2() {
  static const auto parsed = parse_region_table(kTable2Csv);
  return parsed;
}

const CountTable& table3() {
  static const auto parsed = parse_count_table(kTable3Csv);
  return parsed;
}

const HorizonTable& table4() {
  static const auto parsed = parse_horizon_table(kTable4Csv);
  return parsed;
}
const HorizonTable& table5() {
  static const auto parsed = parse_horizon_table(kTable5Csv);
  return parsed;
}
const HorizonTable& table6() {
  static const auto parsed = parse_horizon_table(kTable6Csv);
  return parsed;
}
const HorizonTable& table7() {
  static const auto parsed = parse_horizon_table(kTable7Csv);
  return parsed;
}
const HorizonTable& table8() {
  static const auto parsed = parse_horizon_table(kTable8Csv);
  return parsed;
}

}  // namespace covidmc::fixtures
