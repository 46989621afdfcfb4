#include "covidmc/regions.hpp"

namespace covidmc {

VennDecomposition decompose_regions(const RegionRow& row, long long uci_total,
                                    long long intubated_total) {
  VennDecomposition out;
  VennCounts& v = out.venn;
  v.u_only = row.regions[0];
  v.d_only_hospitalized = row.regions[1];
  v.i_only = row.regions[2];
  v.ui_only = row.regions[3];
  v.ud_only = row.regions[4];
  v.id_only = row.regions[5];
  v.uid = row.regions[6];
  v.hospitalized_total = row.regions[7];

  const long long uci_sum = v.u_only + v.ui_only + v.ud_only + v.uid;
  const long long intubated_sum = v.i_only + v.ui_only + v.id_only + v.uid;
  Finding uci = Finding::compare(row.locality + ": I+IV+V+VII vs UCI total",
                                 static_cast<double>(uci_total),
                                 static_cast<double>(uci_sum));
  Finding intubated =
      Finding::compare(row.locality + ": III+IV+VI+VII vs Intubated total",
                       static_cast<double>(intubated_total),
                       static_cast<double>(intubated_sum));
  if (!uci.ok) out.violations.push_back(uci);
  if (!intubated.ok) out.violations.push_back(intubated);
  return out;
}

Findings check_crossed_consistency(const CountTable& crossed,
                                   const VennCounts& venn) {
  const auto cell = [&](State a, State b) {
    return static_cast<double>(crossed.counts[index_of(a)][index_of(b)]);
  };
  Findings findings;
  findings.push_back(Finding::compare(
      "IV+VII vs crossed U,I", cell(State::U, State::I),
      static_cast<double>(venn.ui_only + venn.uid)));
  findings.push_back(Finding::compare(
      "V+VII vs crossed U,D", cell(State::U, State::D),
      static_cast<double>(venn.ud_only + venn.uid)));
  findings.push_back(Finding::compare(
      "VI+VII vs crossed I,D", cell(State::I, State::D),
      static_cast<double>(venn.id_only + venn.uid)));
  return findings;
}

}  // namespace covidmc
