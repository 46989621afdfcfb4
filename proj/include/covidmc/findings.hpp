#pragma once

#include <string>
#include <vector>

namespace covidmc {

/// One consistency-check result. Data inconsistencies in the source tables
/// are findings, not failures: callers decide what to do with them.
struct Finding {
  std::string check;
  double expected = 0;
  double observed = 0;
  double difference = 0;  // observed - expected
  bool ok = true;

  static Finding compare(std::string check, double expected, double observed) {
    Finding f;
    f.check = std::move(check);
    f.expected = expected;
    f.observed = observed;
    f.difference = observed - expected;
    f.ok = f.difference == 0;
    return f;
  }

  static Finding note(std::string check, double expected, double observed,
                      bool ok) {
    Finding f = compare(std::move(check), expected, observed);
    f.ok = ok;
    return f;
  }
};

using Findings = std::vector<Finding>;

}  // namespace covidmc
