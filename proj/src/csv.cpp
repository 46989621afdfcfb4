#include "covidmc/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "covidmc/errors.hpp"

namespace covidmc {

namespace {

constexpr std::string_view kDelegationHeader =
    "locality,population,cases,deaths,hospitalized,non_hospitalized,uci,"
    "recovered,intubated";
constexpr std::string_view kRegionHeader = "locality,r1,r2,r3,r4,r5,r6,r7,r8";
constexpr std::string_view kHorizonHeader = "days,EF,HF,UF,IF,HU,UI,HI,HS,US,IS";
constexpr std::string_view kFindingsHeader =
    "check,expected,observed,difference,status";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> cells;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

// Non-empty lines of the input, in order.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    if (!trim(line).empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

long long parse_int_cell(std::string_view cell, int line, int column) {
  long long value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw FieldParseError(line, column, std::string(cell));
  return value;
}

double parse_double_cell(std::string_view cell, int line, int column) {
  double value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw FieldParseError(line, column, std::string(cell));
  return value;
}

void expect_header(std::string_view expected,
                   const std::vector<std::string_view>& lines) {
  if (lines.empty()) throw HeaderMismatchError(std::string(expected), "");
  if (trim(lines[0]) != expected)
    throw HeaderMismatchError(std::string(expected),
                              std::string(trim(lines[0])));
}

void expect_cell_count(const std::vector<std::string_view>& cells,
                       size_t expected, int line) {
  if (cells.size() != expected)
    throw FieldParseError(line, static_cast<int>(cells.size()),
                          "expected " + std::to_string(expected) + " cells");
}

}  // namespace

std::vector<DelegationRecord> parse_delegation_table(std::string_view csv) {
  const auto lines = split_lines(csv);
  expect_header(kDelegationHeader, lines);
  std::vector<DelegationRecord> records;
  for (size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto cells = split_line(lines[li]);
    expect_cell_count(cells, 9, line_no);
    DelegationRecord rec;
    rec.locality = std::string(cells[0]);
    long long* fields[] = {&rec.population,   &rec.cases,
                           &rec.deaths,       &rec.hospitalized,
                           &rec.non_hospitalized, &rec.uci,
                           &rec.recovered,    &rec.intubated};
    for (int f = 0; f < 8; ++f)
      *fields[f] = parse_int_cell(cells[f + 1], line_no, f + 2);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RegionRow> parse_region_table(std::string_view csv) {
  const auto lines = split_lines(csv);
  expect_header(kRegionHeader, lines);
  std::vector<RegionRow> rows;
  for (size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto cells = split_line(lines[li]);
    expect_cell_count(cells, 9, line_no);
    RegionRow row;
    row.locality = std::string(cells[0]);
    for (int r = 0; r < 8; ++r)
      row.regions[r] = parse_int_cell(cells[r + 1], line_no, r + 2);
    rows.push_back(std::move(row));
  }
  return rows;
}

HorizonTable parse_horizon_table(std::string_view csv) {
  const auto lines = split_lines(csv);
  expect_header(kHorizonHeader, lines);
  std::vector<std::pair<int, std::array<double, 10>>> rows;
  for (size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto cells = split_line(lines[li]);
    expect_cell_count(cells, 11, line_no);
    const long long day = parse_int_cell(cells[0], line_no, 1);
    std::array<double, 10> values{};
    for (int k = 0; k < 10; ++k)
      values[k] = parse_double_cell(cells[k + 1], line_no, k + 2);
    rows.emplace_back(static_cast<int>(day), values);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  HorizonTable table;
  for (const auto& [day, values] : rows) {
    table.horizons.push_back(day);
    table.values.push_back(values);
  }
  validate_horizon_table(table);  // throws DuplicateHorizonError on ties
  return table;
}

CountTable parse_count_table(std::string_view csv) {
  const auto lines = split_lines(csv);
  if (lines.empty())
    throw HeaderMismatchError("state,S,E,H,U,I,F", "");
  {
    const auto head = split_line(lines[0]);
    bool ok = head.size() == 7 && head[0] == "state";
    for (int j = 1; ok && j < 7; ++j) {
      const auto s = parse_state(head[j]);
      ok = s.has_value() && *s == kAllStates[j - 1];
    }
    if (!ok)
      throw HeaderMismatchError("state,S,E,H,U,I,F",
                                std::string(trim(lines[0])));
  }
  CountTable table;
  for (size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto cells = split_line(lines[li]);
    expect_cell_count(cells, 7, line_no);
    const auto from = parse_state(cells[0]);
    if (!from) throw FieldParseError(line_no, 1, std::string(cells[0]));
    for (int j = 0; j < 6; ++j) {
      const std::string_view cell = cells[j + 1];
      if (cell == "-") continue;  // unpublished, distinct from zero
      table.set(*from, kAllStates[j],
                parse_int_cell(cell, line_no, j + 2));
    }
  }
  return table;
}

StochasticMatrix parse_matrix_csv(std::string_view csv) {
  const auto lines = split_lines(csv);
  if (lines.empty()) throw HeaderMismatchError("state,S,E,H,U,I,D", "");
  {
    const auto head = split_line(lines[0]);
    bool ok = head.size() == 7 && head[0] == "state";
    for (int j = 1; ok && j < 7; ++j) {
      const auto s = parse_state(head[j]);
      ok = s.has_value() && *s == kAllStates[j - 1];
    }
    if (!ok)
      throw HeaderMismatchError("state,S,E,H,U,I,D",
                                std::string(trim(lines[0])));
  }
  Mat6 rows{};
  std::array<bool, 6> seen{};
  for (size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto cells = split_line(lines[li]);
    expect_cell_count(cells, 7, line_no);
    const auto from = parse_state(cells[0]);
    if (!from) throw FieldParseError(line_no, 1, std::string(cells[0]));
    const int i = index_of(*from);
    seen[i] = true;
    for (int j = 0; j < 6; ++j)
      rows[i][j] = parse_double_cell(cells[j + 1], line_no, j + 2);
  }
  for (int i = 0; i < 6; ++i)
    if (!seen[i])
      throw FieldParseError(static_cast<int>(lines.size()) + 1, 1,
                            std::string(1, state_code(kAllStates[i])) +
                                " row missing");
  return make_matrix(rows);
}

std::string format_value(double x) {
  if (x == 0.0) return "0";
  char buf[48];
  if (std::abs(x) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.4e", x);
  else
    std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string emit_delegation_csv(const std::vector<DelegationRecord>& rows) {
  std::string out(kDelegationHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.locality;
    for (long long v :
         {r.population, r.cases, r.deaths, r.hospitalized, r.non_hospitalized,
          r.uci, r.recovered, r.intubated})
      out += ',' + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string emit_region_csv(const std::vector<RegionRow>& rows) {
  std::string out(kRegionHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.locality;
    for (long long v : r.regions) out += ',' + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string emit_horizon_csv(const HorizonTable& table) {
  std::string out(kHorizonHeader);
  out += '\n';
  for (size_t i = 0; i < table.horizons.size(); ++i) {
    out += std::to_string(table.horizons[i]);
    for (int k = 0; k < 10; ++k) out += ',' + format_value(table.values[i][k]);
    out += '\n';
  }
  return out;
}

std::string emit_count_csv(const CountTable& counts) {
  std::string out = "state,S,E,H,U,I,D\n";
  for (int i = 0; i < 6; ++i) {
    out += state_code(kAllStates[i]);
    for (int j = 0; j < 6; ++j) {
      out += ',';
      if (counts.published[i][j])
        out += std::to_string(counts.counts[i][j]);
      else
        out += '-';
    }
    out += '\n';
  }
  return out;
}

std::string emit_matrix_csv(const StochasticMatrix& p) {
  std::string out = "state,S,E,H,U,I,D\n";
  for (int i = 0; i < 6; ++i) {
    out += state_code(kAllStates[i]);
    for (int j = 0; j < 6; ++j) out += ',' + format_value(p.at(i, j));
    out += '\n';
  }
  return out;
}

std::string emit_findings_csv(const Findings& findings) {
  std::string out(kFindingsHeader);
  out += '\n';
  for (const auto& f : findings) {
    out += f.check + ',' + format_value(f.expected) + ',' +
           format_value(f.observed) + ',' + format_value(f.difference) + ',' +
           (f.ok ? "ok" : "mismatch") + '\n';
  }
  return out;
}

Findings delegation_findings(const std::vector<DelegationRecord>& rows) {
  Findings findings;
  for (const auto& r : rows) {
    Finding f = Finding::compare(
        r.locality + ": hospitalized+non_hospitalized vs cases",
        static_cast<double>(r.cases),
        static_cast<double>(r.hospitalized + r.non_hospitalized));
    if (!f.ok) findings.push_back(f);
  }
  return findings;
}

std::string canonical_locality(std::string_view name) {
  static const std::map<std::string_view, std::string_view> aliases = {
      {"Gustavo A.", "Gustavo A. Madero"},
      {"Magdalena C", "MagContreras"},
      {"Milpa A", "Milpa Alta"},
      {"Alvaro O", "Alvaro O."},
      {"Benito J", "BJuarez"},
      {"Miguel H", "Miguel Hidalgo"},
      {"Venustiano C", "VCarranza"},
  };
  const std::string_view trimmed = trim(name);
  const auto it = aliases.find(trimmed);
  return std::string(it == aliases.end() ? trimmed : it->second);
}

}  // namespace covidmc
