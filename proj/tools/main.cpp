#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "covidmc/absorbing.hpp"
#include "covidmc/counts.hpp"
#include "covidmc/csv.hpp"
#include "covidmc/errors.hpp"
#include "covidmc/fit.hpp"
#include "covidmc/fixtures.hpp"
#include "covidmc/regions.hpp"
#include "covidmc/report.hpp"
#include "covidmc/simulate.hpp"

namespace {

using namespace covidmc;

// exit codes: 0 success, 1 domain/validation failure, 2 I/O or usage error
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << bytes;
  if (!out) throw IoError("cannot write " + out_path);
}

/// --matrix paper | file:PATH | mle:PATH | fit:PATH
StochasticMatrix resolve_matrix(const std::string& spec) {
  if (spec == "paper") return fixtures::paper_matrix();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  if (colon == std::string::npos)
    throw Error("unknown matrix source \"" + spec +
                "\" (expected paper, file:PATH, mle:PATH or fit:PATH)");
  const std::string path = spec.substr(colon + 1);
  if (kind == "file") return parse_matrix_csv(read_file(path));
  if (kind == "mle") return mle_from_counts(parse_count_table(read_file(path)));
  if (kind == "fit")
    return fit_matrix_from_horizons(parse_horizon_table(read_file(path)),
                                    fixtures::paper_mask())
        .matrix;
  throw Error("unknown matrix source \"" + spec + "\"");
}

std::vector<int> parse_days_list(const std::string& text) {
  std::vector<int> days;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const int day = std::stoi(item, &pos);
      if (pos != item.size() || day < 0) throw std::invalid_argument(item);
      days.push_back(day);
    } catch (const std::exception&) {
      throw Error("bad --days entry \"" + item + "\"");
    }
  }
  if (days.empty()) throw Error("--days list is empty");
  return days;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw Error("unknown format \"" + name + "\"");
}

bool any_failed(const Findings& findings) {
  for (const auto& f : findings)
    if (!f.ok) return true;
  return false;
}

int finish(const ReportDocument& doc, const std::string& out,
           const std::string& format, bool strict) {
  write_output(out, emit_report(doc, parse_format(format)));
  if (strict && doc.findings && any_failed(*doc.findings)) return kExitDomain;
  return kExitOk;
}

struct CommonFlags {
  std::string matrix = "paper";
  std::string out;
  std::string format = "csv";
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_matrix = true) {
  if (with_matrix)
    cmd->add_option("--matrix", flags.matrix,
                    "matrix source: paper | file:PATH | mle:PATH | fit:PATH");
  cmd->add_option("--out", flags.out, "output path (default stdout)");
  cmd->add_option("--format", flags.format, "csv | json");
  cmd->add_flag("--strict", flags.strict,
                "exit 1 when any emitted finding fails");
}

int cmd_validate(const CommonFlags& flags) {
  try {
    resolve_matrix(flags.matrix);
  } catch (const RowSumError& e) {
    std::cout << "RowSumError: row " << e.row << " ("
              << state_code(kAllStates[e.row]) << ") sum deviates from 1 by "
              << e.deviation << "\n";
    return kExitDomain;
  } catch (const RangeError& e) {
    std::cout << "RangeError: entry (" << e.row << "," << e.col << ") = "
              << e.value << " outside [0,1]\n";
    return kExitDomain;
  }
  std::cout << "matrix ok: 6 rows, entries in [0,1], row sums within 1e-09\n";
  return kExitOk;
}

int cmd_horizons(const CommonFlags& flags, const std::vector<int>& days) {
  const StochasticMatrix p = resolve_matrix(flags.matrix);
  ReportDocument doc;
  doc.matrix_source = flags.matrix;
  doc.horizons = days;
  doc.horizon_table = horizons_from_matrix(p, days);
  return finish(doc, flags.out, flags.format, flags.strict);
}

int cmd_absorb(const CommonFlags& flags) {
  const StochasticMatrix p = resolve_matrix(flags.matrix);
  ReportDocument doc;
  doc.matrix_source = flags.matrix;
  doc.absorption = absorbing_analysis(p);
  return finish(doc, flags.out, flags.format, flags.strict);
}

int cmd_estimate(const CommonFlags& flags, const std::string& counts_path,
                 const std::string& locality) {
  const CountTable counts = counts_path.empty()
                                ? fixtures::table3()
                                : parse_count_table(read_file(counts_path));
  Findings findings;
  const StochasticMatrix estimate = mle_from_counts(counts, &findings);

  // how far the estimate is from the published matrix, row by row
  const StochasticMatrix& published = fixtures::paper_matrix();
  for (int i = 0; i < 6; ++i) {
    double max_diff = 0.0;
    for (int j = 0; j < 6; ++j)
      max_diff = std::max(max_diff,
                          std::fabs(estimate.at(i, j) - published.at(i, j)));
    findings.push_back(Finding::note(
        std::string("estimate vs published matrix: row ") +
            state_code(kAllStates[i]) + " max abs difference",
        0.0, max_diff, max_diff <= 0.01));
  }

  // region/crossed consistency for the chosen locality
  const std::string key = canonical_locality(locality);
  const DelegationRecord* official = nullptr;
  for (const auto& rec : fixtures::table1())
    if (canonical_locality(rec.locality) == key) official = &rec;
  const RegionRow* regions = nullptr;
  for (const auto& row : fixtures::table2())
    if (canonical_locality(row.locality) == key) regions = &row;
  if (!official || !regions)
    throw Error("unknown locality \"" + locality + "\"");

  VennDecomposition decomposition =
      decompose_regions(*regions, official->uci, official->intubated);
  for (const auto& v : decomposition.violations) findings.push_back(v);
  for (const auto& f : check_crossed_consistency(counts, decomposition.venn))
    findings.push_back(f);
  if (counts.published[index_of(State::E)][index_of(State::E)])
    findings.push_back(Finding::compare(
        locality + ": crossed E total vs official cases",
        static_cast<double>(official->cases),
        static_cast<double>(
            counts.counts[index_of(State::E)][index_of(State::E)])));

  ReportDocument doc;
  doc.matrix_source =
      counts_path.empty() ? "mle:builtin-table3" : "mle:" + counts_path;
  doc.matrix = estimate;
  doc.findings = findings;
  return finish(doc, flags.out, flags.format, flags.strict);
}

int cmd_fit(const CommonFlags& flags, const std::string& input_path) {
  const HorizonTable table = input_path.empty()
                                 ? fixtures::table4()
                                 : parse_horizon_table(read_file(input_path));
  const FitResult result =
      fit_matrix_from_horizons(table, fixtures::paper_mask());
  ReportDocument doc;
  doc.matrix_source =
      input_path.empty() ? "fit:builtin-table4" : "fit:" + input_path;
  doc.horizons = table.horizons;
  doc.matrix = result.matrix;
  doc.fit = FitSummary{result.residual, result.iterations, result.converged};
  return finish(doc, flags.out, flags.format, flags.strict);
}

int cmd_simulate(const CommonFlags& flags, const std::string& start_text,
                 int days, long long n, std::uint64_t seed) {
  const auto start = parse_state(start_text);
  if (!start) throw Error("unknown state \"" + start_text + "\"");
  const StochasticMatrix p = resolve_matrix(flags.matrix);
  const CohortResult cohort = simulate_cohort(p, *start, days, n, seed);
  ReportDocument doc;
  doc.matrix_source = flags.matrix;
  doc.parameters = {{"start", std::string(1, state_code(*start))},
                    {"days", std::to_string(days)},
                    {"n", std::to_string(n)},
                    {"seed", std::to_string(seed)}};
  doc.cohort = cohort;
  doc.comparison = compare_empirical_analytic(cohort, p);
  return finish(doc, flags.out, flags.format, flags.strict);
}

int cmd_plotdata(const CommonFlags& flags, const std::vector<int>& days,
                 const std::string& transitions_text) {
  const StochasticMatrix p = resolve_matrix(flags.matrix);
  std::vector<Transition> transitions;
  if (transitions_text.empty()) {
    transitions.assign(kTrackedTransitions.begin(), kTrackedTransitions.end());
  } else {
    std::stringstream ss(transitions_text);
    std::string label;
    while (std::getline(ss, label, ',')) {
      const auto t = parse_transition_label(label);
      if (!t) throw Error("bad transition label \"" + label + "\"");
      transitions.push_back(*t);
    }
  }
  std::string out = "day,from,to,probability\n";
  for (int day : days) {
    const StochasticMatrix pn = matrix_power(p, day);
    for (const Transition& t : transitions) {
      out += std::to_string(day);
      out += ',';
      out += state_code(t.from);
      out += ',';
      out += state_code(t.to);
      out += ',' + format_value(pn(t.from, t.to)) + '\n';
    }
  }
  write_output(flags.out, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-time Markov chain toolkit for COVID-19 progression"};
  app.require_subcommand(1);

  CommonFlags validate_flags;
  CLI::App* validate = app.add_subcommand("validate", "check a matrix");
  add_common(validate, validate_flags);

  CommonFlags horizons_flags;
  std::string horizons_days;
  CLI::App* horizons =
      app.add_subcommand("horizons", "n-step probabilities at day horizons");
  add_common(horizons, horizons_flags);
  horizons->add_option("--days", horizons_days,
                       "comma list of days (default: the published horizons)");

  CommonFlags absorb_flags;
  CLI::App* absorb =
      app.add_subcommand("absorb", "absorbing-chain analysis");
  add_common(absorb, absorb_flags);

  CommonFlags estimate_flags;
  std::string counts_path, locality = "CDMX";
  CLI::App* estimate =
      app.add_subcommand("estimate", "estimate the matrix from count data");
  add_common(estimate, estimate_flags, /*with_matrix=*/false);
  estimate->add_option("--counts", counts_path,
                       "count table CSV (default: bundled crossed values)");
  estimate->add_option("--locality", locality,
                       "locality for the consistency checks");

  CommonFlags fit_flags;
  std::string fit_input;
  CLI::App* fit =
      app.add_subcommand("fit", "recover a matrix from a horizon table");
  add_common(fit, fit_flags, /*with_matrix=*/false);
  fit->add_option("--input", fit_input,
                  "horizon table CSV (default: bundled city table)");

  CommonFlags simulate_flags;
  std::string sim_start = "I";
  int sim_days = 7;
  long long sim_n = 200000;
  std::uint64_t sim_seed = 42;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo cohort vs analytic check");
  add_common(simulate, simulate_flags);
  simulate->add_option("--start", sim_start, "start state (S,E,H,U,I,D)");
  simulate->add_option("--days", sim_days, "horizon in days");
  simulate->add_option("--n", sim_n, "number of trajectories");
  simulate->add_option("--seed", sim_seed, "base seed");

  CommonFlags plot_flags;
  std::string plot_days, plot_transitions;
  CLI::App* plotdata =
      app.add_subcommand("plotdata", "long-format day series for plotting");
  plotdata->add_option("--matrix", plot_flags.matrix,
                       "matrix source: paper | file:PATH | mle:PATH | fit:PATH");
  plotdata->add_option("--out", plot_flags.out, "output path (default stdout)");
  plotdata->add_option("--days", plot_days,
                       "comma list of days (default 1..365)");
  plotdata->add_option("--transitions", plot_transitions,
                       "comma list of labels (EF,HF,...; default all ten)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(validate_flags);
    if (app.got_subcommand(horizons)) {
      std::vector<int> days;
      if (horizons_days.empty() || horizons_days == "table4") {
        const auto published = fixtures::table_horizons();
        days.assign(published.begin(), published.end());
      } else {
        days = parse_days_list(horizons_days);
      }
      return cmd_horizons(horizons_flags, days);
    }
    if (app.got_subcommand(absorb)) return cmd_absorb(absorb_flags);
    if (app.got_subcommand(estimate))
      return cmd_estimate(estimate_flags, counts_path, locality);
    if (app.got_subcommand(fit)) return cmd_fit(fit_flags, fit_input);
    if (app.got_subcommand(simulate))
      return cmd_simulate(simulate_flags, sim_start, sim_days, sim_n,
                          sim_seed);
    if (app.got_subcommand(plotdata)) {
      std::vector<int> days;
      if (plot_days.empty()) {
        days.resize(365);
        std::iota(days.begin(), days.end(), 1);
      } else {
        days = parse_days_list(plot_days);
      }
      return cmd_plotdata(plot_flags, days, plot_transitions);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitIo;
}
