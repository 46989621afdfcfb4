#include "covidmc/report.hpp"

#include <json.hpp>

#include "covidmc/errors.hpp"

namespace covidmc {

namespace {

using Json = nlohmann::ordered_json;

std::string state_str(State s) { return std::string(1, state_code(s)); }

State state_from_json(const Json& j) {
  const auto parsed = parse_state(j.get<std::string>());
  if (!parsed) throw Error("bad state in report: " + j.dump());
  return *parsed;
}

Json matrix_to_json(const StochasticMatrix& p) {
  Json rows = Json::array();
  for (int i = 0; i < 6; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 6; ++j) row.push_back(p.at(i, j));
    rows.push_back(std::move(row));
  }
  Json out;
  Json states = Json::array();
  for (State s : kAllStates) states.push_back(state_str(s));
  out["states"] = std::move(states);
  out["rows"] = std::move(rows);
  return out;
}

StochasticMatrix matrix_from_json(const Json& j) {
  Mat6 rows{};
  for (int i = 0; i < 6; ++i)
    for (int c = 0; c < 6; ++c) rows[i][c] = j.at("rows").at(i).at(c);
  return make_matrix(rows);
}

Json horizon_to_json(const HorizonTable& t) {
  Json out;
  out["days"] = t.horizons;
  Json labels = Json::array();
  for (const Transition& tr : kTrackedTransitions)
    labels.push_back(transition_label(tr));
  out["transitions"] = std::move(labels);
  Json values = Json::array();
  for (const auto& row : t.values) values.push_back(row);
  out["values"] = std::move(values);
  return out;
}

HorizonTable horizon_from_json(const Json& j) {
  HorizonTable t;
  t.horizons = j.at("days").get<std::vector<int>>();
  for (const auto& row : j.at("values")) {
    std::array<double, 10> values{};
    for (int k = 0; k < 10; ++k) values[k] = row.at(k);
    t.values.push_back(values);
  }
  return t;
}

Json absorption_to_json(const AbsorptionReport& r) {
  Json out;
  Json transient = Json::array(), absorbing = Json::array();
  for (State s : r.transient_states) transient.push_back(state_str(s));
  for (State s : r.absorbing_states) absorbing.push_back(state_str(s));
  out["transient"] = std::move(transient);
  out["absorbing"] = std::move(absorbing);
  out["fundamental"] = r.fundamental;
  out["absorption_probs"] = r.absorption_probs;
  out["expected_steps"] = r.expected_steps;
  return out;
}

AbsorptionReport absorption_from_json(const Json& j) {
  AbsorptionReport r;
  for (const auto& s : j.at("transient"))
    r.transient_states.push_back(state_from_json(s));
  for (const auto& s : j.at("absorbing"))
    r.absorbing_states.push_back(state_from_json(s));
  r.fundamental = j.at("fundamental").get<std::vector<std::vector<double>>>();
  r.absorption_probs =
      j.at("absorption_probs").get<std::vector<std::vector<double>>>();
  r.expected_steps = j.at("expected_steps").get<std::vector<double>>();
  return r;
}

Json findings_to_json(const Findings& findings) {
  Json arr = Json::array();
  for (const auto& f : findings) {
    Json item;
    item["check"] = f.check;
    item["expected"] = f.expected;
    item["observed"] = f.observed;
    item["difference"] = f.difference;
    item["ok"] = f.ok;
    arr.push_back(std::move(item));
  }
  return arr;
}

Findings findings_from_json(const Json& arr) {
  Findings findings;
  for (const auto& item : arr) {
    Finding f;
    f.check = item.at("check");
    f.expected = item.at("expected");
    f.observed = item.at("observed");
    f.difference = item.at("difference");
    f.ok = item.at("ok");
    findings.push_back(std::move(f));
  }
  return findings;
}

Json cohort_to_json(const CohortResult& c) {
  Json out;
  out["start"] = state_str(c.start);
  out["horizon"] = c.horizon;
  out["n_trajectories"] = c.n_trajectories;
  Json occupancy = Json::array();
  for (const auto& day : c.occupancy) occupancy.push_back(day);
  out["occupancy"] = std::move(occupancy);
  return out;
}

CohortResult cohort_from_json(const Json& j) {
  CohortResult c;
  c.start = state_from_json(j.at("start"));
  c.horizon = j.at("horizon");
  c.n_trajectories = j.at("n_trajectories");
  for (const auto& day : j.at("occupancy")) {
    std::array<long long, 6> counts{};
    for (int s = 0; s < 6; ++s) counts[s] = day.at(s);
    c.occupancy.push_back(counts);
  }
  return c;
}

Json comparison_to_json(const ComparisonTable& table) {
  Json days = Json::array();
  for (const auto& day : table) {
    Json cells = Json::array();
    for (int s = 0; s < 6; ++s) {
      Json cell;
      cell["state"] = state_str(kAllStates[s]);
      cell["analytic"] = day[s].analytic;
      cell["empirical"] = day[s].empirical;
      cell["z"] = day[s].z;
      cell["skipped"] = day[s].skipped;
      cells.push_back(std::move(cell));
    }
    days.push_back(std::move(cells));
  }
  return days;
}

ComparisonTable comparison_from_json(const Json& days) {
  ComparisonTable table;
  for (const auto& cells : days) {
    std::array<CellComparison, 6> day{};
    for (int s = 0; s < 6; ++s) {
      const auto& cell = cells.at(s);
      day[s].analytic = cell.at("analytic");
      day[s].empirical = cell.at("empirical");
      day[s].z = cell.at("z");
      day[s].skipped = cell.at("skipped");
    }
    table.push_back(day);
  }
  return table;
}

std::string emit_csv(const ReportDocument& doc) {
  std::vector<std::string> sections;
  if (doc.matrix) sections.push_back(emit_matrix_csv(*doc.matrix));
  if (doc.horizon_table)
    sections.push_back(emit_horizon_csv(*doc.horizon_table));
  if (doc.absorption) {
    const AbsorptionReport& r = *doc.absorption;
    std::string block = "state,expected_steps";
    for (State s : r.absorbing_states)
      block += std::string(",to_") + state_code(s);
    block += '\n';
    for (size_t i = 0; i < r.transient_states.size(); ++i) {
      block += state_code(r.transient_states[i]);
      block += ',' + format_value(r.expected_steps[i]);
      for (size_t j = 0; j < r.absorbing_states.size(); ++j)
        block += ',' + format_value(r.absorption_probs[i][j]);
      block += '\n';
    }
    sections.push_back(std::move(block));
    if (!r.transient_states.empty()) {
      std::string fm = "fundamental";
      for (State s : r.transient_states) fm += std::string(",") + state_code(s);
      fm += '\n';
      for (size_t i = 0; i < r.transient_states.size(); ++i) {
        fm += state_code(r.transient_states[i]);
        for (size_t j = 0; j < r.transient_states.size(); ++j)
          fm += ',' + format_value(r.fundamental[i][j]);
        fm += '\n';
      }
      sections.push_back(std::move(fm));
    }
  }
  if (doc.fit) {
    std::string block = "residual,iterations,converged\n";
    block += format_value(doc.fit->residual) + ',' +
             std::to_string(doc.fit->iterations) + ',' +
             (doc.fit->converged ? "true" : "false") + '\n';
    sections.push_back(std::move(block));
  }
  if (doc.cohort) {
    std::string block = "day,S,E,H,U,I,D\n";
    for (size_t day = 0; day < doc.cohort->occupancy.size(); ++day) {
      block += std::to_string(day);
      for (int s = 0; s < 6; ++s)
        block += ',' + std::to_string(doc.cohort->occupancy[day][s]);
      block += '\n';
    }
    sections.push_back(std::move(block));
  }
  if (doc.comparison) {
    std::string block = "day,state,analytic,empirical,z,skipped\n";
    for (size_t day = 0; day < doc.comparison->size(); ++day)
      for (int s = 0; s < 6; ++s) {
        const CellComparison& cell = (*doc.comparison)[day][s];
        block += std::to_string(day) + ',' + state_code(kAllStates[s]) + ',' +
                 format_value(cell.analytic) + ',' +
                 format_value(cell.empirical) + ',' + format_value(cell.z) +
                 ',' + (cell.skipped ? "true" : "false") + '\n';
      }
    sections.push_back(std::move(block));
  }
  if (doc.findings) sections.push_back(emit_findings_csv(*doc.findings));

  std::string out;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out += '\n';
    out += sections[i];
  }
  return out;
}

}  // namespace

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::csv) return emit_csv(doc);

  Json root;
  Json metadata;
  metadata["matrix_source"] = doc.matrix_source;
  if (!doc.horizons.empty()) metadata["horizons"] = doc.horizons;
  if (!doc.parameters.empty()) {
    Json params;
    for (const auto& [key, value] : doc.parameters) params[key] = value;
    metadata["parameters"] = std::move(params);
  }
  root["metadata"] = std::move(metadata);

  Json body;
  if (doc.horizon_table) body["horizon_table"] = horizon_to_json(*doc.horizon_table);
  if (doc.matrix) body["matrix"] = matrix_to_json(*doc.matrix);
  if (doc.absorption) body["absorption"] = absorption_to_json(*doc.absorption);
  if (doc.findings) body["findings"] = findings_to_json(*doc.findings);
  if (doc.fit) {
    Json fit;
    fit["residual"] = doc.fit->residual;
    fit["iterations"] = doc.fit->iterations;
    fit["converged"] = doc.fit->converged;
    body["fit"] = std::move(fit);
  }
  if (doc.cohort) body["cohort"] = cohort_to_json(*doc.cohort);
  if (doc.comparison) body["comparison"] = comparison_to_json(*doc.comparison);
  root["body"] = std::move(body);

  return root.dump(2) + "\n";
}

ReportDocument parse_report_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad report JSON: ") + e.what());
  }
  ReportDocument doc;
  const Json& metadata = root.at("metadata");
  doc.matrix_source = metadata.at("matrix_source");
  if (metadata.contains("horizons"))
    doc.horizons = metadata.at("horizons").get<std::vector<int>>();
  if (metadata.contains("parameters"))
    for (const auto& [key, value] : metadata.at("parameters").items())
      doc.parameters.emplace_back(key, value.get<std::string>());

  const Json& body = root.at("body");
  if (body.contains("horizon_table"))
    doc.horizon_table = horizon_from_json(body.at("horizon_table"));
  if (body.contains("matrix")) doc.matrix = matrix_from_json(body.at("matrix"));
  if (body.contains("absorption"))
    doc.absorption = absorption_from_json(body.at("absorption"));
  if (body.contains("findings"))
    doc.findings = findings_from_json(body.at("findings"));
  if (body.contains("fit")) {
    FitSummary fit;
    fit.residual = body.at("fit").at("residual");
    fit.iterations = body.at("fit").at("iterations");
    fit.converged = body.at("fit").at("converged");
    doc.fit = fit;
  }
  if (body.contains("cohort")) doc.cohort = cohort_from_json(body.at("cohort"));
  if (body.contains("comparison"))
    doc.comparison = comparison_from_json(body.at("comparison"));
  return doc;
}

}  // namespace covidmc
