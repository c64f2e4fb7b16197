#include "romancrit/report.hpp"

#include <json.hpp>

#include "romancrit/graph6.hpp"

namespace romancrit {

namespace {

using json = nlohmann::ordered_json;

void compare(std::vector<std::string>& out, const char* what, bool direct, bool other) {
  if (direct != other)
    out.push_back(std::string("path-disagreement: ") + what + " direct=" + (direct ? "true" : "false") +
                  " alternative=" + (other ? "true" : "false"));
}

json members(const VertexSet& s) { return json(s.members()); }

json edge_or_null(const std::optional<Edge>& e) {
  if (!e) return nullptr;
  return json::array({e->u, e->v});
}

}  // namespace

DetailedReport criticality_report(const Graph& g) {
  if (g.order() > kMaxPartitionOrder)
    throw Error(ErrorCode::TooLarge, "report limited to order " + std::to_string(kMaxPartitionOrder));

  DetailedReport r;
  r.graph6 = emit_graph6(g);
  r.gamma = roman_number(g);
  r.criticality = assess_criticality(g);
  const CriticalityReport& c = r.criticality;
  auto& diag = r.diagnostics;

  if (g.order() <= kMaxOracleOrder && roman_number_oracle(g) != r.gamma.gamma)
    diag.push_back("path-disagreement: gamma sweep and 3^n oracle differ");
  compare(diag, "nonelementary", c.nonelementary, nonelementary_by_components(g));
  compare(diag, "v-critical", c.v_critical, v_critical_by_partitions(g));
  compare(diag, "saturated", c.saturated, saturated_by_partitions(g));
  if (c.v_critical) {
    compare(diag, "e-critical", c.e_critical, e_critical_condition(g));
    if (!edge_removal_preserves_gamma(g))
      diag.push_back("path-disagreement: v-critical graph whose gamma changes under edge removal");
  }

  try {
    r.classification = classify_critical4(g);
  } catch (const Error& e) {
    diag.push_back(std::string("classification unavailable: ") + e.what());
  }

  if (c.gamma == 4 && c.nonelementary) {
    Gamma4Details d;
    d.classes = degree_classes(g);
    d.vcrit_by_degrees = vcrit4_by_degrees(g);
    d.saturated_by_degrees = saturated4_by_degrees(g);
    if (c.v_critical) d.ecrit_by_degrees = ecrit4_by_degrees(g);
    d.bounds = high_class_bounds(g);
    compare(diag, "v-critical (degree rule)", c.v_critical, d.vcrit_by_degrees);
    compare(diag, "saturated (degree rule)", c.saturated, d.saturated_by_degrees);
    if (d.ecrit_by_degrees) compare(diag, "e-critical (degree rule)", c.e_critical, *d.ecrit_by_degrees);
    r.gamma4 = d;
  }
  return r;
}

std::string to_json(const DetailedReport& r) {
  const CriticalityReport& c = r.criticality;
  json j;
  j["graph6"] = r.graph6;
  j["order"] = r.gamma.witness.size();
  j["gamma"] = r.gamma.gamma;
  j["witness"] = {{"V0", members(r.gamma.witness.level_set(0))},
                  {"V1", members(r.gamma.witness.level_set(1))},
                  {"V2", members(r.gamma.witness.level_set(2))}};
  j["nonelementary"] = c.nonelementary;
  j["v_critical"] = c.v_critical;
  j["e_critical"] = c.e_critical;
  j["saturated"] = c.saturated;
  j["witnesses"] = {
      {"v_critical_failure",
       c.witnesses.v_critical_failure ? json(*c.witnesses.v_critical_failure) : json(nullptr)},
      {"saturation_failure", edge_or_null(c.witnesses.saturation_failure)},
      {"e_critical_failure", edge_or_null(c.witnesses.e_critical_failure)},
  };
  j["classification"] = r.classification ? json(r.classification->str()) : json(nullptr);
  if (r.gamma4) {
    const Gamma4Details& d = *r.gamma4;
    j["gamma4"] = {
        {"high", members(d.classes.high)},
        {"low", members(d.classes.low)},
        {"other", members(d.classes.other)},
        {"vcrit_by_degrees", d.vcrit_by_degrees},
        {"saturated_by_degrees", d.saturated_by_degrees},
        {"ecrit_by_degrees", d.ecrit_by_degrees ? json(*d.ecrit_by_degrees) : json(nullptr)},
        {"high_at_least_half", d.bounds.at_least_half},
        {"high_at_least_three_quarters", d.bounds.at_least_three_quarters},
    };
  } else {
    j["gamma4"] = nullptr;
  }
  j["diagnostics"] = r.diagnostics;
  return j.dump(2) + "\n";
}

}  // namespace romancrit
