#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romancrit/criticality.hpp"
#include "romancrit/gamma4.hpp"
#include "romancrit/graph.hpp"
#include "romancrit/roman.hpp"

namespace romancrit {

struct Gamma4Details {
  DegreeClasses classes;
  bool vcrit_by_degrees = false;
  bool saturated_by_degrees = false;
  std::optional<bool> ecrit_by_degrees;  // only for v-critical graphs
  HighClassBounds bounds;
};

struct DetailedReport {
  std::string graph6;
  GammaResult gamma;
  CriticalityReport criticality;
  std::optional<Classification> classification;  // absent when the order is too large
  std::optional<Gamma4Details> gamma4;  // nonelementary graphs with gamma 4
  /// Disagreements between the direct and the partition/degree routes.
  std::vector<std::string> diagnostics;
};

/// Throws TooLarge above the partition enumeration guard.
DetailedReport criticality_report(const Graph& g);

std::string to_json(const DetailedReport& report);

}  // namespace romancrit
