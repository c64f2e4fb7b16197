#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "romancrit/graph.hpp"

namespace romancrit {

enum class ClaimId {
  CycleCriticality,
  NonelementaryComponents,
  GammaLe3Degree,
  VcritPartitionLemma,
  SaturatedPartitionProp,
  EdgeRemovalGamma,
  EcritConditionProp,
  Elementary4List,
  CaracLemma,
  Carac2Theorem,
  HalfBound,
  ThreequarterBound,
  CutvertexLemma,
  Saturated4Degrees,
  Ecrit4Degrees,
  CutStructureProp,
  ClassificationTheorem,
  Local8Theorem,
  DnProperties,
};

std::span<const ClaimId> all_claims() noexcept;
/// Kebab-case id, e.g. "classification-theorem".
const char* to_string(ClaimId id) noexcept;
/// Throws UnknownClaim.
ClaimId claim_from_string(std::string_view name);
/// One-line statement of hypothesis and conclusion.
const char* claim_statement(ClaimId id) noexcept;

struct ClaimCheck {
  bool in_hypothesis = false;
  /// Set when the graph is a counterexample. Diagnostics start with a kind:
  /// "violation:", "path-disagreement:" or "solver-error:".
  std::optional<std::string> diagnostic;
};

/// Evaluates one claim on one graph. Solver errors are returned as
/// diagnostics, never thrown.
ClaimCheck check_claim(ClaimId id, const Graph& g);

}  // namespace romancrit
