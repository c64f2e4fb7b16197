#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "romancrit/claims.hpp"
#include "romancrit/graph.hpp"

namespace romancrit {

struct Counterexample {
  std::string graph6;
  std::string diagnostic;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  ClaimId claim = ClaimId::CycleCriticality;
  std::string source;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t graphs_in_hypothesis = 0;
  /// Sorted by graph6, then diagnostic.
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds wall_time{0};
};

/// Environment variable holding the worker count.
inline constexpr const char* kWorkersEnv = "ROMANCRIT_WORKERS";

/// ROMANCRIT_WORKERS if set to a positive integer, else hardware concurrency.
unsigned default_workers();

struct VerifyOptions {
  unsigned workers = 0;  // 0: default_workers()
  bool allow_large = false;
};

VerificationReport verify_enumerated(ClaimId claim, unsigned n, const VerifyOptions& options = {});
VerificationReport verify_graphs(ClaimId claim, std::string source, std::span<const Graph> graphs,
                                 const VerifyOptions& options = {});

/// One graph6 line per graph; blank lines and a ">>graph6<<" header are skipped.
/// Throws Malformed with the offending line number.
std::vector<Graph> read_graph6_stream(std::istream& in);
/// "Dn:6,Dn:8,Cycle:5". Throws InvalidArgument / InvalidOrder.
std::vector<Graph> parse_family_list(std::string_view list);

/// Fields in fixed order: claim, source, graphs_scanned, graphs_in_hypothesis,
/// counterexamples, then wall_time_ms when `include_timing`.
std::string to_json(const VerificationReport& report, bool include_timing);
/// Header "claim,graph6,diagnostic", one row per counterexample.
std::string to_csv(const VerificationReport& report);

}  // namespace romancrit
