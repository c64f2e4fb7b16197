#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "romancrit/graph.hpp"

namespace romancrit {

/// A labeling V -> {0,1,2}, equivalently the ordered partition (V0;V1;V2).
class RomanAssignment {
 public:
  RomanAssignment() = default;
  /// Throws InvalidArgument if a label is not 0, 1 or 2, or if there are more
  /// than kMaxOrder labels.
  explicit RomanAssignment(std::vector<std::uint8_t> labels);
  /// V0 is the complement of ones | twos. Masks must be disjoint.
  static RomanAssignment from_partition(unsigned order, Mask ones, Mask twos);

  unsigned size() const noexcept { return static_cast<unsigned>(labels_.size()); }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }
  std::uint8_t operator[](Vertex v) const { return labels_.at(v); }

  /// Vertices carrying `label`.
  VertexSet level_set(unsigned label) const;
  Mask level_mask(unsigned label) const;

  /// "V0={..} V1={..} V2={..}"
  std::string str() const;

  friend bool operator==(const RomanAssignment&, const RomanAssignment&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

struct GammaResult {
  unsigned gamma = 0;
  RomanAssignment witness;
};

inline constexpr unsigned kMaxOracleOrder = 12;
inline constexpr unsigned kMaxPartitionOrder = 24;

/// Every 0-labeled vertex has a 2-labeled neighbor. Throws LengthMismatch.
bool is_roman(const Graph& g, const RomanAssignment& a);

/// |V1| + 2|V2|.
unsigned weight(const RomanAssignment& a) noexcept;

/// Exact Roman domination number.
///
/// Given V2 = S the cheapest completion labels exactly the vertices outside
/// N[S] with 1, so gamma = min over S of 2|S| + |V \ N[S]|. Subsets are swept
/// by increasing size and, within a size, by increasing mask value; the sweep
/// stops once 2|S| reaches the best weight. The first optimum found is the
/// witness, which makes it the smallest S by size and then by mask.
GammaResult roman_number(const Graph& g);

/// Same value as roman_number(g).gamma without building a witness.
unsigned gamma_value(const Graph& g);

/// Minimum weight over all 3^n labelings that pass the Roman condition.
/// Independent check of roman_number. Throws TooLarge above kMaxOracleOrder.
unsigned roman_number_oracle(const Graph& g);

/// Compact form of a minimum-weight partition.
struct PartitionMasks {
  Mask zeros = 0;
  Mask ones = 0;
  Mask twos = 0;

  friend bool operator==(const PartitionMasks&, const PartitionMasks&) = default;
};

/// All minimum-weight Roman partitions, one per optimal S, in ascending order
/// of S as an integer. Throws TooLarge above kMaxPartitionOrder.
std::vector<PartitionMasks> minimal_partition_masks(const Graph& g);
std::vector<RomanAssignment> minimal_partitions(const Graph& g);

}  // namespace romancrit
