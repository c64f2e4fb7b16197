#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "romancrit/graph.hpp"

namespace romancrit {

enum class FamilyTag { Empty, Complete, Path, Cycle, Xn, Dn, Elem1, Elem2, Elem3 };

struct Family {
  FamilyTag tag = FamilyTag::Empty;
  unsigned order = 0;
};

const char* to_string(FamilyTag tag) noexcept;
/// Case-insensitive lookup by name ("Cycle", "Dn", "Elem3", ...).
std::optional<FamilyTag> family_from_string(std::string_view name);

/// Builds the named graph. Throws InvalidOrder when the order is not
/// admissible for the family:
///   Cycle: n >= 3; Xn: n >= 5; Dn: n even and >= 6; Elem1..3: n == 4.
///
/// Xn joins vertex i to everything except i-2 and i+2 (mod n), so X5 is the
/// 5-cycle. Dn, 0-indexed: {0,1} and {n-2,n-1} are edges, both 0 and 1 and
/// n-2 are joined to every vertex of the middle block 2..n-3, and the middle
/// block is complete minus the matching (2,3),(4,5),...,(n-4,n-3).
Graph gen_family(const Family& family);

}  // namespace romancrit
