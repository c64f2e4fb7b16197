#pragma once

#include <string>
#include <string_view>

#include "romancrit/graph.hpp"

namespace romancrit {

/// graph6 line codec, orders 0..62. The line carries no trailing newline.
/// parse_graph6 tolerates a trailing '\n' or "\r\n".
std::string emit_graph6(const Graph& g);
Graph parse_graph6(std::string_view line);

}  // namespace romancrit
