#include "romancrit/graph6.hpp"

#include <vector>

namespace romancrit {

namespace {

constexpr unsigned kMaxGraph6Order = 62;
constexpr char kBias = 63;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::Malformed, "graph6: " + why);
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const unsigned n = g.order();
  if (n > kMaxGraph6Order) throw Error(ErrorCode::TooLarge, "graph6 supports orders up to 62");

  std::string out(1, static_cast<char>(kBias + n));
  unsigned acc = 0;
  unsigned filled = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) malformed("empty line");

  const int head = static_cast<unsigned char>(line[0]) - kBias;
  if (head < 0 || head > 63) malformed("order byte out of range");
  if (head == 63) malformed("orders above 62 are not supported");
  const unsigned n = static_cast<unsigned>(head);

  const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected)
    malformed("expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) +
              ", got " + std::to_string(line.size()));

  for (std::size_t i = 1; i < line.size(); ++i) {
    const int byte = static_cast<unsigned char>(line[i]) - kBias;
    if (byte < 0 || byte > 63) malformed("byte " + std::to_string(i) + " out of range");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
      if (((byte >> (5 - k % 6)) & 1) != 0) edges.push_back({u, v});
    }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - kBias;
    const int padding = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << padding) - 1)) != 0) malformed("nonzero padding bits");
  }
  return Graph(n, edges);
}

}  // namespace romancrit
