#include "romancrit/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace romancrit {

namespace {

constexpr std::array<std::pair<FamilyTag, const char*>, 9> kNames{{
    {FamilyTag::Empty, "Empty"},
    {FamilyTag::Complete, "Complete"},
    {FamilyTag::Path, "Path"},
    {FamilyTag::Cycle, "Cycle"},
    {FamilyTag::Xn, "Xn"},
    {FamilyTag::Dn, "Dn"},
    {FamilyTag::Elem1, "Elem1"},
    {FamilyTag::Elem2, "Elem2"},
    {FamilyTag::Elem3, "Elem3"},
}};

[[noreturn]] void invalid_order(FamilyTag tag, unsigned n, const char* rule) {
  throw Error(ErrorCode::InvalidOrder, std::string(to_string(tag)) + " requires " + rule +
                                           ", got order " + std::to_string(n));
}

}  // namespace

const char* to_string(FamilyTag tag) noexcept {
  for (const auto& [t, name] : kNames)
    if (t == tag) return name;
  return "?";
}

std::optional<FamilyTag> family_from_string(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::ranges::transform(out, out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
  };
  const std::string key = lower(name);
  for (const auto& [tag, n] : kNames)
    if (lower(n) == key) return tag;
  return std::nullopt;
}

Graph gen_family(const Family& family) {
  const unsigned n = family.order;
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "family order above 64");
  std::vector<Edge> edges;

  switch (family.tag) {
    case FamilyTag::Empty:
      break;
    case FamilyTag::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
    case FamilyTag::Path:
      for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
      break;
    case FamilyTag::Cycle:
      if (n < 3) invalid_order(family.tag, n, "order >= 3");
      for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
      break;
    case FamilyTag::Xn:
      if (n < 5) invalid_order(family.tag, n, "order >= 5");
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          unsigned gap = v - u;
          if (gap != 2 && gap != n - 2) edges.push_back({u, v});
        }
      break;
    case FamilyTag::Dn: {
      if (n < 6 || n % 2 != 0) invalid_order(family.tag, n, "even order >= 6");
      const Vertex cut = n - 2;
      const Vertex pendant = n - 1;
      edges.push_back({0, 1});
      edges.push_back({cut, pendant});
      for (Vertex j = 2; j < cut; ++j) {
        edges.push_back({j, cut});
        edges.push_back({0, j});
        edges.push_back({1, j});
        for (Vertex k = j + 1; k < cut; ++k)
          if (!(j % 2 == 0 && k == j + 1)) edges.push_back({j, k});
      }
      break;
    }
    case FamilyTag::Elem1:
    case FamilyTag::Elem2:
    case FamilyTag::Elem3:
      if (n != 4) invalid_order(family.tag, n, "order 4");
      if (family.tag != FamilyTag::Elem1) edges.push_back({0, 1});
      if (family.tag == FamilyTag::Elem3) edges.push_back({2, 3});
      break;
  }
  return Graph(n, edges);
}

}  // namespace romancrit
