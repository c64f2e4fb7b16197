#include "romancrit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "romancrit/enumerate.hpp"
#include "romancrit/families.hpp"
#include "romancrit/graph6.hpp"

namespace romancrit {

namespace {

struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t in_hypothesis = 0;
  std::vector<Counterexample> counterexamples;

  void absorb(ClaimId claim, const Graph& g) {
    ++scanned;
    ClaimCheck check = check_claim(claim, g);
    if (check.in_hypothesis) ++in_hypothesis;
    if (check.diagnostic) counterexamples.push_back({emit_graph6(g), std::move(*check.diagnostic)});
  }

  void merge(Partial&& other) {
    scanned += other.scanned;
    in_hypothesis += other.in_hypothesis;
    counterexamples.insert(counterexamples.end(),
                           std::make_move_iterator(other.counterexamples.begin()),
                           std::make_move_iterator(other.counterexamples.end()));
  }
};

// Splits [0, total) into contiguous blocks and lets `workers` threads claim
// them in turn. `run_block(begin, end)` must be pure apart from its result.
template <typename RunBlock>
Partial run_blocks(std::uint64_t total, unsigned workers, RunBlock run_block) {
  workers = std::max(1u, workers);
  const std::uint64_t block_count = std::min<std::uint64_t>(total, std::uint64_t{workers} * 16);
  if (block_count == 0) return {};
  const std::uint64_t block_size = (total + block_count - 1) / block_count;

  std::atomic<std::uint64_t> next{0};
  std::mutex merge_mutex;
  Partial merged;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      Partial local;
      for (std::uint64_t b = next++; b * block_size < total; b = next++)
        local.merge(run_block(b * block_size, std::min(total, (b + 1) * block_size)));
      std::lock_guard lock(merge_mutex);
      merged.merge(std::move(local));
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      failure = std::current_exception();
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::ranges::sort(merged.counterexamples);
  return merged;
}

VerificationReport finish(ClaimId claim, std::string source, Partial&& partial,
                          std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.claim = claim;
  report.source = std::move(source);
  report.graphs_scanned = partial.scanned;
  report.graphs_in_hypothesis = partial.in_hypothesis;
  report.counterexamples = std::move(partial.counterexamples);
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

unsigned resolve_workers(const VerifyOptions& options) {
  return options.workers ? options.workers : default_workers();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport verify_enumerated(ClaimId claim, unsigned n, const VerifyOptions& options) {
  if (n > kMaxEnumerationOrder && !options.allow_large)
    throw Error(ErrorCode::TooLarge, "labeled enumeration above order 7 needs the large-order override");
  if (n > kMaxOverrideOrder) throw Error(ErrorCode::TooLarge, "enumeration limited to order 11");

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  Partial partial = run_blocks(total, resolve_workers(options), [&](std::uint64_t b, std::uint64_t e) {
    Partial local;
    enumerate_mask_range(n, b, e, [&](const Graph& g) { local.absorb(claim, g); });
    return local;
  });
  if (partial.scanned != total)
    throw Error(ErrorCode::InvalidArgument, "enumeration count mismatch");
  return finish(claim, "enumerate:" + std::to_string(n), std::move(partial), start);
}

VerificationReport verify_graphs(ClaimId claim, std::string source, std::span<const Graph> graphs,
                                 const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Partial partial = run_blocks(graphs.size(), resolve_workers(options),
                               [&](std::uint64_t b, std::uint64_t e) {
                                 Partial local;
                                 for (std::uint64_t i = b; i < e; ++i) local.absorb(claim, graphs[i]);
                                 return local;
                               });
  return finish(claim, std::move(source), std::move(partial), start);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text = trim(line);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) continue;
    try {
      out.push_back(parse_graph6(text));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> parse_family_list(std::string_view list) {
  std::vector<Graph> out;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;

    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::InvalidArgument, "family item '" + std::string(item) + "' is not NAME:ORDER");
    const auto tag = family_from_string(item.substr(0, colon));
    if (!tag) throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(item.substr(0, colon)) + "'");
    const std::string_view number = item.substr(colon + 1);
    unsigned order = 0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), order);
    if (ec != std::errc() || ptr != number.data() + number.size())
      throw Error(ErrorCode::InvalidArgument, "bad order in family item '" + std::string(item) + "'");
    out.push_back(gen_family({*tag, order}));
  }
  return out;
}

std::string to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["claim"] = to_string(report.claim);
  j["source"] = report.source;
  j["graphs_scanned"] = report.graphs_scanned;
  j["graphs_in_hypothesis"] = report.graphs_in_hypothesis;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const Counterexample& c : report.counterexamples)
    j["counterexamples"].push_back({{"graph6", c.graph6}, {"diagnostic", c.diagnostic}});
  if (include_timing) j["wall_time_ms"] = report.wall_time.count();
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "claim,graph6,diagnostic\n";
  for (const Counterexample& c : report.counterexamples)
    out += std::string(to_string(report.claim)) + "," + quote(c.graph6) + "," + quote(c.diagnostic) + "\n";
  return out;
}

}  // namespace romancrit
