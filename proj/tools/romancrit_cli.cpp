// Command-line front end. Talks to the engine only through romancrit.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "romancrit/romancrit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexamples = 2;

struct GraphDeleter {
  void operator()(rc_graph* g) const { rc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<rc_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(rc_status status, const std::string& context) {
  if (status != RC_OK)
    throw CliError(context + ": " + rc_status_name(status) + ": " + rc_last_error_message());
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Non-empty graph6 lines of the input, with any ">>graph6<<" header removed.
std::vector<std::string> graph6_lines(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_all(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

GraphPtr parse(const std::string& line) {
  rc_graph* g = nullptr;
  check(rc_graph_from_graph6(line.c_str(), &g), "graph6 '" + line + "'");
  return GraphPtr(g);
}

std::string level_set(const std::vector<uint8_t>& labels, uint8_t label) {
  std::string s = "{";
  bool first = true;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == label) {
      s += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
  return s + "}";
}

int run_gamma(const std::string& input) {
  for (const std::string& line : graph6_lines(input)) {
    GraphPtr g = parse(line);
    uint32_t gamma = 0;
    std::vector<uint8_t> labels(rc_graph_order(g.get()));
    check(rc_roman_number(g.get(), &gamma, labels.data()), "gamma");
    std::cout << gamma << " V0=" << level_set(labels, 0) << " V1=" << level_set(labels, 1)
              << " V2=" << level_set(labels, 2) << "\n";
  }
  return kExitOk;
}

int run_report(const std::string& input) {
  for (const std::string& line : graph6_lines(input)) {
    GraphPtr g = parse(line);
    char* json = nullptr;
    check(rc_report_json(g.get(), &json), "report");
    std::cout << OwnedString(json).get();
  }
  return kExitOk;
}

int run_classify(const std::string& input) {
  for (const std::string& line : graph6_lines(input)) {
    GraphPtr g = parse(line);
    char* verdict = nullptr;
    check(rc_classify(g.get(), &verdict), "classify");
    std::cout << line << " " << OwnedString(verdict).get() << "\n";
  }
  return kExitOk;
}

int run_gen(const std::string& family, uint32_t order) {
  rc_graph* raw = nullptr;
  check(rc_graph_family(family.c_str(), order, &raw), "gen");
  GraphPtr g(raw);
  char* line = nullptr;
  check(rc_graph_to_graph6(g.get(), &line), "gen");
  std::cout << OwnedString(line).get() << "\n";
  return kExitOk;
}

int run_oracle(const std::string& input) {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (const std::string& line : graph6_lines(input)) {
    GraphPtr g = parse(line);
    uint32_t fast = 0;
    uint32_t slow = 0;
    check(rc_roman_number(g.get(), &fast, nullptr), "gamma");
    check(rc_roman_number_oracle(g.get(), &slow), "oracle");
    ++checked;
    if (fast != slow) {
      ++mismatches;
      std::cout << line << " sweep=" << fast << " oracle=" << slow << "\n";
    }
  }
  std::cout << "checked " << checked << " graphs, " << mismatches << " mismatches\n";
  return mismatches ? kExitCounterexamples : kExitOk;
}

struct VerifyArgs {
  std::string claim;
  int enumerate = -1;
  std::string input;
  std::string families;
  bool allow_large = false;
  bool csv = false;
  bool timing = false;
};

int run_verify(const VerifyArgs& args) {
  rc_verify_options options{};
  options.allow_large = args.allow_large;
  options.include_timing = args.timing;
  options.format = args.csv ? RC_FORMAT_CSV : RC_FORMAT_JSON;

  char* report = nullptr;
  std::size_t found = 0;
  if (args.enumerate >= 0) {
    check(rc_verify_enumerate(args.claim.c_str(), static_cast<uint32_t>(args.enumerate), &options,
                              &report, &found),
          "verify");
  } else if (!args.input.empty()) {
    const std::string text = read_all(args.input);
    const std::string source = "input:" + args.input;
    check(rc_verify_graph6(args.claim.c_str(), source.c_str(), text.c_str(), &options, &report, &found),
          "verify");
  } else {
    check(rc_verify_families(args.claim.c_str(), args.families.c_str(), &options, &report, &found),
          "verify");
  }
  std::cout << OwnedString(report).get();
  return found ? kExitCounterexamples : kExitOk;
}

int run_claims() {
  for (std::size_t i = 0; i < rc_claim_count(); ++i)
    std::cout << rc_claim_name(i) << "\t" << rc_claim_statement(i) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roman domination criticality engine and claim checker (vertices are 0-indexed)"};
  app.require_subcommand(1);

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "graph6 file, one graph per line ('-' for stdin)");
  };

  auto* gamma = app.add_subcommand("gamma", "print gamma_R and a minimum witness for each graph6 line");
  add_input(gamma);
  auto* report = app.add_subcommand("report", "print the criticality report of each graph6 line as JSON");
  add_input(report);
  auto* classify = app.add_subcommand("classify", "classify each graph6 line against the gamma_R = 4 theory");
  add_input(classify);
  auto* oracle = app.add_subcommand("oracle", "cross-check the subset sweep against the 3^n oracle");
  add_input(oracle);

  std::string family;
  uint32_t order = 0;
  auto* gen = app.add_subcommand("gen", "emit a family member as graph6");
  gen->add_option("family", family, "Empty, Complete, Path, Cycle, Xn, Dn, Elem1, Elem2, Elem3")->required();
  gen->add_option("n", order, "order")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a claim over a graph source and print a report");
  verify->add_option("claim", verify_args.claim, "claim id (see `claims`)")->required();
  auto* source_enum = verify->add_option("--enumerate", verify_args.enumerate, "all labeled graphs on N vertices");
  auto* source_input = verify->add_option("--input", verify_args.input, "graph6 file ('-' for stdin)");
  auto* source_families = verify->add_option("--families", verify_args.families, "list such as Dn:6,Dn:8");
  source_enum->excludes(source_input, source_families);
  source_input->excludes(source_families);
  verify->add_flag("--allow-large", verify_args.allow_large, "permit enumeration above 7 vertices");
  verify->add_flag("--csv", verify_args.csv, "CSV output (claim,graph6,diagnostic)");
  verify->add_flag("--timing", verify_args.timing, "include wall_time_ms in the JSON report");

  auto* claims = app.add_subcommand("claims", "list claim ids and statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gamma) return run_gamma(input);
    if (*report) return run_report(input);
    if (*classify) return run_classify(input);
    if (*oracle) return run_oracle(input);
    if (*gen) return run_gen(family, order);
    if (*claims) return run_claims();
    if (*verify) {
      if (verify_args.enumerate < 0 && verify_args.input.empty() && verify_args.families.empty()) {
        std::cerr << "verify: one of --enumerate, --input or --families is required\n";
        return kExitUsage;
      }
      return run_verify(verify_args);
    }
  } catch (const CliError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
