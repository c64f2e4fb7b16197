#include "romancrit/romancrit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "romancrit/claims.hpp"
#include "romancrit/criticality.hpp"
#include "romancrit/families.hpp"
#include "romancrit/gamma4.hpp"
#include "romancrit/graph6.hpp"
#include "romancrit/isomorphism.hpp"
#include "romancrit/report.hpp"
#include "romancrit/roman.hpp"
#include "romancrit/verify.hpp"

struct rc_graph {
  romancrit::Graph graph;
};

namespace {

using namespace romancrit;

thread_local std::string last_error;

rc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return RC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::SelfLoop: return RC_ERR_SELF_LOOP;
    case ErrorCode::NoSuchEdge: return RC_ERR_NO_SUCH_EDGE;
    case ErrorCode::EdgeExists: return RC_ERR_EDGE_EXISTS;
    case ErrorCode::Malformed: return RC_ERR_MALFORMED;
    case ErrorCode::TooLarge: return RC_ERR_TOO_LARGE;
    case ErrorCode::InvalidOrder: return RC_ERR_INVALID_ORDER;
    case ErrorCode::LengthMismatch: return RC_ERR_LENGTH_MISMATCH;
    case ErrorCode::NotVCritical: return RC_ERR_NOT_V_CRITICAL;
    case ErrorCode::PreconditionViolated: return RC_ERR_PRECONDITION;
    case ErrorCode::UnknownClaim: return RC_ERR_UNKNOWN_CLAIM;
    case ErrorCode::InvalidArgument: return RC_ERR_INVALID_ARGUMENT;
  }
  return RC_ERR_INTERNAL;
}

rc_status fail(rc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
rc_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return RC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RC_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, what);
}

rc_graph* wrap(Graph g) { return new rc_graph{std::move(g)}; }

VerifyOptions to_options(const rc_verify_options* o) {
  VerifyOptions out;
  if (o) {
    out.workers = o->workers;
    out.allow_large = o->allow_large != 0;
  }
  return out;
}

void render(const VerificationReport& report, const rc_verify_options* o, char** out, size_t* count) {
  const bool csv = o && o->format == RC_FORMAT_CSV;
  const bool timing = o && o->include_timing;
  *out = duplicate(csv ? to_csv(report) : to_json(report, timing));
  if (count) *count = report.counterexamples.size();
}

}  // namespace

extern "C" {

const char* rc_status_name(rc_status status) {
  switch (status) {
    case RC_OK: return "OK";
    case RC_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case RC_ERR_SELF_LOOP: return "SelfLoop";
    case RC_ERR_NO_SUCH_EDGE: return "NoSuchEdge";
    case RC_ERR_EDGE_EXISTS: return "EdgeExists";
    case RC_ERR_MALFORMED: return "Malformed";
    case RC_ERR_TOO_LARGE: return "TooLarge";
    case RC_ERR_INVALID_ORDER: return "InvalidOrder";
    case RC_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case RC_ERR_NOT_V_CRITICAL: return "NotVCritical";
    case RC_ERR_PRECONDITION: return "PreconditionViolated";
    case RC_ERR_UNKNOWN_CLAIM: return "UnknownClaim";
    case RC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RC_ERR_IO: return "IO";
    case RC_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* rc_last_error_message(void) { return last_error.c_str(); }

void rc_string_free(char* s) { std::free(s); }

rc_status rc_graph_new(uint32_t order, const uint32_t* edges, size_t edge_count, rc_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(edges != nullptr || edge_count == 0, "null edge array");
    std::vector<Edge> list(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = wrap(Graph(order, list));
  });
}

rc_status rc_graph_from_graph6(const char* line, rc_graph** out) {
  return guarded([&] {
    require(line != nullptr && out != nullptr, "null argument");
    *out = wrap(parse_graph6(line));
  });
}

rc_status rc_graph_family(const char* family, uint32_t order, rc_graph** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null argument");
    const auto tag = family_from_string(family);
    if (!tag) throw Error(ErrorCode::InvalidArgument, std::string("unknown family '") + family + "'");
    *out = wrap(gen_family({*tag, order}));
  });
}

void rc_graph_free(rc_graph* g) { delete g; }

uint32_t rc_graph_order(const rc_graph* g) { return g ? g->graph.order() : 0; }

size_t rc_graph_edge_count(const rc_graph* g) { return g ? g->graph.edge_count() : 0; }

rc_status rc_graph_degree(const rc_graph* g, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = g->graph.degree(v);
  });
}

rc_status rc_graph_to_graph6(const rc_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = duplicate(emit_graph6(g->graph));
  });
}

rc_status rc_graph_delete_vertex(const rc_graph* g, uint32_t v, rc_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(g->graph.delete_vertex(v));
  });
}

rc_status rc_graph_delete_edge(const rc_graph* g, uint32_t u, uint32_t v, rc_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(g->graph.delete_edge(u, v));
  });
}

rc_status rc_graph_add_edge(const rc_graph* g, uint32_t u, uint32_t v, rc_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(g->graph.add_edge(u, v));
  });
}

rc_status rc_graph_is_isomorphic(const rc_graph* g, const rc_graph* h, int* out) {
  return guarded([&] {
    require(g != nullptr && h != nullptr && out != nullptr, "null argument");
    *out = is_isomorphic(g->graph, h->graph) ? 1 : 0;
  });
}

rc_status rc_roman_number(const rc_graph* g, uint32_t* gamma, uint8_t* labels) {
  return guarded([&] {
    require(g != nullptr && gamma != nullptr, "null argument");
    const GammaResult r = roman_number(g->graph);
    *gamma = r.gamma;
    if (labels)
      for (Vertex v = 0; v < r.witness.size(); ++v) labels[v] = r.witness[v];
  });
}

rc_status rc_roman_number_oracle(const rc_graph* g, uint32_t* gamma) {
  return guarded([&] {
    require(g != nullptr && gamma != nullptr, "null argument");
    *gamma = roman_number_oracle(g->graph);
  });
}

rc_status rc_is_roman(const rc_graph* g, const uint8_t* labels, size_t length, int* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr && (labels != nullptr || length == 0), "null argument");
    RomanAssignment a(std::vector<std::uint8_t>(labels, labels + length));
    *out = is_roman(g->graph, a) ? 1 : 0;
  });
}

rc_status rc_minimal_partition_count(const rc_graph* g, size_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = minimal_partition_masks(g->graph).size();
  });
}

rc_status rc_assess_criticality(const rc_graph* g, rc_criticality* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const CriticalityReport r = assess_criticality(g->graph);
    *out = {r.gamma, r.nonelementary, r.v_critical, r.e_critical, r.saturated};
  });
}

rc_status rc_report_json(const rc_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = duplicate(to_json(criticality_report(g->graph)));
  });
}

rc_status rc_classify(const rc_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = duplicate(classify_critical4(g->graph).str());
  });
}

size_t rc_claim_count(void) { return all_claims().size(); }

const char* rc_claim_name(size_t index) {
  const auto claims = all_claims();
  return index < claims.size() ? to_string(claims[index]) : nullptr;
}

const char* rc_claim_statement(size_t index) {
  const auto claims = all_claims();
  return index < claims.size() ? claim_statement(claims[index]) : nullptr;
}

rc_status rc_verify_enumerate(const char* claim, uint32_t order, const rc_verify_options* options,
                              char** report, size_t* counterexamples) {
  return guarded([&] {
    require(claim != nullptr && report != nullptr, "null argument");
    render(verify_enumerated(claim_from_string(claim), order, to_options(options)), options, report,
           counterexamples);
  });
}

rc_status rc_verify_graph6(const char* claim, const char* source, const char* text,
                           const rc_verify_options* options, char** report, size_t* counterexamples) {
  return guarded([&] {
    require(claim != nullptr && text != nullptr && report != nullptr, "null argument");
    const ClaimId id = claim_from_string(claim);
    std::istringstream in(text);
    const auto graphs = read_graph6_stream(in);
    render(verify_graphs(id, source ? source : "input", graphs, to_options(options)), options, report,
           counterexamples);
  });
}

rc_status rc_verify_families(const char* claim, const char* families, const rc_verify_options* options,
                             char** report, size_t* counterexamples) {
  return guarded([&] {
    require(claim != nullptr && families != nullptr && report != nullptr, "null argument");
    const ClaimId id = claim_from_string(claim);
    const auto graphs = parse_family_list(families);
    render(verify_graphs(id, std::string("families:") + families, graphs, to_options(options)), options,
           report, counterexamples);
  });
}

}  // extern "C"
