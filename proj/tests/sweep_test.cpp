#include <regex>

#include "doctest.h"
#include "holecert/enumerate.hpp"
#include "holecert/graph6.hpp"
#include "holecert/oracle.hpp"
#include "holecert/sweep.hpp"
#include "support/test_graphs.hpp"

using namespace holecert;
using namespace holecert::testing;

namespace {

std::string without_timings(const std::string& json) {
  return std::regex_replace(json, std::regex(R"("seconds": [0-9.e+-]+)"), R"("seconds": 0)");
}

}  // namespace

TEST_CASE("sweep to n = 5 with both methods") {
  SweepOptions opt;
  opt.max_n = 5;
  const SweepReport r = theorem_sweep(opt);
  CHECK(r.passed());
  CHECK(r.failures.empty());
  CHECK(r.verification_failures() == 0);
  REQUIRE(r.orders.size() == 5);
  const std::size_t counts[] = {1, 1, 2, 6, 21};
  for (int n = 1; n <= 5; ++n) {
    const OrderTally& t = r.orders[n - 1];
    CHECK(t.n == n);
    CHECK(t.graphs == counts[n - 1]);
    CHECK(t.exceptional == 0);
    // Both methods certify every member of the cohort.
    CHECK(t.proof_kinds[0] + t.proof_kinds[1] + t.proof_kinds[2] == t.cohort);
    CHECK(t.oracle_kinds[0] + t.oracle_kinds[1] + t.oracle_kinds[2] == t.cohort);
  }

  // The cohort, recomputed with the brute-force colouring, contains graphs
  // certified by an edge and graphs certified by a triangle.
  std::size_t edge = 0;
  std::size_t triangle = 0;
  for (int n = 2; n <= 5; ++n) {
    std::size_t cohort = 0;
    generate_connected_graphs(n, [&](const Graph& g) {
      if (brute_force_chromatic_number(g) != max_degree(g)) return;
      ++cohort;
      const auto report = find_witness_report(g);
      if (report.route == WitnessRoute::kEdge) ++edge;
      if (report.route == WitnessRoute::kTriangle) ++triangle;
    });
    CHECK(cohort == r.orders[n - 1].cohort);
  }
  CHECK(edge > 0);
  CHECK(triangle > 0);
}

TEST_CASE("sweep to n = 7 records exactly one exceptional graph") {
  SweepOptions opt;
  opt.max_n = 7;
  opt.jobs = 2;
  const SweepReport r = theorem_sweep(opt);
  CHECK(r.passed());
  REQUIRE(r.exceptional_graphs.size() == 1);
  CHECK(r.orders[6].exceptional == 1);
  const Graph g = decode_graph6(r.exceptional_graphs.front());
  CHECK(canonical_form(g).code == canonical_form(c7_complement()).code);
  CHECK(r.audit.bad_holes == 0);
  CHECK(r.audit.swap_failures == 0);
  CHECK(r.audit.inconsistent == 0);
  CHECK(r.audit.oracle_fallbacks == 0);
}

TEST_CASE("sweep output does not depend on the worker count") {
  SweepOptions opt;
  opt.max_n = 7;
  opt.chunk = 97;
  opt.jobs = 1;
  const SweepReport one = theorem_sweep(opt);
  opt.jobs = 3;
  const SweepReport three = theorem_sweep(opt);
  std::string a = without_timings(report_json(one));
  std::string b = without_timings(report_json(three));
  a = std::regex_replace(a, std::regex(R"("jobs": \d+)"), R"("jobs": 0)");
  b = std::regex_replace(b, std::regex(R"("jobs": \d+)"), R"("jobs": 0)");
  CHECK(a == b);
}

TEST_CASE("method selection") {
  SweepOptions opt;
  opt.max_n = 6;
  opt.method = SweepMethod::kProof;
  const SweepReport proof = theorem_sweep(opt);
  CHECK(proof.passed());
  for (const auto& t : proof.orders) CHECK(t.oracle_kinds == std::array<std::size_t, 3>{});
  opt.method = SweepMethod::kOracle;
  const SweepReport oracle = theorem_sweep(opt);
  CHECK(oracle.passed());
  for (const auto& t : oracle.orders) CHECK(t.proof_kinds == std::array<std::size_t, 3>{});
  CHECK(oracle.audit.claim1_probes == 0);

  CHECK(parse_method("both") == SweepMethod::kBoth);
  CHECK_FALSE(parse_method("neither"));
  SweepOptions bad;
  bad.max_n = 10;
  CHECK_THROWS_AS(theorem_sweep(bad), std::invalid_argument);
}

TEST_CASE("corpus sweep") {
  const std::vector<std::string> lines{">>graph6<<", "C~", "", "Dhc", encode_graph6(petersen()),
                                       encode_graph6(c7_complement()) + "\r"};
  const SweepReport r = corpus_sweep(lines, SweepMethod::kBoth, 2);
  CHECK(r.failures.empty());
  CHECK(r.passed());
  CHECK(r.exceptional_graphs.size() == 1);
  std::size_t graphs = 0;
  std::size_t cohort = 0;
  for (const auto& t : r.orders) {
    graphs += t.graphs;
    cohort += t.cohort;
  }
  CHECK(graphs == 4);
  CHECK(cohort == 2);  // K4 and C5 have χ = Δ + 1
  CHECK_THROWS_AS(corpus_sweep({"C"}, SweepMethod::kBoth, 1), Graph6Error);
}

TEST_CASE("report rendering") {
  SweepOptions opt;
  opt.max_n = 4;
  const SweepReport r = theorem_sweep(opt);
  const std::string text = report_text(r);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("chi=Delta") != std::string::npos);
  const std::string json = report_json(r);
  CHECK(json.find("\"passed\": true") != std::string::npos);
  CHECK(json.find("\"chi_equals_delta\"") != std::string::npos);
}
