#include "doctest.h"
#include "holecert/oracle.hpp"
#include "holecert/witness.hpp"
#include "support/forced_replay.hpp"
#include "support/test_graphs.hpp"

using namespace holecert;
using namespace holecert::testing;

namespace {

void check_labeling(const Graph& g, const SquaredCycleLabeling& l) {
  REQUIRE(l.n == g.order());
  REQUIRE(static_cast<int>(l.position.size()) == g.order());
  std::vector<int> sorted = l.position;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < l.n; ++i) REQUIRE(sorted[i] == i);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = u + 1; w < g.order(); ++w) {
      CHECK(g.adjacent(u, w) == (cyclic_distance(l.position[u], l.position[w], l.n) <= 2));
    }
  }
}

SquaredCycleLabeling trace(const Graph& g) {
  TraceOutcome out = trace_squared_cycle(g);
  REQUIRE(std::holds_alternative<SquaredCycleLabeling>(out));
  return std::get<SquaredCycleLabeling>(out);
}

}  // namespace

TEST_CASE("trace_squared_cycle on squared cycles") {
  for (int n = 7; n <= 20; ++n) {
    CAPTURE(n);
    check_labeling(cycle_power(n, 2), trace(cycle_power(n, 2)));
  }
  check_labeling(c7_complement(), trace(c7_complement()));
}

TEST_CASE("trace_squared_cycle on relabelled squared cycles") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 30);
    const Graph g = relabel(cycle_power(n, 2), random_permutation(n, rng));
    check_labeling(g, trace(g));
  }
}

TEST_CASE("trace_squared_cycle rejects other graphs") {
  CHECK_THROWS_AS(trace_squared_cycle(cycle_graph(7)), ContractError);
  // Two disjoint copies of C7^2.
  GraphBuilder b(14);
  for (const auto& [u, w] : cycle_power(7, 2).edges()) {
    b.add_edge(u, w);
    b.add_edge(u + 7, w + 7);
  }
  CHECK_THROWS_AS(trace_squared_cycle(std::move(b).build()), ContractError);
  // K5 is 4-regular but not a squared cycle on at least 7 vertices.
  TraceOutcome k5 = trace_squared_cycle(complete_graph(5));
  CHECK_FALSE(std::holds_alternative<SquaredCycleLabeling>(k5));
  if (const auto* c = std::get_if<Certificate>(&k5)) {
    CHECK(verify_certificate(complete_graph(5), *c).accepted);
  }
}

TEST_CASE("squared_cycle_hole examples") {
  CHECK(squared_cycle_hole(16) == std::vector<Vertex>{1, 3, 4, 6, 7, 9, 11, 13, 15});
  CHECK(squared_cycle_hole(10) == std::vector<Vertex>{1, 3, 5, 7, 9});
  CHECK(squared_cycle_hole(8) == std::vector<Vertex>{0, 2, 4, 5, 7});

  const Graph sq8 = cycle_power(8, 2);
  for (const auto& [u, w] : std::vector<Edge>{{0, 2}, {2, 4}, {4, 5}, {5, 7}, {7, 0}}) {
    CHECK(sq8.adjacent(u, w));
  }
  for (const auto& [u, w] : std::vector<Edge>{{0, 4}, {0, 5}, {2, 5}, {2, 7}, {4, 7}}) {
    CHECK_FALSE(sq8.adjacent(u, w));
  }

  CHECK_THROWS_AS(squared_cycle_hole(9), std::invalid_argument);
  CHECK_THROWS_AS(squared_cycle_hole(12), std::invalid_argument);
  CHECK_THROWS_AS(squared_cycle_hole(7), std::invalid_argument);
  CHECK_THROWS_AS(squared_cycle_hole(5), std::invalid_argument);
}

TEST_CASE("squared_cycle_hole length 2k - 1 for n = 3k + 1") {
  for (int k = 3; k <= 21; ++k) {
    const int n = 3 * k + 1;
    CAPTURE(n);
    const auto hole = squared_cycle_hole(n);
    CHECK(static_cast<int>(hole.size()) == 2 * k - 1);
    const Graph g = cycle_power(n, 2);
    CHECK(verify_certificate(g, HighOddHoleWitness{hole}).accepted);
    CHECK(induces_cycle(g, VertexSet::of(hole)));
  }
}

TEST_CASE("squared_cycle_hole for n = 3k + 2") {
  for (int n = 8; n <= 64; n += 3) {
    CAPTURE(n);
    const auto hole = squared_cycle_hole(n);
    const int len = static_cast<int>(hole.size());
    CHECK(len % 2 == 1);
    CHECK(2 * len >= n);
    CHECK(3 * len <= 2 * n);
    const Graph g = cycle_power(n, 2);
    CHECK(verify_certificate(g, HighOddHoleWitness{hole}).accepted);
  }
}

TEST_CASE("squared cycles carry a high odd hole from n = 8 on") {
  for (int n = 5; n <= 14; ++n) {
    CAPTURE(n);
    const Graph g = cycle_power(n, 2);
    CHECK(brute_force_has_high_odd_hole(g) == (n >= 8));
  }
}

TEST_CASE("sequence_three_coloring") {
  CHECK(sequence_three_coloring(9).colors() == std::vector<Color>{1, 2, 3, 1, 2, 3, 1, 2, 3});
  for (int n = 6; n <= 60; n += 3) {
    CHECK(is_proper(cycle_power(n, 2), sequence_three_coloring(n), VertexSet::range(n)));
  }
  CHECK_THROWS_AS(sequence_three_coloring(8), std::invalid_argument);
  CHECK_THROWS_AS(sequence_three_coloring(3), std::invalid_argument);
}

TEST_CASE("forced_coloring_conflict") {
  const auto f8 = forced_coloring_conflict(8);
  CHECK(f8.removed == 0);
  CHECK(f8.color == 1);
  CHECK(replay_conflict(f8).empty());
  // Closing edge back to the first seed.
  CHECK((f8.conflict.first == f8.order[0] || f8.conflict.second == f8.order[0]));

  CHECK(replay_conflict(forced_coloring_conflict(11)).empty());
  CHECK_THROWS_AS(forced_coloring_conflict(9), std::invalid_argument);
  CHECK_THROWS_AS(forced_coloring_conflict(5), std::invalid_argument);

  for (int n = 7; n <= 61; ++n) {
    if (n % 3 == 0) continue;
    CAPTURE(n);
    CHECK(replay_conflict(forced_coloring_conflict(n)).empty());
  }
}

TEST_CASE("squared cycles are 4-chromatic off the multiples of 3") {
  for (int n = 7; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(chromatic_number(cycle_power(n, 2)) == (n % 3 == 0 ? 3 : 4));
  }
}
