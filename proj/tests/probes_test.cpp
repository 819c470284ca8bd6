#include "doctest.h"
#include "holecert/oracle.hpp"
#include "holecert/witness.hpp"
#include "support/probe_harvest.hpp"
#include "support/test_graphs.hpp"

using namespace holecert;
using namespace holecert::testing;

namespace {

NeighborhoodSplit split_of(const Graph& g, Vertex v) {
  SplitOutcome out = neighborhood_split(g, v);
  REQUIRE(std::holds_alternative<NeighborhoodSplit>(out));
  return std::get<NeighborhoodSplit>(out);
}

// Conditions of a valid split checked straight from the adjacency.
void check_split_shape(const Graph& g, const NeighborhoodSplit& s) {
  CHECK_FALSE(g.adjacent(s.a[0], s.a[1]));
  VertexSet all{s.a[0], s.a[1]};
  for (Vertex b : s.b) all.insert(b);
  CHECK(all == g.neighbors(s.center));
  for (Vertex b : s.b) {
    for (Vertex c : s.b) CHECK((b == c || g.adjacent(b, c)));
    CHECK((g.adjacent(b, s.a[0]) || g.adjacent(b, s.a[1])));
  }
}

}  // namespace

TEST_CASE("claim1_probe on complete and cycle graphs") {
  const Graph k4 = complete_graph(4);
  const auto adj = claim1_probe(k4, 3, 0, 1, Coloring(3, {1, 2, 3, 0}));
  REQUIRE(std::holds_alternative<Adjacent>(adj));
  CHECK(std::get<Adjacent>(adj).u == 0);
  CHECK(std::get<Adjacent>(adj).w == 1);

  const Graph c5 = cycle_graph(5);
  const auto hole = claim1_probe(c5, 0, 1, 4, Coloring(3, {0, 1, 2, 1, 2}));
  REQUIRE(std::holds_alternative<HoleFound>(hole));
  CHECK(std::get<HoleFound>(hole).hole.cycle == std::vector<Vertex>{1, 2, 3, 4, 0});

  const auto bad = claim1_probe(c5, 0, 1, 4, Coloring(3, {0, 1, 2, 1, 3}));
  CHECK(std::holds_alternative<Inconsistent>(bad));
}

TEST_CASE("claim1_probe rejects malformed arguments") {
  const Graph c5 = cycle_graph(5);
  // x coloured.
  CHECK_THROWS_AS(claim1_probe(c5, 0, 1, 4, Coloring(3, {1, 2, 1, 2, 3})), ContractError);
  // y, z same colour.
  CHECK_THROWS_AS(claim1_probe(c5, 0, 1, 4, Coloring(3, {0, 1, 2, 3, 1})), ContractError);
  // z not a neighbour of x.
  CHECK_THROWS_AS(claim1_probe(c5, 0, 1, 3, Coloring(3, {0, 1, 2, 1, 2})), ContractError);
  // Improper colouring.
  CHECK_THROWS_AS(claim1_probe(c5, 0, 1, 4, Coloring(3, {0, 1, 1, 3, 2})), ContractError);
}

TEST_CASE("degree_deficient_probe") {
  CHECK_THROWS_AS(degree_deficient_probe(complete_graph(4), 0), ContractError);

  const Graph sq8 = cycle_power(8, 2);
  const auto minus0 = induced_subgraph(sq8, sq8.vertices().without(0));
  const Graph h = minus0.graph;
  REQUIRE(chromatic_number(h) == 4);
  REQUIRE(max_degree(h) == 4);
  const Vertex v = minus0.to_new[1];
  REQUIRE(h.degree(v) == 3);
  const Certificate cert = degree_deficient_probe(h, v);
  REQUIRE(kind_of(cert) == CertificateKind::kHighOddHole);
  CHECK(std::get<HighOddHoleWitness>(cert).cycle.size() == 5);
  CHECK(verify_certificate(h, cert).accepted);

  const Graph k4_pendant =
      graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  const Certificate clique = degree_deficient_probe(k4_pendant, 1);
  REQUIRE(kind_of(clique) == CertificateKind::kClique);
  CHECK(VertexSet::of(std::get<CliqueWitness>(clique).vertices) == VertexSet{0, 1, 2, 3});
  CHECK(verify_certificate(k4_pendant, clique).accepted);
}

TEST_CASE("neighborhood_split on squared cycles") {
  const Graph sq8 = cycle_power(8, 2);
  const auto s8 = split_of(sq8, 0);
  CHECK(VertexSet{s8.a[0], s8.a[1]} == VertexSet{2, 6});
  CHECK(VertexSet::of(s8.b) == VertexSet{1, 7});
  check_split_shape(sq8, s8);

  const Graph sq7 = cycle_power(7, 2);
  const auto s7 = split_of(sq7, 0);
  CHECK(VertexSet{s7.a[0], s7.a[1]} == VertexSet{2, 5});
  CHECK(VertexSet::of(s7.b) == VertexSet{1, 6});
  check_split_shape(sq7, s7);

  const Graph sq16 = cycle_power(16, 2);
  const auto s16 = split_of(sq16, 0);
  CHECK(VertexSet{s16.a[0], s16.a[1]} == VertexSet{2, 14});
  CHECK(VertexSet::of(s16.b) == VertexSet{1, 15});

  // The three independent pairs of N(0) in C8^2, checked by hand: only
  // {2, 6} leaves a clique that is dominated.
  CHECK_FALSE(sq8.adjacent(2, 6));
  CHECK_FALSE(sq8.adjacent(1, 6));
  CHECK_FALSE(sq8.adjacent(2, 7));
  CHECK(sq8.adjacent(1, 7));

  CHECK_THROWS_AS(neighborhood_split(cycle_graph(5), 0), ContractError);
  CHECK_THROWS_AS(neighborhood_split(petersen(), 0), ContractError);
}

TEST_CASE("neighborhood_split on every vertex of squared cycles") {
  for (int n = 7; n <= 20; ++n) {
    const Graph g = cycle_power(n, 2);
    for (Vertex v = 0; v < n; ++v) {
      SplitOutcome out = neighborhood_split(g, v);
      if (const auto* s = std::get_if<NeighborhoodSplit>(&out)) {
        check_split_shape(g, *s);
      } else if (const auto* c = std::get_if<Certificate>(&out)) {
        CHECK(verify_certificate(g, *c).accepted);
      } else {
        FAIL("inconsistent split on C" << n << "^2 at " << v);
      }
    }
  }
}

TEST_CASE("claim4_check") {
  const Graph sq8 = cycle_power(8, 2);
  const auto s8 = split_of(sq8, 0);
  CountOutcome c8 = claim4_check(sq8, s8, 2);
  REQUIRE(std::holds_alternative<int>(c8));
  CHECK(std::get<int>(c8) == 1);

  const Graph sq7 = cycle_power(7, 2);
  CountOutcome c7 = claim4_check(sq7, split_of(sq7, 0), 2);
  REQUIRE(std::holds_alternative<int>(c7));
  CHECK(std::get<int>(c7) == 1);

  // In K5 an "A-vertex" sees all of B.
  const Graph k5 = complete_graph(5);
  NeighborhoodSplit fake;
  fake.center = 0;
  fake.a = {1, 2};
  fake.b = {3, 4};
  CountOutcome k = claim4_check(k5, fake, 1);
  REQUIRE(std::holds_alternative<Certificate>(k));
  const Certificate& cert = std::get<Certificate>(k);
  REQUIRE(kind_of(cert) == CertificateKind::kClique);
  CHECK(VertexSet::of(std::get<CliqueWitness>(cert).vertices) == VertexSet{0, 1, 3, 4});
  CHECK(verify_certificate(k5, cert).accepted);

  CHECK_THROWS_AS(claim4_check(sq8, s8, 1), ContractError);
}

TEST_CASE("path_quad") {
  const Graph sq8 = cycle_power(8, 2);
  auto q8 = path_quad(sq8, split_of(sq8, 0));
  REQUIRE(std::holds_alternative<PathQuad>(q8));
  const PathQuad p8 = std::get<PathQuad>(q8);
  CHECK(p8 == PathQuad{2, 1, 7, 6});
  CHECK(sq8.adjacent(2, 1));
  CHECK(sq8.adjacent(1, 7));
  CHECK(sq8.adjacent(7, 6));
  CHECK_FALSE(sq8.adjacent(2, 7));
  CHECK_FALSE(sq8.adjacent(1, 6));
  CHECK_FALSE(sq8.adjacent(2, 6));

  const Graph sq7 = cycle_power(7, 2);
  auto q7 = path_quad(sq7, split_of(sq7, 0));
  REQUIRE(std::holds_alternative<PathQuad>(q7));
  CHECK(std::get<PathQuad>(q7) == PathQuad{2, 1, 6, 5});

  const Graph sq16 = cycle_power(16, 2);
  auto q16 = path_quad(sq16, split_of(sq16, 0));
  REQUIRE(std::holds_alternative<PathQuad>(q16));
  CHECK(std::get<PathQuad>(q16) == PathQuad{2, 1, 15, 14});

  auto via_local = local_quad(sq16, 0);
  REQUIRE(std::holds_alternative<PathQuad>(via_local));
  CHECK(std::get<PathQuad>(via_local) == PathQuad{2, 1, 15, 14});
}

TEST_CASE("probe audit counts within a scope only") {
  ProbeAudit audit;
  {
    ProbeAuditScope scope(audit);
    (void)claim1_probe(cycle_graph(5), 0, 1, 4, Coloring(3, {0, 1, 2, 1, 2}));
    (void)claim1_probe(cycle_graph(5), 0, 1, 4, Coloring(3, {0, 1, 2, 1, 3}));
  }
  (void)claim1_probe(cycle_graph(5), 0, 1, 4, Coloring(3, {0, 1, 2, 1, 2}));
  CHECK(audit.claim1_probes == 2);
  CHECK(audit.holes == 1);
  CHECK(audit.bad_holes == 0);
  CHECK(audit.inconsistent == 1);
  CHECK(audit.chains == 2);
  CHECK(audit.swap_failures == 0);
}

TEST_CASE("claim1 probes harvested from critical cores of small χ = Δ graphs") {
  std::size_t holes = 0;
  std::size_t adjacent = 0;
  std::size_t inconsistent = 0;
  std::size_t bad = 0;
  const std::size_t probes = harvest_claim1_probes(8, 10000, [&](const HarvestedProbe& p) {
    if (const auto* hole = std::get_if<HoleFound>(&p.outcome)) {
      ++holes;
      const auto& cycle = hole->hole.cycle;
      const bool shape = cycle.size() >= 5 && cycle.size() % 2 == 1 &&
                         induces_cycle(p.h, VertexSet::of(cycle));
      bool high = true;
      for (Vertex v : cycle) high = high && p.h.degree(v) >= max_degree(p.h) - 1;
      if (!shape || !high || !verify_certificate(p.h, hole->hole).accepted) ++bad;
      // The closing vertex is x and the path runs from y to z.
      if (cycle.front() != p.y || cycle[cycle.size() - 2] != p.z || cycle.back() != p.x) ++bad;
    } else if (std::holds_alternative<Adjacent>(p.outcome)) {
      ++adjacent;
      if (!p.h.adjacent(p.y, p.z)) ++bad;
    } else {
      ++inconsistent;
    }
  });
  MESSAGE("probes " << probes << ", holes " << holes << ", adjacent " << adjacent);
  CHECK(probes >= 10000);
  CHECK(holes > 0);
  CHECK(bad == 0);
  CHECK(inconsistent == 0);
}
