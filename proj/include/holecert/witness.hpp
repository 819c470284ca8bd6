#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "holecert/certificate.hpp"
#include "holecert/coloring.hpp"
#include "holecert/graph.hpp"

namespace holecert {

/// The input violates a precondition of the search (disconnected, χ != Δ,
/// malformed probe arguments, ...). Carries a diagnostic trace.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Probe outcomes

struct Adjacent {
  Vertex u = 0;
  Vertex w = 0;
};
struct HoleFound {
  HighOddHoleWitness hole;
};
struct CliqueFound {
  CliqueWitness clique;
};
/// Only reachable when the probed instance is not a vertex-critical χ = Δ graph.
struct Inconsistent {
  std::string reason;
};

using ProbeOutcome = std::variant<Adjacent, HoleFound, CliqueFound, Inconsistent>;

/// Counters collected from every probe run on the current thread while a
/// ProbeAuditScope is active.
struct ProbeAudit {
  std::size_t claim1_probes = 0;
  std::size_t holes = 0;
  /// Hole outcomes that failed verification in the probed graph.
  std::size_t bad_holes = 0;
  std::size_t inconsistent = 0;
  /// Neighbourhood splits that had to be read off the adjacency structure
  /// because the colouring route was unavailable.
  std::size_t structural_splits = 0;
  std::size_t chains = 0;
  std::size_t swaps_checked = 0;
  std::size_t swap_failures = 0;
  std::size_t oracle_fallbacks = 0;

  ProbeAudit& operator+=(const ProbeAudit& other);
};

class ProbeAuditScope {
 public:
  explicit ProbeAuditScope(ProbeAudit& audit);
  ~ProbeAuditScope();
  ProbeAuditScope(const ProbeAuditScope&) = delete;
  ProbeAuditScope& operator=(const ProbeAuditScope&) = delete;

 private:
  ProbeAudit* previous_;
};

// ---------------------------------------------------------------------------
// Local structure

/// Partition of N(center) into an independent pair `a` and a clique `b`
/// such that every vertex of `b` sees at least one vertex of `a`.
struct NeighborhoodSplit {
  enum class Source { kColoring, kStructure };

  Vertex center = 0;
  std::array<Vertex, 2> a{};
  std::vector<Vertex> b;
  Source source = Source::kColoring;
};

/// Four neighbours of a centre inducing exactly the path a1 - b1 - b2 - a2.
struct PathQuad {
  Vertex a1 = 0;
  Vertex b1 = 0;
  Vertex b2 = 0;
  Vertex a2 = 0;
  bool operator==(const PathQuad&) const = default;
};

/// position[v] places v on an n-cycle whose square is the graph.
struct SquaredCycleLabeling {
  int n = 0;
  std::vector<int> position;
};

using SplitOutcome = std::variant<NeighborhoodSplit, Certificate, Inconsistent>;
using CountOutcome = std::variant<int, Certificate, Inconsistent>;
using QuadOutcome = std::variant<PathQuad, Certificate, Inconsistent>;
using TraceOutcome = std::variant<SquaredCycleLabeling, Certificate, Inconsistent>;

/// x is the single uncoloured vertex of phi; y, z are neighbours of x whose
/// colours are distinct and appear on no other neighbour of x. Either y ~ z,
/// or the Kempe chain from y reaches z and the shortest chain path closes an
/// odd hole through x, or (invalid instance) the chain misses z.
ProbeOutcome claim1_probe(const Graph& h, Vertex x, Vertex y, Vertex z, const Coloring& phi);

/// For a vertex-critical h with χ(h) = Δ(h) and d(v) = Δ - 1: every
/// neighbour pair is probed; all adjacent means N[v] is a Δ-clique.
Certificate degree_deficient_probe(const Graph& h, Vertex v);

/// Requires g Δ-regular with Δ >= 4. Uses a (Δ-1)-colouring of g - v; when
/// that route is unavailable (g is not a critical χ = Δ graph) the split is
/// searched for directly in the adjacency structure.
SplitOutcome neighborhood_split(const Graph& g, Vertex v);

/// |N(a) ∩ B|, or the clique certificate when a (or its partner) sees all of B.
CountOutcome claim4_check(const Graph& g, const NeighborhoodSplit& split, Vertex a);

QuadOutcome path_quad(const Graph& g, const NeighborhoodSplit& split);

/// neighborhood_split, claim4_check on both A-vertices, then path_quad.
QuadOutcome local_quad(const Graph& g, Vertex v);

/// Grows a squared-cycle labelling two vertices at a time from the path
/// quad at vertex 0. Requires g connected and 4-regular.
TraceOutcome trace_squared_cycle(const Graph& g);

/// Positions (vertex ids of cycle_power(n, 2)) of a high odd hole.
/// n = 3k + 1, k >= 3: start at 1, alternate distance-2 / distance-1 steps
/// (k - 3 of each), then five distance-2 steps home; length 2k - 1.
/// n = 3k + 2, n >= 8: odd length l with n/2 <= l <= 2n/3, using 2l - n unit
/// steps and n - l double steps, no two unit steps cyclically adjacent.
/// Throws std::invalid_argument for n ≡ 0 (mod 3), n = 7 and n < 8.
std::vector<Vertex> squared_cycle_hole(int n);

/// Colours p with (p mod 3) + 1 on cycle_power(n, 2); n ≡ 0 (mod 3), n >= 6.
Coloring sequence_three_coloring(int n);

/// A seeded three-colouring of three consecutive positions, propagated
/// around cycle_power(n, 2) where every further colour is forced by a
/// triangle, ending in a monochromatic edge.
struct ForcedColoringConflict {
  int n = 0;
  /// Deleted vertex (n ≡ 2 mod 3), or -1 when the whole graph is propagated.
  Vertex removed = -1;
  /// Three seeds followed by every forced vertex, in propagation order.
  std::vector<Vertex> order;
  Coloring coloring;
  Edge conflict;
  Color color = kUncolored;
};

ForcedColoringConflict forced_coloring_conflict(int n);

/// How find_witness reached its certificate.
enum class WitnessRoute {
  kEdge,
  kTriangle,
  kShortestOddCycle,
  kBrooksClique,
  kDegreeDeficient,
  kNeighborhoodSweep,
  kSquaredCycleHole,
  kExceptional,
  kOracleFallback,
};

std::string_view route_name(WitnessRoute route);

struct WitnessReport {
  Certificate certificate;
  WitnessRoute route = WitnessRoute::kEdge;
};

/// Constructs a verified clique / high odd hole / exceptional-graph
/// certificate for a connected g with χ(g) = Δ(g). Throws ContractError otherwise.
WitnessReport find_witness_report(const Graph& g);
Certificate find_witness(const Graph& g);

/// For connected g with χ(g) = Δ(g) + 1, which by Brooks' theorem is complete
/// or an odd cycle: the whole vertex set, or one edge of the cycle.
WitnessReport brooks_witness(const Graph& g);

/// Shortest odd cycle (chordless by minimality), if g is not bipartite.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);

}  // namespace holecert
