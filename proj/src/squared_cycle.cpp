#include <string>

#include "holecert/witness.hpp"

namespace holecert {

TraceOutcome trace_squared_cycle(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g) || max_degree(g) != 4 || min_degree(g) != 4) {
    throw ContractError("trace_squared_cycle: graph must be connected and 4-regular");
  }

  QuadOutcome seed = local_quad(g, 0);
  if (auto* cert = std::get_if<Certificate>(&seed)) return *cert;
  if (auto* bad = std::get_if<Inconsistent>(&seed)) return *bad;
  const PathQuad& q = std::get<PathQuad>(seed);

  // Positions 0..4 hold a2, b2, v, b1, a1; each step labels the two
  // positions after the current centre.
  std::vector<Vertex> order{q.a2, q.b2, 0, q.b1, q.a1};
  VertexSet labelled = VertexSet::of(order);
  for (std::size_t centre = 4;; centre += 2) {
    const Vertex c = order[centre];
    QuadOutcome step = local_quad(g, c);
    if (auto* cert = std::get_if<Certificate>(&step)) return *cert;
    if (auto* bad = std::get_if<Inconsistent>(&step)) return *bad;
    const PathQuad& sq = std::get<PathQuad>(step);

    const Vertex back2 = order[centre - 2];
    const Vertex back1 = order[centre - 1];
    Vertex x = -1;
    Vertex y = -1;
    if (sq.a1 == back2 && sq.b1 == back1) {
      x = sq.b2;
      y = sq.a2;
    } else if (sq.a2 == back2 && sq.b2 == back1) {
      x = sq.b1;
      y = sq.a1;
    } else {
      return Inconsistent{"path quad at " + std::to_string(c) +
                          " does not continue the labelled squared cycle"};
    }

    if (!labelled.contains(x) && !labelled.contains(y)) {
      order.push_back(x);
      order.push_back(y);
      labelled.insert(x);
      labelled.insert(y);
      continue;
    }
    if (!labelled.contains(x) && y == order[0]) {
      order.push_back(x);
      break;
    }
    if (x == order[0] && y == order[1]) break;
    return Inconsistent{"squared cycle closes at " + std::to_string(c) +
                        " onto vertices other than its start"};
  }

  const int len = static_cast<int>(order.size());
  if (len != n) {
    return Inconsistent{"traced squared cycle covers " + std::to_string(len) + " of " +
                        std::to_string(n) + " vertices"};
  }
  if (n < 7) return Inconsistent{"squared cycles need at least 7 vertices"};
  SquaredCycleLabeling labeling{n, std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int p = 0; p < n; ++p) labeling.position[order[p]] = p;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      const bool expect = cyclic_distance(labeling.position[u], labeling.position[w], n) <= 2;
      if (g.adjacent(u, w) != expect) {
        return Inconsistent{"labelling disagrees with adjacency of " + std::to_string(u) + " and " +
                            std::to_string(w)};
      }
    }
  }
  return labeling;
}

std::vector<Vertex> squared_cycle_hole(int n) {
  if (n % 3 == 0) {
    throw std::invalid_argument("squared_cycle_hole: n = " + std::to_string(n) +
                                " is divisible by 3; the squared cycle is 3-colourable");
  }
  if (n == 7) {
    throw std::invalid_argument("squared_cycle_hole: the squared 7-cycle has no odd hole");
  }
  if (n < 8) throw std::invalid_argument("squared_cycle_hole: n must be at least 8");

  std::vector<int> steps;
  int start = 0;
  if (n % 3 == 1) {
    const int k = (n - 1) / 3;
    start = 1;
    for (int i = 0; i < k - 3; ++i) {
      steps.push_back(2);
      steps.push_back(1);
    }
    steps.insert(steps.end(), 5, 2);
  } else {
    int len = (n + 1) / 2;
    if (len % 2 == 0) ++len;
    // 3 * len <= 2n keeps the unit steps no more numerous than the double steps.
    if (3 * len > 2 * n || len < 5) {
      throw std::invalid_argument("squared_cycle_hole: no admissible length for n = " +
                                  std::to_string(n));
    }
    const int units = 2 * len - n;
    const int doubles = n - len;
    steps.insert(steps.end(), static_cast<std::size_t>(doubles - units), 2);
    for (int i = 0; i < units; ++i) {
      steps.push_back(2);
      steps.push_back(1);
    }
  }

  std::vector<Vertex> cycle{start};
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) cycle.push_back((cycle.back() + steps[i]) % n);
  return cycle;
}

Coloring sequence_three_coloring(int n) {
  if (n < 6 || n % 3 != 0) {
    throw std::invalid_argument("sequence_three_coloring: n must be a multiple of 3, at least 6");
  }
  Coloring c(n, 3);
  for (Vertex p = 0; p < n; ++p) c.assign(p, p % 3 + 1);
  return c;
}

ForcedColoringConflict forced_coloring_conflict(int n) {
  if (n % 3 == 0) {
    throw std::invalid_argument("forced_coloring_conflict: n = " + std::to_string(n) +
                                " is divisible by 3; the squared cycle is 3-colourable");
  }
  if (n < 7) throw std::invalid_argument("forced_coloring_conflict: n must be at least 7");

  const Graph g = cycle_power(n, 2);
  ForcedColoringConflict out;
  out.n = n;
  // For n ≡ 2 the graph minus a vertex already fails; for n ≡ 1 that graph is
  // 3-colourable and the whole squared cycle is propagated instead.
  out.removed = n % 3 == 2 ? 0 : -1;
  const Vertex first = out.removed + 1;
  out.coloring = Coloring(n, 3);
  for (Vertex p = first; p < n; ++p) {
    out.order.push_back(p);
    const int i = p - first;
    if (i < 3) {
      out.coloring.assign(p, i + 1);
    } else {
      // p closes a triangle with p-1 and p-2; only one colour is left.
      out.coloring.assign(p, 6 - out.coloring[p - 1] - out.coloring[p - 2]);
    }
  }
  for (auto [u, w] : g.edges()) {
    if (u == out.removed || w == out.removed) continue;
    if (out.coloring[u] == out.coloring[w]) {
      out.conflict = {u, w};
      out.color = out.coloring[u];
      return out;
    }
  }
  throw std::logic_error("forced_coloring_conflict: propagation produced no conflict");
}

}  // namespace holecert
