#include <algorithm>
#include <iostream>
#include <queue>

#include "holecert/oracle.hpp"
#include "holecert/witness.hpp"

namespace holecert {

namespace detail {
void record_oracle_fallback();
}

namespace {

WitnessReport checked(const Graph& g, Certificate cert, WitnessRoute route) {
  const Verdict verdict = verify_certificate(g, cert);
  if (!verdict) {
    throw std::logic_error("find_witness: " + std::string(route_name(route)) +
                           " produced a rejected certificate: " + verdict.detail);
  }
  return {std::move(cert), route};
}

std::string describe(const Graph& g) {
  return "n = " + std::to_string(g.order()) + ", edges = " + std::to_string(g.edge_count());
}

WitnessReport high_degree_witness(const Graph& g, int delta) {
  const InducedSubgraph critical = induced_subgraph(g, extract_vertex_critical(g));
  const Graph& h = critical.graph;
  const int h_delta = max_degree(h);

  if (h_delta == delta - 1) {
    // χ(H) = Δ(H) + 1 with Δ(H) >= 3: H is complete.
    if (h.order() != delta || h.edge_count() != delta * (delta - 1) / 2) {
      throw ContractError("critical subgraph has χ = Δ(H) + 1 but is not complete (" +
                          describe(h) + ")");
    }
    return checked(g, CliqueWitness{critical.to_old}, WitnessRoute::kBrooksClique);
  }

  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) < delta - 1) {
      throw ContractError("critical subgraph has a vertex of degree " +
                          std::to_string(h.degree(v)) + " < Δ - 1");
    }
    if (h.degree(v) == delta - 1) {
      return checked(g, map_certificate(degree_deficient_probe(h, v), critical.to_old),
                     WitnessRoute::kDegreeDeficient);
    }
  }

  // H is Δ-regular, hence a whole component: H = G.
  if (h.order() != g.order()) {
    throw ContractError("regular critical subgraph is a proper subgraph of a connected graph");
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    QuadOutcome quad = local_quad(g, v);
    if (auto* cert = std::get_if<Certificate>(&quad)) {
      return checked(g, std::move(*cert), WitnessRoute::kNeighborhoodSweep);
    }
    if (auto* bad = std::get_if<Inconsistent>(&quad)) {
      throw ContractError("local structure probe at vertex " + std::to_string(v) + ": " +
                          bad->reason);
    }
  }

  if (delta >= 5) {
    detail::record_oracle_fallback();
    std::cerr << "holecert: WARNING: local probes found no certificate with Δ = " << delta << " ("
              << describe(g) << "); falling back to brute force\n";
    auto cert = oracle_witness(g);
    if (!cert) throw ContractError("no certificate exists for a graph with Δ = " + std::to_string(delta));
    return checked(g, std::move(*cert), WitnessRoute::kOracleFallback);
  }

  TraceOutcome trace = trace_squared_cycle(g);
  if (auto* cert = std::get_if<Certificate>(&trace)) {
    return checked(g, std::move(*cert), WitnessRoute::kNeighborhoodSweep);
  }
  if (auto* bad = std::get_if<Inconsistent>(&trace)) {
    throw ContractError("squared-cycle trace: " + bad->reason);
  }
  const auto& labeling = std::get<SquaredCycleLabeling>(trace);
  const int n = labeling.n;
  if (n == 7) {
    auto pos = is_c7_complement(g);
    if (!pos) throw std::logic_error("squared 7-cycle not recognised as the exceptional graph");
    return checked(g, ExceptionalC7Complement{*pos}, WitnessRoute::kExceptional);
  }
  if (n % 3 == 0) {
    throw ContractError("graph is a squared " + std::to_string(n) +
                        "-cycle, which is 3-colourable");
  }
  std::vector<Vertex> at(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) at[labeling.position[v]] = v;
  std::vector<Vertex> cycle;
  for (Vertex p : squared_cycle_hole(n)) cycle.push_back(at[p]);
  return checked(g, HighOddHoleWitness{cycle}, WitnessRoute::kSquaredCycleHole);
}

}  // namespace

std::string_view route_name(WitnessRoute route) {
  switch (route) {
    case WitnessRoute::kEdge:
      return "edge";
    case WitnessRoute::kTriangle:
      return "triangle";
    case WitnessRoute::kShortestOddCycle:
      return "shortest-odd-cycle";
    case WitnessRoute::kBrooksClique:
      return "brooks-clique";
    case WitnessRoute::kDegreeDeficient:
      return "degree-deficient-probe";
    case WitnessRoute::kNeighborhoodSweep:
      return "neighbourhood-sweep";
    case WitnessRoute::kSquaredCycleHole:
      return "squared-cycle-hole";
    case WitnessRoute::kExceptional:
      return "exceptional";
    case WitnessRoute::kOracleFallback:
      return "oracle-fallback";
  }
  return "unknown";
}

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  std::optional<std::vector<Vertex>> best;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      if (best && 2 * dist[u] + 1 >= static_cast<int>(best->size())) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (dist[w] == dist[u] && u < w) {
          // Two equal-depth tree paths joined by an edge: odd closed walk.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          while (left.back() != root) left.push_back(parent[left.back()]);
          while (right.back() != root) right.push_back(parent[right.back()]);
          right.pop_back();
          std::vector<Vertex> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          // Shared tree prefixes mean a shorter odd cycle exists elsewhere.
          if (VertexSet::of(cycle).size() != static_cast<int>(cycle.size())) continue;
          if (!best || cycle.size() < best->size()) best = std::move(cycle);
        }
      }
    }
  }
  return best;
}

WitnessReport find_witness_report(const Graph& g) {
  if (g.order() == 0) throw ContractError("find_witness: empty graph");
  if (!is_connected(g)) throw ContractError("find_witness: graph is disconnected (" + describe(g) + ")");
  const int delta = max_degree(g);
  if (delta <= 1) {
    throw ContractError("find_witness: maximum degree " + std::to_string(delta) +
                        " never equals the chromatic number of a connected graph");
  }
  const int chi = chromatic_number(g);
  if (chi != delta) {
    throw ContractError("find_witness: chromatic number " + std::to_string(chi) +
                        " differs from maximum degree " + std::to_string(delta));
  }

  if (delta == 2) {
    const auto edges = g.edges();
    return checked(g, CliqueWitness{{edges.front().first, edges.front().second}},
                   WitnessRoute::kEdge);
  }
  if (delta == 3) {
    if (auto triangle = find_clique(g, 3)) {
      return checked(g, CliqueWitness{*triangle}, WitnessRoute::kTriangle);
    }
    auto cycle = shortest_odd_cycle(g);
    if (!cycle) throw std::logic_error("3-chromatic graph without an odd cycle");
    return checked(g, HighOddHoleWitness{*cycle}, WitnessRoute::kShortestOddCycle);
  }
  return high_degree_witness(g, delta);
}

Certificate find_witness(const Graph& g) { return find_witness_report(g).certificate; }

WitnessReport brooks_witness(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw ContractError("brooks_witness: need a connected graph with an edge");
  }
  const int delta = max_degree(g);
  if (chromatic_number(g) != delta + 1) {
    throw ContractError("brooks_witness: chromatic number is not maximum degree + 1");
  }
  if (g.edge_count() == g.order() * (g.order() - 1) / 2) {
    return checked(g, CliqueWitness{g.vertices().to_vector()}, WitnessRoute::kBrooksClique);
  }
  // Otherwise an odd cycle, where Δ = 2 and any edge is a K_2.
  if (delta != 2 || min_degree(g) != 2) throw std::logic_error("Brooks' theorem violated");
  const auto edges = g.edges();
  return checked(g, CliqueWitness{{edges.front().first, edges.front().second}},
                 WitnessRoute::kBrooksClique);
}

}  // namespace holecert
