#pragma once

#include <cstddef>
#include <functional>
#include <random>

#include "holecert/coloring.hpp"
#include "holecert/enumerate.hpp"
#include "holecert/witness.hpp"
#include "test_graphs.hpp"

namespace holecert::testing {

/// One Kempe-chain probe: critical subgraph h, uncoloured x, pair y, z.
struct HarvestedProbe {
  Graph h;
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
  Coloring phi;
  ProbeOutcome outcome;
};

/// Runs claim1_probe on the vertex-critical core of every connected χ = Δ
/// graph with at most max_n vertices, once per vertex x and per pair of
/// neighbours of x with unique colours. Passes are repeated on randomly
/// relabelled copies (which changes the seed colourings) until at least
/// `minimum` probes have run. Returns the number of probes.
inline std::size_t harvest_claim1_probes(int max_n, std::size_t minimum,
                                         const std::function<void(const HarvestedProbe&)>& visit) {
  std::vector<Graph> cores;
  for (int n = 2; n <= max_n; ++n) {
    generate_connected_graphs(n, [&](const Graph& g) {
      if (chromatic_number(g) != max_degree(g)) return;
      cores.push_back(induced_subgraph(g, extract_vertex_critical(g)).graph);
    });
  }
  std::mt19937 rng(2024);
  std::size_t probes = 0;
  for (int pass = 0; probes < minimum || pass == 0; ++pass) {
    for (const Graph& core : cores) {
      const Graph h = pass == 0 ? core : relabel(core, random_permutation(core.order(), rng));
      const int chi = chromatic_number(h);
      for (Vertex x = 0; x < h.order(); ++x) {
        const auto phi = find_k_coloring(h, chi - 1, h.vertices().without(x));
        if (!phi) continue;
        std::vector<int> uses(static_cast<std::size_t>(chi), 0);
        for (Vertex w : h.neighbors(x)) ++uses[(*phi)[w]];
        std::vector<Vertex> unique;
        for (Vertex w : h.neighbors(x)) {
          if (uses[(*phi)[w]] == 1) unique.push_back(w);
        }
        for (std::size_t i = 0; i < unique.size(); ++i) {
          for (std::size_t j = i + 1; j < unique.size(); ++j) {
            HarvestedProbe p{h, x, unique[i], unique[j], *phi,
                             claim1_probe(h, x, unique[i], unique[j], *phi)};
            visit(p);
            ++probes;
          }
        }
      }
    }
    if (cores.empty()) break;
  }
  return probes;
}

}  // namespace holecert::testing
