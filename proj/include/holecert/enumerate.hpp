#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert {

/// Canonical labelling by individualisation-refinement. Isomorphic graphs
/// get identical codes; `labeling[i]` is the vertex placed at canonical position i.
struct CanonicalForm {
  std::vector<Vertex> labeling;
  /// Upper-triangle adjacency bits in canonical order, packed MSB-first.
  std::vector<std::uint64_t> code;
};

/// When `first` is given it is fixed at canonical position 0, so two vertices
/// lie in the same automorphism orbit iff their individualised codes match.
CanonicalForm canonical_form(const Graph& g, Vertex first = -1);

/// The graph relabelled so vertex labeling[i] becomes i.
Graph canonical_graph(const Graph& g, const CanonicalForm& form);

inline constexpr int kMaxGeneratedOrder = 9;

/// Streams one representative of every isomorphism class of connected graphs
/// on n vertices (1 <= n <= 9), depth-first by canonical augmentation: each
/// child adds a vertex and is kept only if that vertex is, up to automorphism,
/// the canonically chosen non-cut vertex.
void generate_connected_graphs(int n, const std::function<void(const Graph&)>& emit);

}  // namespace holecert
