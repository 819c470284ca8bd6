#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holecert/vertex_set.hpp"

namespace holecert {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range [0, order).
///
/// Adjacency rows are single-word bitsets, so neighbourhood intersection and
/// membership are O(1). Values are immutable once built; deleting vertices is
/// done with induced_subgraph().
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex w) const { return adjacency_[u].contains(w); }
  int degree(Vertex v) const { return adjacency_[v].size(); }
  int edge_count() const;

  /// Edges (u, w) with u < w, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adjacency_;
};

/// Incremental construction helper; the only way to obtain a non-empty Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  /// Adds u-w; duplicates are collapsed. Throws on loops or out-of-range ids.
  GraphBuilder& add_edge(Vertex u, Vertex w);
  Graph build() &&;

 private:
  Graph graph_;
};

Graph graph_from_edges(int order, std::span<const Edge> edges);
Graph graph_from_edges(int order, std::initializer_list<Edge> edges);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced by `on` (vacuously true when |on| <= 1).
bool is_connected_on(const Graph& g, VertexSet on);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// new id -> old id, increasing.
  std::vector<Vertex> to_old;
  /// old id -> new id, or -1 when the vertex was dropped.
  std::vector<Vertex> to_new;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

Graph complement(const Graph& g);

/// The d-th power of the n-cycle: i ~ j iff their cyclic distance is in [1, d].
Graph cycle_power(int n, int d);

/// min(|i - j|, n - |i - j|)
int cyclic_distance(int i, int j, int n);

/// Applies `perm` (old id -> new id) to every vertex.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace holecert
