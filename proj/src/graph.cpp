#include "holecert/graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace holecert {

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adjacency_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex w : adjacency_[u] - VertexSet::range(u + 1)) out.emplace_back(u, w);
  }
  return out;
}

GraphBuilder::GraphBuilder(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside [0, " +
                                std::to_string(kMaxOrder) + "]");
  }
  graph_.adjacency_.assign(static_cast<std::size_t>(order), VertexSet{});
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex w) {
  const int n = graph_.order();
  if (u < 0 || u >= n || w < 0 || w >= n) {
    throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(w) + ") with n = " + std::to_string(n));
  }
  if (u == w) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  graph_.adjacency_[u].insert(w);
  graph_.adjacency_[w].insert(u);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph graph_from_edges(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, w] : edges) b.add_edge(u, w);
  return std::move(b).build();
}

Graph graph_from_edges(int order, std::initializer_list<Edge> edges) {
  return graph_from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected_on(const Graph& g, VertexSet on) {
  if (on.size() <= 1) return true;
  VertexSet seen = VertexSet::single(on.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & on) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == on;
}

bool is_connected(const Graph& g) { return is_connected_on(g, g.vertices()); }

int max_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("max_degree of the empty graph");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of the empty graph");
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) {
    throw std::invalid_argument("induced_subgraph: vertex out of range");
  }
  InducedSubgraph out;
  out.to_old = keep.to_vector();
  out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_old.size(); ++i) {
    out.to_new[out.to_old[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder b(keep.size());
  for (Vertex u : keep) {
    for (Vertex w : g.neighbors(u) & keep) {
      if (u < w) b.add_edge(out.to_new[u], out.to_new[w]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = u + 1; w < g.order(); ++w) {
      if (!g.adjacent(u, w)) b.add_edge(u, w);
    }
  }
  return std::move(b).build();
}

int cyclic_distance(int i, int j, int n) {
  const int d = std::abs(i - j) % n;
  return std::min(d, n - d);
}

Graph cycle_power(int n, int d) {
  if (n < 3 || d < 1) {
    throw std::invalid_argument("cycle_power requires n >= 3 and d >= 1 (got n = " +
                                std::to_string(n) + ", d = " + std::to_string(d) + ")");
  }
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (cyclic_distance(i, j, n) <= d) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  GraphBuilder b(g.order());
  for (auto [u, w] : g.edges()) b.add_edge(perm[u], perm[w]);
  return std::move(b).build();
}

}  // namespace holecert
