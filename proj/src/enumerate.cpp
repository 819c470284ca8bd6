#include "holecert/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace holecert {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits cells by neighbour counts into each cell until stable. Sub-cells are
// ordered by count, which keeps the result invariant under relabelling.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = VertexSet::of(cells[s]);
      Partition next;
      next.reserve(cells.size() + 4);
      for (Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) keyed.emplace_back((g.neighbors(v) & splitter).size(), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& l, const auto& r) { return l.first < r.first; });
        Cell current{keyed.front().second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(current));
            current.clear();
            changed = true;
          }
          current.push_back(keyed[i].second);
        }
        next.push_back(std::move(current));
      }
      cells = std::move(next);
    }
  }
}

std::vector<std::uint64_t> code_of(const Graph& g, const std::vector<Vertex>& lab) {
  const int n = g.order();
  std::vector<std::uint64_t> code(static_cast<std::size_t>((n * (n - 1) / 2 + 63) / 64), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(lab[i], lab[j])) code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    }
  }
  return code;
}

bool twins(const Graph& g, Vertex u, Vertex w) {
  return g.neighbors(u).without(w) == g.neighbors(w).without(u);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  void search(Partition cells) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      std::vector<Vertex> lab;
      lab.reserve(cells.size());
      for (const Cell& c : cells) lab.push_back(c.front());
      auto code = code_of(g_, lab);
      if (best_.labeling.empty() || code > best_.code) best_ = {std::move(lab), std::move(code)};
      return;
    }
    // Swapping two twins is an automorphism that fixes this partition, so
    // their subtrees carry the same leaves.
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g_, t, v); })) {
        continue;
      }
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (Vertex w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  CanonicalForm result() && { return std::move(best_); }

 private:
  const Graph& g_;
  CanonicalForm best_;
};

VertexSet non_cut_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_connected_on(g, g.vertices().without(v))) out.insert(v);
  }
  return out;
}

Graph add_vertex(const Graph& parent, VertexSet nbrs) {
  const int m = parent.order();
  GraphBuilder b(m + 1);
  for (auto [u, w] : parent.edges()) b.add_edge(u, w);
  for (Vertex u : nbrs) b.add_edge(u, m);
  return std::move(b).build();
}

void grow(const Graph& parent, int target, const std::function<void(const Graph&)>& emit) {
  if (parent.order() == target) {
    emit(parent);
    return;
  }
  const int m = parent.order();
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const Graph child = add_vertex(parent, VertexSet(mask));
    CanonicalForm form = canonical_form(child);

    // Canonical deletion vertex: the non-cut vertex placed last canonically.
    const VertexSet candidates = non_cut_vertices(child);
    Vertex chosen = -1;
    for (auto it = form.labeling.rbegin(); it != form.labeling.rend(); ++it) {
      if (candidates.contains(*it)) {
        chosen = *it;
        break;
      }
    }
    if (chosen != m) {
      if (child.degree(chosen) != child.degree(m)) continue;
      if (canonical_form(child, m).code != canonical_form(child, chosen).code) continue;
    }
    if (!seen.insert(form.code).second) continue;
    grow(canonical_graph(child, form), target, emit);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, Vertex first) {
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  Partition initial;
  if (first >= 0) {
    initial.push_back({first});
    Cell rest;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != first) rest.push_back(v);
    }
    if (!rest.empty()) initial.push_back(std::move(rest));
  } else {
    initial.push_back(g.vertices().to_vector());
  }
  search.search(std::move(initial));
  return std::move(search).result();
}

Graph canonical_graph(const Graph& g, const CanonicalForm& form) {
  std::vector<Vertex> perm(form.labeling.size());
  for (std::size_t i = 0; i < form.labeling.size(); ++i) {
    perm[form.labeling[i]] = static_cast<Vertex>(i);
  }
  return relabel(g, perm);
}

void generate_connected_graphs(int n, const std::function<void(const Graph&)>& emit) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw std::invalid_argument("generate_connected_graphs: n = " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxGeneratedOrder) + "]");
  }
  grow(GraphBuilder(1).build(), n, emit);
}

}  // namespace holecert
