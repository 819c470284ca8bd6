#include "holecert/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace holecert {

Coloring::Coloring(int order, int palette)
    : palette_(palette), colors_(static_cast<std::size_t>(order), kUncolored) {}

Coloring::Coloring(int palette, std::vector<Color> colors)
    : palette_(palette), colors_(std::move(colors)) {
  for (Color c : colors_) {
    if (c < 0 || c > palette_) {
      throw std::invalid_argument("colour " + std::to_string(c) + " outside palette 1.." +
                                  std::to_string(palette_));
    }
  }
}

VertexSet Coloring::colored_vertices() const {
  VertexSet s;
  for (Vertex v = 0; v < order(); ++v) {
    if (colors_[v] != kUncolored) s.insert(v);
  }
  return s;
}

VertexSet Coloring::color_class(Color c) const {
  VertexSet s;
  for (Vertex v = 0; v < order(); ++v) {
    if (colors_[v] == c) s.insert(v);
  }
  return s;
}

void Coloring::assign(Vertex v, Color c) {
  if (c < 0 || c > palette_) {
    throw std::invalid_argument("colour " + std::to_string(c) + " outside palette 1.." +
                                std::to_string(palette_));
  }
  colors_[v] = c;
}

bool is_proper(const Graph& g, const Coloring& c, VertexSet on) {
  for (Vertex v : on) {
    if (!c.is_colored(v)) {
      throw std::invalid_argument("is_proper: vertex " + std::to_string(v) + " is uncoloured");
    }
  }
  for (Vertex v : on) {
    for (Vertex w : g.neighbors(v) & on) {
      if (w > v && c[v] == c[w]) return false;
    }
  }
  return true;
}

bool is_proper(const Graph& g, const Coloring& c) { return is_proper(g, c, c.colored_vertices()); }

namespace {

// Depth-first DSATUR search. forbidden[v] has bit c set when colour c is
// already on a coloured neighbour of v.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k) : g_(g), k_(k) {}

  bool solve(VertexSet uncolored, const std::array<std::uint64_t, kMaxOrder>& forbidden,
             int used) {
    if (uncolored.empty()) return true;

    Vertex pick = -1;
    int best = -1;
    for (Vertex v : uncolored) {
      const int sat = std::popcount(forbidden[v]);
      if (sat > best) {
        best = sat;
        pick = v;
      }
    }

    const int limit = std::min(k_, used + 1);
    const VertexSet rest = uncolored.without(pick);
    for (Color c = 1; c <= limit; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (forbidden[pick] & bit) continue;
      std::array<std::uint64_t, kMaxOrder> next = forbidden;
      bool dead = false;
      for (Vertex w : g_.neighbors(pick) & rest) {
        next[w] |= bit;
        if (std::popcount(next[w]) >= k_) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      colors_[pick] = c;
      if (solve(rest, next, std::max(used, c))) return true;
    }
    colors_[pick] = kUncolored;
    return false;
  }

  std::vector<Color> colors(int n) const {
    return std::vector<Color>(colors_.begin(), colors_.begin() + n);
  }

 private:
  const Graph& g_;
  int k_;
  std::array<Color, kMaxOrder> colors_{};
};

int greedy_clique_bound(const Graph& g, VertexSet on) {
  int best = on.empty() ? 0 : 1;
  for (Vertex v : on) {
    int size = 1;
    VertexSet cand = g.neighbors(v) & on;
    while (!cand.empty()) {
      const Vertex w = cand.first();
      ++size;
      cand &= g.neighbors(w);
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

std::optional<Coloring> find_k_coloring(const Graph& g, int k, VertexSet on) {
  if (on.empty()) return Coloring(g.order(), std::max(k, 0));
  if (k <= 0) return std::nullopt;
  if (k >= kMaxOrder) k = kMaxOrder - 1;
  ColoringSearch search(g, k);
  std::array<std::uint64_t, kMaxOrder> forbidden{};
  if (!search.solve(on, forbidden, 0)) return std::nullopt;
  return Coloring(k, search.colors(g.order()));
}

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
  return find_k_coloring(g, k, g.vertices());
}

int chromatic_number_on(const Graph& g, VertexSet on) {
  if (on.empty()) return 0;
  for (int k = greedy_clique_bound(g, on);; ++k) {
    if (find_k_coloring(g, k, on)) return k;
  }
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("chromatic_number of the empty graph");
  return chromatic_number_on(g, g.vertices());
}

KempeChain kempe_chain(const Graph& g, const Coloring& c, Vertex start, Color a, Color b) {
  if (a == b) throw std::invalid_argument("kempe_chain: colours must differ");
  if (c[start] != a && c[start] != b) {
    throw std::invalid_argument("kempe_chain: start vertex " + std::to_string(start) +
                                " is not coloured " + std::to_string(a) + " or " +
                                std::to_string(b));
  }
  const VertexSet allowed = c.color_classes(a, b);
  VertexSet members = VertexSet::single(start);
  VertexSet frontier = members;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - members;
    members |= next;
    frontier = next;
  }
  return {a, b, start, members};
}

Coloring kempe_swap(const Coloring& c, const KempeChain& chain) {
  Coloring out = c;
  for (Vertex v : chain.members) {
    if (c[v] == chain.a) {
      out.assign(v, chain.b);
    } else if (c[v] == chain.b) {
      out.assign(v, chain.a);
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> shortest_path_in_chain(const Graph& g, const KempeChain& chain,
                                                          Vertex from, VertexSet targets) {
  if (!chain.members.contains(from)) {
    throw std::invalid_argument("shortest_path_in_chain: start is not a chain member");
  }
  targets &= chain.members;
  if (targets.empty()) return std::nullopt;

  std::vector<VertexSet> layers{VertexSet::single(from)};
  VertexSet seen = layers.back();
  while ((layers.back() & targets).empty()) {
    VertexSet next;
    for (Vertex v : layers.back()) next |= g.neighbors(v);
    next = (next & chain.members) - seen;
    if (next.empty()) return std::nullopt;
    seen |= next;
    layers.push_back(next);
  }

  std::vector<Vertex> path{(layers.back() & targets).first()};
  for (std::size_t d = layers.size() - 1; d > 0; --d) {
    path.push_back((g.neighbors(path.back()) & layers[d - 1]).first());
  }
  std::reverse(path.begin(), path.end());
  return path;
}

VertexSet extract_vertex_critical(const Graph& g) {
  VertexSet keep = g.vertices();
  const int chi = chromatic_number_on(g, keep);
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (Vertex v : keep) {
      if (!find_k_coloring(g, chi - 1, keep.without(v))) {
        keep.erase(v);
        deleted = true;
        break;
      }
    }
  }
  return keep;
}

}  // namespace holecert
