#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert {

/// Colours are 1..palette; 0 marks an uncoloured vertex.
using Color = int;
inline constexpr Color kUncolored = 0;

/// Partial vertex colouring over a host graph's vertex range.
///
/// "A colouring of G - x" is represented as a Coloring of G with x left
/// uncoloured, so probes can keep referring to x's neighbours by host id.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int order, int palette);
  /// Throws std::invalid_argument if a colour lies outside [0, palette].
  Coloring(int palette, std::vector<Color> colors);

  int order() const { return static_cast<int>(colors_.size()); }
  int palette() const { return palette_; }
  Color operator[](Vertex v) const { return colors_[v]; }
  bool is_colored(Vertex v) const { return colors_[v] != kUncolored; }
  const std::vector<Color>& colors() const { return colors_; }

  VertexSet colored_vertices() const;
  VertexSet color_class(Color c) const;
  /// Vertices coloured a or b.
  VertexSet color_classes(Color a, Color b) const { return color_class(a) | color_class(b); }

  void assign(Vertex v, Color c);

  bool operator==(const Coloring&) const = default;

 private:
  int palette_ = 0;
  std::vector<Color> colors_;
};

/// True iff no edge inside `on` is monochromatic. Every vertex of `on` must be coloured.
bool is_proper(const Graph& g, const Coloring& c, VertexSet on);

/// Properness on the coloured support only.
bool is_proper(const Graph& g, const Coloring& c);

/// Exact search for a proper colouring of exactly the vertices in `on` with at
/// most k colours. Branches on maximum saturation, ties to the lowest id, so
/// the result is a deterministic function of the labelled input.
std::optional<Coloring> find_k_coloring(const Graph& g, int k, VertexSet on);
std::optional<Coloring> find_k_coloring(const Graph& g, int k);

int chromatic_number(const Graph& g);
/// Chromatic number of the subgraph induced by `on` (0 when `on` is empty).
int chromatic_number_on(const Graph& g, VertexSet on);

/// Maximal connected two-coloured subgraph containing `start`.
struct KempeChain {
  Color a = kUncolored;
  Color b = kUncolored;
  Vertex start = 0;
  VertexSet members;
};

KempeChain kempe_chain(const Graph& g, const Coloring& c, Vertex start, Color a, Color b);

/// Exchanges the chain's two colours on its members.
Coloring kempe_swap(const Coloring& c, const KempeChain& chain);

/// Breadth-first shortest path inside the chain from `from` to the nearest
/// member of `targets`. Among equally short paths the lowest-id predecessor is
/// taken at every layer. Returns the path from `from` to the reached target.
std::optional<std::vector<Vertex>> shortest_path_in_chain(const Graph& g, const KempeChain& chain,
                                                          Vertex from, VertexSet targets);

/// Greedy ascending-order deletion down to a vertex-critical induced subgraph
/// with the same chromatic number. Scanning restarts after every deletion.
VertexSet extract_vertex_critical(const Graph& g);

}  // namespace holecert
