#include "holecert/oracle.hpp"

namespace holecert {

namespace {

bool extend_clique(const Graph& g, std::vector<Vertex>& chosen, VertexSet candidates, int k) {
  if (static_cast<int>(chosen.size()) == k) return true;
  if (static_cast<int>(chosen.size()) + candidates.size() < k) return false;
  for (Vertex v : candidates) {
    chosen.push_back(v);
    // Only larger ids, so every clique is built in increasing order once.
    const VertexSet next = (candidates & g.neighbors(v)) - VertexSet::range(v + 1);
    if (extend_clique(g, chosen, next, k)) return true;
    chosen.pop_back();
  }
  return false;
}

class HoleSearch {
 public:
  HoleSearch(const Graph& g, VertexSet allowed) : g_(g), allowed_(allowed) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex anchor : allowed_) {
      const VertexSet above = allowed_ - VertexSet::range(anchor + 1);
      for (Vertex second : g_.neighbors(anchor) & above) {
        path_ = {anchor, second};
        on_path_ = VertexSet{anchor, second};
        if (extend(above)) return path_;
      }
    }
    return std::nullopt;
  }

 private:
  bool extend(VertexSet above) {
    const Vertex anchor = path_.front();
    const Vertex last = path_.back();
    const VertexSet interior = on_path_.without(anchor).without(last);
    for (Vertex w : (g_.neighbors(last) & above) - on_path_) {
      if (!(g_.neighbors(w) & interior).empty()) continue;
      if (g_.adjacent(w, anchor)) {
        // Closing here; anything longer through w would carry the chord w-anchor.
        if (path_.size() >= 4 && path_.size() % 2 == 0 && path_[1] < w) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      on_path_.insert(w);
      if (extend(above)) return true;
      path_.pop_back();
      on_path_.erase(w);
    }
    return false;
  }

  const Graph& g_;
  VertexSet allowed_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("find_clique requires k >= 1");
  std::vector<Vertex> chosen;
  if (extend_clique(g, chosen, g.vertices(), k)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_high_odd_hole(const Graph& g) {
  if (g.order() < 5) return std::nullopt;
  const int floor = max_degree(g) - 1;
  VertexSet allowed;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= floor) allowed.insert(v);
  }
  return HoleSearch(g, allowed).run();
}

std::optional<std::vector<int>> is_c7_complement(const Graph& g) {
  if (g.order() != 7) return std::nullopt;
  for (Vertex v = 0; v < 7; ++v) {
    if (g.degree(v) != 4) return std::nullopt;
  }
  // The complement is 2-regular; it must be one 7-cycle.
  const Graph co = complement(g);
  std::vector<int> position(7, -1);
  Vertex prev = -1;
  Vertex cur = 0;
  for (int p = 0; p < 7; ++p) {
    if (position[cur] != -1) return std::nullopt;
    position[cur] = p;
    const VertexSet step = co.neighbors(cur).without(prev < 0 ? cur : prev);
    const Vertex next = step.first();
    prev = cur;
    cur = next;
  }
  if (cur != 0) return std::nullopt;
  return position;
}

std::optional<Certificate> oracle_witness(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int delta = max_degree(g);
  if (delta >= 1) {
    if (auto clique = find_clique(g, delta)) return CliqueWitness{*clique};
  }
  if (auto hole = find_high_odd_hole(g)) return HighOddHoleWitness{*hole};
  if (auto pos = is_c7_complement(g)) return ExceptionalC7Complement{*pos};
  return std::nullopt;
}

bool AvailableKinds::has(CertificateKind kind) const {
  switch (kind) {
    case CertificateKind::kClique:
      return clique;
    case CertificateKind::kHighOddHole:
      return high_odd_hole;
    case CertificateKind::kC7Complement:
      return c7_complement;
  }
  return false;
}

AvailableKinds available_kinds(const Graph& g) {
  AvailableKinds out;
  if (g.order() == 0) return out;
  const int delta = max_degree(g);
  out.clique = delta >= 1 && find_clique(g, delta).has_value();
  out.high_odd_hole = find_high_odd_hole(g).has_value();
  out.c7_complement = is_c7_complement(g).has_value();
  return out;
}

}  // namespace holecert
