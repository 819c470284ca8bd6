#include "holecert/certificate.hpp"

#include <algorithm>
#include <optional>

namespace holecert {

namespace {

std::string pair_text(Vertex u, Vertex w) {
  return std::to_string(u) + " and " + std::to_string(w);
}

// Range and distinctness, shared by every kind.
std::optional<Verdict> check_vertices(const Graph& g, const std::vector<Vertex>& vs) {
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) {
      return Verdict::reject(RejectReason::kVertexOutOfRange,
                             "vertex " + std::to_string(v) + " out of range");
    }
    if (seen.contains(v)) {
      return Verdict::reject(RejectReason::kRepeatedVertex,
                             "vertex " + std::to_string(v) + " repeated");
    }
    seen.insert(v);
  }
  return std::nullopt;
}

Verdict verify_clique(const Graph& g, const CliqueWitness& w) {
  if (auto bad = check_vertices(g, w.vertices)) return *bad;
  const int delta = max_degree(g);
  // A K_{Δ+1} (the whole of a complete component) also contains a K_Δ.
  if (static_cast<int>(w.vertices.size()) < delta) {
    return Verdict::reject(RejectReason::kSize, "clique has " + std::to_string(w.vertices.size()) +
                                                    " vertices, maximum degree is " +
                                                    std::to_string(delta));
  }
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
      if (!g.adjacent(w.vertices[i], w.vertices[j])) {
        return Verdict::reject(RejectReason::kAdjacency,
                               "adjacency violated: " + pair_text(w.vertices[i], w.vertices[j]) +
                                   " are not adjacent");
      }
    }
  }
  return Verdict::accept();
}

Verdict verify_hole(const Graph& g, const HighOddHoleWitness& w) {
  const auto& cyc = w.cycle;
  if (auto bad = check_vertices(g, cyc)) return *bad;
  const std::size_t len = cyc.size();
  if (len < 5) {
    return Verdict::reject(RejectReason::kSize,
                           "cycle length " + std::to_string(len) + " is below 5");
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex u = cyc[i];
    const Vertex w2 = cyc[(i + 1) % len];
    if (!g.adjacent(u, w2)) {
      return Verdict::reject(RejectReason::kAdjacency,
                             "adjacency violated: consecutive " + pair_text(u, w2) +
                                 " are not adjacent");
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(cyc[i], cyc[j])) {
        return Verdict::reject(RejectReason::kChord,
                               "chord present between " + pair_text(cyc[i], cyc[j]));
      }
    }
  }
  if (len % 2 == 0) {
    return Verdict::reject(RejectReason::kParity,
                           "cycle length " + std::to_string(len) + " is even");
  }
  const int floor = max_degree(g) - 1;
  for (Vertex v : cyc) {
    if (g.degree(v) < floor) {
      return Verdict::reject(RejectReason::kDegreeFloor,
                             "vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(g.degree(v)) + " below " + std::to_string(floor));
    }
  }
  return Verdict::accept();
}

Verdict verify_c7(const Graph& g, const ExceptionalC7Complement& w) {
  const auto& pos = w.position_map;
  if (g.order() != 7 || pos.size() != 7) {
    return Verdict::reject(RejectReason::kSize, "exceptional graph must have 7 vertices, got " +
                                                    std::to_string(g.order()) + " with " +
                                                    std::to_string(pos.size()) + " positions");
  }
  std::vector<bool> used(7, false);
  for (int p : pos) {
    if (p < 0 || p >= 7) {
      return Verdict::reject(RejectReason::kVertexOutOfRange,
                             "position " + std::to_string(p) + " out of range");
    }
    if (used[p]) {
      return Verdict::reject(RejectReason::kRepeatedVertex,
                             "position " + std::to_string(p) + " repeated");
    }
    used[p] = true;
  }
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex w2 = u + 1; w2 < 7; ++w2) {
      const int d = cyclic_distance(pos[u], pos[w2], 7);
      const bool expect = d == 2 || d == 3;
      if (g.adjacent(u, w2) != expect) {
        return Verdict::reject(RejectReason::kAdjacency,
                               "adjacency violated: " + pair_text(u, w2) + " at position distance " +
                                   std::to_string(d));
      }
    }
  }
  return Verdict::accept();
}

}  // namespace

CertificateKind kind_of(const Certificate& cert) {
  return static_cast<CertificateKind>(cert.index());
}

std::string_view kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kClique:
      return "clique";
    case CertificateKind::kHighOddHole:
      return "high_odd_hole";
    case CertificateKind::kC7Complement:
      return "c7_complement";
  }
  return "unknown";
}

std::string_view reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::kVertexOutOfRange:
      return "vertex out of range";
    case RejectReason::kRepeatedVertex:
      return "repeated vertex";
    case RejectReason::kSize:
      return "size";
    case RejectReason::kAdjacency:
      return "adjacency violated";
    case RejectReason::kChord:
      return "chord present";
    case RejectReason::kParity:
      return "parity";
    case RejectReason::kDegreeFloor:
      return "degree floor";
  }
  return "unknown";
}

Verdict verify_certificate(const Graph& g, const Certificate& cert) {
  if (g.order() == 0) return Verdict::reject(RejectReason::kSize, "empty graph");
  return std::visit(
      [&](const auto& w) -> Verdict {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, CliqueWitness>) {
          return verify_clique(g, w);
        } else if constexpr (std::is_same_v<T, HighOddHoleWitness>) {
          return verify_hole(g, w);
        } else {
          return verify_c7(g, w);
        }
      },
      cert);
}

Certificate map_certificate(const Certificate& cert, const std::vector<Vertex>& to_old) {
  auto remap = [&](std::vector<Vertex> vs) {
    for (Vertex& v : vs) v = to_old.at(static_cast<std::size_t>(v));
    return vs;
  };
  return std::visit(
      [&](const auto& w) -> Certificate {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, CliqueWitness>) {
          return CliqueWitness{remap(w.vertices)};
        } else if constexpr (std::is_same_v<T, HighOddHoleWitness>) {
          return HighOddHoleWitness{remap(w.cycle)};
        } else {
          // Positions are indexed by vertex; re-index into the host.
          std::size_t host = 0;
          for (Vertex v : to_old) host = std::max(host, static_cast<std::size_t>(v) + 1);
          std::vector<int> pos(host, -1);
          for (std::size_t i = 0; i < w.position_map.size(); ++i) {
            pos.at(static_cast<std::size_t>(to_old.at(i))) = w.position_map[i];
          }
          return ExceptionalC7Complement{pos};
        }
      },
      cert);
}

}  // namespace holecert
