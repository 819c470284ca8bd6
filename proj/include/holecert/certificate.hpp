#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert {

/// At least Δ(G) pairwise-adjacent vertices (Δ + 1 only in a complete graph).
struct CliqueWitness {
  std::vector<Vertex> vertices;
  bool operator==(const CliqueWitness&) const = default;
};

/// Chordless odd cycle of length >= 5, in cyclic order, every vertex of
/// degree >= Δ(G) - 1.
struct HighOddHoleWitness {
  std::vector<Vertex> cycle;
  bool operator==(const HighOddHoleWitness&) const = default;
};

/// Identifies G as the complement of the 7-cycle: position_map[v] is v's
/// place on the 7-cycle whose complement is G, so u ~ w iff the cyclic
/// distance of their positions is 2 or 3.
struct ExceptionalC7Complement {
  std::vector<int> position_map;
  bool operator==(const ExceptionalC7Complement&) const = default;
};

using Certificate = std::variant<CliqueWitness, HighOddHoleWitness, ExceptionalC7Complement>;

enum class CertificateKind { kClique, kHighOddHole, kC7Complement };

CertificateKind kind_of(const Certificate& cert);
std::string_view kind_name(CertificateKind kind);

/// Rejection reasons, in the order they are checked.
enum class RejectReason {
  kVertexOutOfRange,
  kRepeatedVertex,
  kSize,
  kAdjacency,
  kChord,
  kParity,
  kDegreeFloor,
};

std::string_view reason_name(RejectReason reason);

struct Verdict {
  bool accepted = true;
  RejectReason reason = RejectReason::kSize;
  std::string detail;

  static Verdict accept() { return {}; }
  static Verdict reject(RejectReason reason, std::string detail) {
    return {false, reason, std::move(detail)};
  }
  explicit operator bool() const { return accepted; }
};

/// Checks exactly the invariant of the certificate's kind against g, with
/// Δ = max_degree(g). The first violated condition is reported.
Verdict verify_certificate(const Graph& g, const Certificate& cert);

/// Rewrites every vertex id through `to_old` (e.g. from an induced subgraph
/// back to its host).
Certificate map_certificate(const Certificate& cert, const std::vector<Vertex>& to_old);

}  // namespace holecert
