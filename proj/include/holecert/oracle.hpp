#pragma once

#include <optional>
#include <vector>

#include "holecert/certificate.hpp"
#include "holecert/graph.hpp"

namespace holecert {

/// Lexicographically least k-clique (as a sorted vertex list), if any.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, int k);

/// Some chordless odd cycle of length >= 5 whose vertices all have degree at
/// least Δ(g) - 1. Cycles are enumerated with their least vertex as anchor and
/// the second vertex smaller than the last, so each cycle is met once.
std::optional<std::vector<Vertex>> find_high_odd_hole(const Graph& g);

/// Positions along the 7-cycle whose complement is g, when g is that graph.
std::optional<std::vector<int>> is_c7_complement(const Graph& g);

/// Brute-force certificate: clique first, then high odd hole, then the
/// exceptional-graph identification.
std::optional<Certificate> oracle_witness(const Graph& g);

/// Which certificate kinds exist for g, each decided by brute force.
struct AvailableKinds {
  bool clique = false;
  bool high_odd_hole = false;
  bool c7_complement = false;

  bool has(CertificateKind kind) const;
};

AvailableKinds available_kinds(const Graph& g);

}  // namespace holecert
