#include <algorithm>
#include <sstream>

#include "holecert/witness.hpp"

namespace holecert {

namespace {

thread_local ProbeAudit* active_audit = nullptr;

template <typename F>
void audit(F&& f) {
  if (active_audit != nullptr) f(*active_audit);
}

Inconsistent inconsistent(std::string reason) {
  audit([](ProbeAudit& a) { ++a.inconsistent; });
  return Inconsistent{std::move(reason)};
}

// Every chain computed by a probe is swapped once to confirm the exchange
// keeps the colouring proper.
void audit_chain(const Graph& g, const Coloring& phi, const KempeChain& chain) {
  audit([&](ProbeAudit& a) {
    ++a.chains;
    ++a.swaps_checked;
    if (!is_proper(g, kempe_swap(phi, chain))) ++a.swap_failures;
  });
}

// Hole outcomes are re-verified in the graph they were built in.
std::variant<HighOddHoleWitness, Inconsistent> checked_hole(const Graph& g,
                                                            std::vector<Vertex> cycle) {
  HighOddHoleWitness hole{std::move(cycle)};
  const Verdict verdict = verify_certificate(g, hole);
  audit([&](ProbeAudit& a) {
    ++a.holes;
    if (!verdict) ++a.bad_holes;
  });
  if (!verdict) return inconsistent("constructed cycle rejected: " + verdict.detail);
  return hole;
}

std::variant<CliqueWitness, Inconsistent> checked_clique(const Graph& g, VertexSet members) {
  CliqueWitness clique{members.to_vector()};
  const Verdict verdict = verify_certificate(g, clique);
  if (!verdict) return inconsistent("constructed clique rejected: " + verdict.detail);
  return clique;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << ']';
  return os.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractError(what);
}

VertexSet set_of(const std::vector<Vertex>& vs) { return VertexSet::of(vs); }

// Splits N(v) using only adjacency: the first independent pair (in
// lexicographic order) leaving a clique that it dominates.
SplitOutcome structural_split(const Graph& g, Vertex v, const std::string& why) {
  audit([](ProbeAudit& a) { ++a.structural_splits; });
  const VertexSet nbrs = g.neighbors(v);
  for (Vertex p : nbrs) {
    for (Vertex q : nbrs - VertexSet::range(p + 1)) {
      if (g.adjacent(p, q)) continue;
      const VertexSet b = nbrs.without(p).without(q);
      bool ok = true;
      for (Vertex x : b) {
        if (!(b.without(x)).is_subset_of(g.neighbors(x)) ||
            (!g.adjacent(x, p) && !g.adjacent(x, q))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return NeighborhoodSplit{v, {p, q}, b.to_vector(), NeighborhoodSplit::Source::kStructure};
      }
    }
  }
  return inconsistent(why + "; no independent pair of N(" + std::to_string(v) +
                      ") leaves a dominated clique");
}

}  // namespace

ProbeAudit& ProbeAudit::operator+=(const ProbeAudit& o) {
  claim1_probes += o.claim1_probes;
  holes += o.holes;
  bad_holes += o.bad_holes;
  inconsistent += o.inconsistent;
  structural_splits += o.structural_splits;
  chains += o.chains;
  swaps_checked += o.swaps_checked;
  swap_failures += o.swap_failures;
  oracle_fallbacks += o.oracle_fallbacks;
  return *this;
}

ProbeAuditScope::ProbeAuditScope(ProbeAudit& audit) : previous_(active_audit) {
  active_audit = &audit;
}

ProbeAuditScope::~ProbeAuditScope() { active_audit = previous_; }

namespace detail {
void record_oracle_fallback() {
  audit([](ProbeAudit& a) { ++a.oracle_fallbacks; });
}
}  // namespace detail

ProbeOutcome claim1_probe(const Graph& h, Vertex x, Vertex y, Vertex z, const Coloring& phi) {
  const int n = h.order();
  require(x >= 0 && x < n && y >= 0 && y < n && z >= 0 && z < n, "claim1_probe: vertex out of range");
  require(phi.order() == n, "claim1_probe: colouring does not match the graph");
  require(y != z, "claim1_probe: y and z must differ");
  require(h.adjacent(x, y) && h.adjacent(x, z), "claim1_probe: y and z must be neighbours of x");
  require(phi.colored_vertices() == h.vertices().without(x),
          "claim1_probe: x must be the only uncoloured vertex");
  require(is_proper(h, phi), "claim1_probe: colouring is not proper");
  require(phi[y] != phi[z], "claim1_probe: y and z share a colour");
  for (Vertex w : h.neighbors(x).without(y).without(z)) {
    require(phi[w] != phi[y] && phi[w] != phi[z],
            "claim1_probe: colour of y or z repeats on neighbour " + std::to_string(w) + " of x");
  }
  audit([](ProbeAudit& a) { ++a.claim1_probes; });

  if (h.adjacent(y, z)) return Adjacent{y, z};

  const KempeChain chain = kempe_chain(h, phi, y, phi[y], phi[z]);
  audit_chain(h, phi, chain);
  if (!chain.members.contains(z)) {
    return inconsistent("Kempe chain from " + std::to_string(y) + " misses " + std::to_string(z) +
                        "; swapping it would extend the colouring to " + std::to_string(x));
  }
  auto path = *shortest_path_in_chain(h, chain, y, VertexSet::single(z));
  path.push_back(x);
  auto hole = checked_hole(h, std::move(path));
  if (auto* bad = std::get_if<Inconsistent>(&hole)) return *bad;
  return HoleFound{std::get<HighOddHoleWitness>(std::move(hole))};
}

Certificate degree_deficient_probe(const Graph& h, Vertex v) {
  require(h.order() > 0 && v >= 0 && v < h.order(), "degree_deficient_probe: vertex out of range");
  const int delta = max_degree(h);
  require(h.degree(v) == delta - 1, "degree_deficient_probe: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(h.degree(v)) +
                                        ", expected " + std::to_string(delta - 1));
  const int chi = chromatic_number(h);
  require(chi == delta, "degree_deficient_probe: chromatic number " + std::to_string(chi) +
                            " differs from maximum degree " + std::to_string(delta));
  const auto phi = find_k_coloring(h, delta - 1, h.vertices().without(v));
  require(phi.has_value(), "degree_deficient_probe: graph minus " + std::to_string(v) +
                               " is not (Δ-1)-colourable, so the graph is not vertex-critical");

  const std::vector<Vertex> nbrs = h.neighbors(v).to_vector();
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      require((*phi)[nbrs[i]] != (*phi)[nbrs[j]],
              "degree_deficient_probe: colouring of the neighbourhood repeats a colour, so it "
              "extends to " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const ProbeOutcome out = claim1_probe(h, v, nbrs[i], nbrs[j], *phi);
      if (const auto* hole = std::get_if<HoleFound>(&out)) return hole->hole;
      if (const auto* bad = std::get_if<Inconsistent>(&out)) {
        throw ContractError("degree_deficient_probe at " + std::to_string(v) + ": " + bad->reason);
      }
    }
  }
  auto clique = checked_clique(h, h.neighbors(v).with(v));
  if (auto* bad = std::get_if<Inconsistent>(&clique)) {
    throw ContractError("degree_deficient_probe: " + bad->reason);
  }
  return std::get<CliqueWitness>(std::move(clique));
}

SplitOutcome neighborhood_split(const Graph& g, Vertex v) {
  require(g.order() > 0 && v >= 0 && v < g.order(), "neighborhood_split: vertex out of range");
  const int delta = max_degree(g);
  require(delta >= 4, "neighborhood_split: maximum degree must be at least 4");
  require(min_degree(g) == delta, "neighborhood_split: graph is not regular");

  const auto phi = find_k_coloring(g, delta - 1, g.vertices().without(v));
  if (!phi) {
    return structural_split(g, v, "graph minus " + std::to_string(v) + " is not " +
                                      std::to_string(delta - 1) + "-colourable");
  }

  // Δ neighbours over Δ-1 colours: exactly one colour repeats, unless a
  // colour is missing and the colouring extends to v.
  std::vector<std::vector<Vertex>> by_color(static_cast<std::size_t>(delta));
  for (Vertex w : g.neighbors(v)) by_color[(*phi)[w]].push_back(w);
  Color repeated = kUncolored;
  for (Color c = 1; c < delta; ++c) {
    if (by_color[c].empty()) {
      return structural_split(g, v, "colour " + std::to_string(c) + " is free at " +
                                        std::to_string(v) + ", so the colouring extends");
    }
    if (by_color[c].size() == 2) repeated = c;
  }

  NeighborhoodSplit split;
  split.center = v;
  split.a = {by_color[repeated][0], by_color[repeated][1]};
  for (Vertex w : g.neighbors(v)) {
    if ((*phi)[w] != repeated) split.b.push_back(w);
  }

  // (b): B is a clique.
  for (std::size_t i = 0; i < split.b.size(); ++i) {
    for (std::size_t j = i + 1; j < split.b.size(); ++j) {
      const ProbeOutcome out = claim1_probe(g, v, split.b[i], split.b[j], *phi);
      if (const auto* hole = std::get_if<HoleFound>(&out)) return Certificate{hole->hole};
      if (const auto* bad = std::get_if<Inconsistent>(&out)) {
        return structural_split(g, v, bad->reason);
      }
    }
  }

  // (c): each B-vertex reaches A inside its (repeated, own) Kempe chain.
  std::vector<Vertex> by_own_color = split.b;
  std::sort(by_own_color.begin(), by_own_color.end(),
            [&](Vertex l, Vertex r) { return (*phi)[l] < (*phi)[r]; });
  const VertexSet a_set{split.a[0], split.a[1]};
  for (Vertex b : by_own_color) {
    const KempeChain chain = kempe_chain(g, *phi, b, repeated, (*phi)[b]);
    audit_chain(g, *phi, chain);
    auto path = shortest_path_in_chain(g, chain, b, a_set);
    if (!path) {
      return structural_split(g, v, "Kempe chain from " + std::to_string(b) +
                                        " misses both A-vertices, so swapping it frees a colour");
    }
    if (path->size() == 2) continue;
    path->push_back(v);
    auto hole = checked_hole(g, std::move(*path));
    if (auto* bad = std::get_if<Inconsistent>(&hole)) return *bad;
    return Certificate{std::get<HighOddHoleWitness>(std::move(hole))};
  }
  return split;
}

CountOutcome claim4_check(const Graph& g, const NeighborhoodSplit& split, Vertex a) {
  require(a == split.a[0] || a == split.a[1], "claim4_check: vertex is not in A");
  const int delta = max_degree(g);
  const VertexSet b = set_of(split.b);
  const int count = (g.neighbors(a) & b).size();
  if (count == delta - 3) return count;
  if (count == delta - 2) {
    auto clique = checked_clique(g, b.with(a).with(split.center));
    if (auto* bad = std::get_if<Inconsistent>(&clique)) return *bad;
    return Certificate{std::get<CliqueWitness>(std::move(clique))};
  }
  if (count == 0) {
    // Every B-vertex sees A, so the partner sees all of B.
    const Vertex partner = a == split.a[0] ? split.a[1] : split.a[0];
    auto clique = checked_clique(g, b.with(partner).with(split.center));
    if (auto* bad = std::get_if<Inconsistent>(&clique)) return *bad;
    return Certificate{std::get<CliqueWitness>(std::move(clique))};
  }
  // Any other count contradicts a valid split at a; look for the certificate there.
  SplitOutcome at_a = neighborhood_split(g, a);
  if (auto* cert = std::get_if<Certificate>(&at_a)) return *cert;
  return inconsistent("|N(" + std::to_string(a) + ") ∩ B| = " + std::to_string(count) +
                      " is neither Δ-3 nor Δ-2 at centre " + std::to_string(split.center));
}

QuadOutcome path_quad(const Graph& g, const NeighborhoodSplit& split) {
  const VertexSet b = set_of(split.b);
  const Vertex a1 = split.a[0];
  const Vertex a2 = split.a[1];
  const VertexSet missed1 = b - g.neighbors(a1);
  const VertexSet missed2 = b - g.neighbors(a2);
  if (missed1.size() != 1 || missed2.size() != 1) {
    return inconsistent("A-vertices miss " + std::to_string(missed1.size()) + " and " +
                        std::to_string(missed2.size()) + " B-vertices; expected exactly one each");
  }
  const PathQuad quad{a1, missed2.first(), missed1.first(), a2};
  if (quad.b1 == quad.b2) {
    return inconsistent("B-vertex " + std::to_string(quad.b1) + " sees neither A-vertex");
  }
  const bool path = g.adjacent(quad.a1, quad.b1) && g.adjacent(quad.b1, quad.b2) &&
                    g.adjacent(quad.b2, quad.a2) && !g.adjacent(quad.a1, quad.b2) &&
                    !g.adjacent(quad.a1, quad.a2) && !g.adjacent(quad.b1, quad.a2);
  if (!path) {
    return inconsistent("neighbours " + vertex_list({quad.a1, quad.b1, quad.b2, quad.a2}) +
                        " of " + std::to_string(split.center) + " do not induce a path");
  }
  return quad;
}

QuadOutcome local_quad(const Graph& g, Vertex v) {
  SplitOutcome split = neighborhood_split(g, v);
  if (auto* cert = std::get_if<Certificate>(&split)) return *cert;
  if (auto* bad = std::get_if<Inconsistent>(&split)) return *bad;
  const auto& s = std::get<NeighborhoodSplit>(split);
  for (Vertex a : s.a) {
    CountOutcome count = claim4_check(g, s, a);
    if (auto* cert = std::get_if<Certificate>(&count)) return *cert;
    if (auto* bad = std::get_if<Inconsistent>(&count)) return *bad;
  }
  return path_quad(g, s);
}

}  // namespace holecert
