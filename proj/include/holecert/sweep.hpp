#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holecert/certificate.hpp"
#include "holecert/graph.hpp"
#include "holecert/witness.hpp"

namespace holecert {

enum class SweepMethod { kProof, kOracle, kBoth };

std::string_view method_name(SweepMethod method);
std::optional<SweepMethod> parse_method(std::string_view text);

struct OrderTally {
  int n = 0;
  std::size_t graphs = 0;
  /// Graphs with χ = Δ.
  std::size_t cohort = 0;
  /// Indexed by CertificateKind.
  std::array<std::size_t, 3> proof_kinds{};
  std::array<std::size_t, 3> oracle_kinds{};
  std::size_t exceptional = 0;
  std::size_t verification_failures = 0;
  double seconds = 0.0;
};

struct SweepFailure {
  std::string graph6;
  std::string reason;
};

struct SweepReport {
  SweepMethod method = SweepMethod::kBoth;
  bool generated = true;
  std::vector<OrderTally> orders;
  ProbeAudit audit;
  std::vector<SweepFailure> failures;
  std::vector<std::string> exceptional_graphs;
  int jobs = 1;
  double seconds = 0.0;

  std::size_t verification_failures() const;
  /// Generated sweeps must flag exactly one exceptional graph at n = 7 and
  /// none at any other order.
  bool exceptional_counts_ok() const;
  bool passed() const;
};

struct SweepOptions {
  int min_n = 1;
  int max_n = 8;
  SweepMethod method = SweepMethod::kBoth;
  int jobs = 1;
  /// Graphs are processed and merged in chunks of this many.
  std::size_t chunk = 512;
};

/// Enumerates every connected graph of each order in [min_n, max_n] (max_n <= 9)
/// and certifies each one with χ = Δ. Per-graph results are merged in
/// generation order, so the report does not depend on `jobs` (apart from timings).
/// The sweep stops after the chunk in which the first failure occurs.
SweepReport theorem_sweep(const SweepOptions& options);

/// Same checks over graph6 lines supplied by the caller (blank lines and
/// header lines are skipped).
SweepReport corpus_sweep(const std::vector<std::string>& lines, SweepMethod method, int jobs);

std::string report_text(const SweepReport& report);
std::string report_json(const SweepReport& report);

}  // namespace holecert
