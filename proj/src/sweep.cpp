#include "holecert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "holecert/certificate_io.hpp"
#include "holecert/enumerate.hpp"
#include "holecert/graph6.hpp"
#include "holecert/oracle.hpp"
#include "json.hpp"

namespace holecert {

namespace {

using Clock = std::chrono::steady_clock;

struct StopGeneration {};

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct GraphResult {
  bool cohort = false;
  std::optional<CertificateKind> proof;
  std::optional<CertificateKind> oracle;
  bool exceptional = false;
  std::vector<std::string> failures;
  ProbeAudit audit;
};

GraphResult process(const Graph& g, SweepMethod method) {
  GraphResult r;
  ProbeAuditScope scope(r.audit);
  const std::string line = encode_graph6(g);
  if (decode_graph6(line) != g) r.failures.push_back("graph6 round trip changed the graph");

  if (g.order() < 2) return r;
  r.cohort = chromatic_number(g) == max_degree(g);
  if (!r.cohort) return r;

  if (method != SweepMethod::kOracle) {
    try {
      const Certificate cert = find_witness(g);
      if (const Verdict v = verify_certificate(g, cert); !v) {
        r.failures.push_back("proof certificate rejected: " + v.detail);
      }
      r.proof = kind_of(cert);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("proof search failed: ") + e.what());
    }
  }
  if (method != SweepMethod::kProof) {
    if (auto cert = oracle_witness(g)) {
      if (const Verdict v = verify_certificate(g, *cert); !v) {
        r.failures.push_back("oracle certificate rejected: " + v.detail);
      }
      r.oracle = kind_of(*cert);
    } else {
      r.failures.push_back("oracle found no certificate");
    }
  }
  if (method == SweepMethod::kBoth && r.proof && r.oracle) {
    const AvailableKinds kinds = available_kinds(g);
    const bool proof_exc = *r.proof == CertificateKind::kC7Complement;
    const bool oracle_exc = *r.oracle == CertificateKind::kC7Complement;
    if (!kinds.has(*r.proof) || proof_exc != oracle_exc) {
      r.failures.push_back("methods disagree: proof gave " + std::string(kind_name(*r.proof)) +
                           ", oracle gave " + std::string(kind_name(*r.oracle)));
    }
  }
  r.exceptional = (r.proof && *r.proof == CertificateKind::kC7Complement) ||
                  (r.oracle && *r.oracle == CertificateKind::kC7Complement);
  return r;
}

std::vector<GraphResult> process_chunk(const std::vector<Graph>& chunk, SweepMethod method,
                                       int jobs) {
  std::vector<GraphResult> results(chunk.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(chunk.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < chunk.size(); ++i) results[i] = process(chunk[i], method);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < chunk.size(); i = next++) results[i] = process(chunk[i], method);
    });
  }
  pool.clear();
  return results;
}

class Aggregator {
 public:
  Aggregator(SweepReport& report) : report_(report) {}

  OrderTally& tally_for(int n) {
    auto it = std::find_if(report_.orders.begin(), report_.orders.end(),
                           [&](const OrderTally& t) { return t.n == n; });
    if (it != report_.orders.end()) return *it;
    report_.orders.push_back(OrderTally{n});
    std::sort(report_.orders.begin(), report_.orders.end(),
              [](const OrderTally& l, const OrderTally& r) { return l.n < r.n; });
    return tally_for(n);
  }

  // Returns false once a failure has been recorded.
  bool merge(const std::vector<Graph>& chunk, const std::vector<GraphResult>& results) {
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const GraphResult& r = results[i];
      OrderTally& t = tally_for(chunk[i].order());
      ++t.graphs;
      if (r.cohort) ++t.cohort;
      if (r.proof) ++t.proof_kinds[static_cast<std::size_t>(*r.proof)];
      if (r.oracle) ++t.oracle_kinds[static_cast<std::size_t>(*r.oracle)];
      if (r.exceptional) {
        ++t.exceptional;
        report_.exceptional_graphs.push_back(encode_graph6(chunk[i]));
      }
      report_.audit += r.audit;
      if (!r.failures.empty()) {
        ++t.verification_failures;
        for (const auto& f : r.failures) report_.failures.push_back({encode_graph6(chunk[i]), f});
      }
    }
    return report_.failures.empty();
  }

 private:
  SweepReport& report_;
};

}  // namespace

std::string_view method_name(SweepMethod method) {
  switch (method) {
    case SweepMethod::kProof:
      return "proof";
    case SweepMethod::kOracle:
      return "oracle";
    case SweepMethod::kBoth:
      return "both";
  }
  return "unknown";
}

std::optional<SweepMethod> parse_method(std::string_view text) {
  if (text == "proof") return SweepMethod::kProof;
  if (text == "oracle") return SweepMethod::kOracle;
  if (text == "both") return SweepMethod::kBoth;
  return std::nullopt;
}

std::size_t SweepReport::verification_failures() const {
  std::size_t total = 0;
  for (const auto& t : orders) total += t.verification_failures;
  return total;
}

bool SweepReport::exceptional_counts_ok() const {
  if (!generated) return true;
  return std::all_of(orders.begin(), orders.end(), [](const OrderTally& t) {
    return t.exceptional == (t.n == 7 ? 1U : 0U);
  });
}

bool SweepReport::passed() const {
  return failures.empty() && verification_failures() == 0 && exceptional_counts_ok() &&
         audit.bad_holes == 0 && audit.swap_failures == 0 && audit.inconsistent == 0 &&
         audit.oracle_fallbacks == 0;
}

SweepReport theorem_sweep(const SweepOptions& options) {
  if (options.min_n < 1 || options.max_n > kMaxGeneratedOrder || options.min_n > options.max_n) {
    throw std::invalid_argument("theorem_sweep: orders must satisfy 1 <= min_n <= max_n <= " +
                                std::to_string(kMaxGeneratedOrder));
  }
  SweepReport report;
  report.method = options.method;
  report.jobs = std::max(1, options.jobs);
  Aggregator agg(report);
  const auto start = Clock::now();
  bool ok = true;
  for (int n = options.min_n; n <= options.max_n && ok; ++n) {
    const auto order_start = Clock::now();
    agg.tally_for(n);
    std::vector<Graph> chunk;
    // Chunks are flushed from inside the generator so only one chunk is held at a time.
    auto flush = [&] {
      if (chunk.empty() || !ok) return;
      ok = agg.merge(chunk, process_chunk(chunk, options.method, report.jobs));
      chunk.clear();
    };
    try {
      generate_connected_graphs(n, [&](const Graph& g) {
        chunk.push_back(g);
        if (chunk.size() >= options.chunk) flush();
        if (!ok) throw StopGeneration{};
      });
      flush();
    } catch (const StopGeneration&) {
    }
    agg.tally_for(n).seconds = since(order_start);
  }
  report.seconds = since(start);
  return report;
}

SweepReport corpus_sweep(const std::vector<std::string>& lines, SweepMethod method, int jobs) {
  SweepReport report;
  report.method = method;
  report.generated = false;
  report.jobs = std::max(1, jobs);
  Aggregator agg(report);
  const auto start = Clock::now();
  std::vector<Graph> graphs;
  for (const auto& raw : lines) {
    std::string_view line = raw;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line == ">>graph6<<") continue;
    graphs.push_back(decode_graph6(line));
  }
  agg.merge(graphs, process_chunk(graphs, method, report.jobs));
  report.seconds = since(start);
  return report;
}

std::string report_text(const SweepReport& report) {
  std::ostringstream os;
  os << "method: " << method_name(report.method) << "   jobs: " << report.jobs << "\n";
  os << std::setw(3) << "n" << std::setw(9) << "graphs" << std::setw(11) << "chi=Delta"
     << std::setw(9) << "clique" << std::setw(9) << "hole" << std::setw(13) << "exceptional"
     << std::setw(10) << "failures" << std::setw(10) << "seconds" << "\n";
  for (const auto& t : report.orders) {
    const auto& kinds = report.method == SweepMethod::kOracle ? t.oracle_kinds : t.proof_kinds;
    os << std::setw(3) << t.n << std::setw(9) << t.graphs << std::setw(11) << t.cohort
       << std::setw(9) << kinds[0] << std::setw(9) << kinds[1] << std::setw(13) << t.exceptional
       << std::setw(10) << t.verification_failures << std::setw(10) << std::fixed
       << std::setprecision(2) << t.seconds << "\n";
  }
  const auto& a = report.audit;
  os << "probes: " << a.claim1_probes << " pair probes, " << a.holes << " holes (" << a.bad_holes
     << " rejected), " << a.chains << " Kempe chains, " << a.swap_failures
     << " improper swaps, " << a.inconsistent << " inconsistent, " << a.structural_splits
     << " structural splits, " << a.oracle_fallbacks << " oracle fallbacks\n";
  for (const auto& g : report.exceptional_graphs) os << "exceptional: " << g << "\n";
  for (const auto& f : report.failures) os << "FAILURE " << f.graph6 << ": " << f.reason << "\n";
  os << "total " << std::fixed << std::setprecision(2) << report.seconds << " s: "
     << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string report_json(const SweepReport& report) {
  nlohmann::ordered_json doc;
  doc["method"] = std::string(method_name(report.method));
  doc["generated"] = report.generated;
  doc["jobs"] = report.jobs;
  doc["passed"] = report.passed();
  doc["verification_failures"] = report.verification_failures();
  auto kinds_json = [](const std::array<std::size_t, 3>& k) {
    nlohmann::ordered_json out;
    out["clique"] = k[0];
    out["high_odd_hole"] = k[1];
    out["c7_complement"] = k[2];
    return out;
  };
  doc["orders"] = nlohmann::ordered_json::array();
  for (const auto& t : report.orders) {
    nlohmann::ordered_json o;
    o["n"] = t.n;
    o["graphs"] = t.graphs;
    o["chi_equals_delta"] = t.cohort;
    o["proof_certificates"] = kinds_json(t.proof_kinds);
    o["oracle_certificates"] = kinds_json(t.oracle_kinds);
    o["exceptional"] = t.exceptional;
    o["verification_failures"] = t.verification_failures;
    o["seconds"] = t.seconds;
    doc["orders"].push_back(o);
  }
  const auto& a = report.audit;
  doc["probes"] = {{"pair_probes", a.claim1_probes},     {"holes", a.holes},
                   {"rejected_holes", a.bad_holes},      {"kempe_chains", a.chains},
                   {"swaps_checked", a.swaps_checked},   {"improper_swaps", a.swap_failures},
                   {"inconsistent", a.inconsistent},     {"structural_splits", a.structural_splits},
                   {"oracle_fallbacks", a.oracle_fallbacks}};
  doc["exceptional_graphs"] = report.exceptional_graphs;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) doc["failures"].push_back({{"graph6", f.graph6}, {"reason", f.reason}});
  doc["seconds"] = report.seconds;
  return doc.dump(2);
}

}  // namespace holecert
