#include "holecert/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holecert/certificate_io.hpp"
#include "holecert/coloring.hpp"
#include "holecert/enumerate.hpp"
#include "holecert/graph6.hpp"
#include "holecert/oracle.hpp"
#include "holecert/sweep.hpp"
#include "holecert/witness.hpp"

namespace holecert {

namespace {

constexpr const char* kJobsEnv = "HOLECERT_JOBS";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << file.rdbuf();
  if (file.bad()) throw IoError("cannot read " + path);
  return os.str();
}

std::vector<std::string> graph_lines(const std::string& spec, std::istream& in) {
  std::vector<std::string> lines;
  if (spec != "-") {
    lines.push_back(spec);
    return lines;
  }
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line != ">>graph6<<") lines.push_back(line);
  }
  if (in.bad()) throw IoError("cannot read standard input");
  if (lines.empty()) throw UsageError("no graph6 lines on standard input");
  return lines;
}

Graph parse_graph(const std::string& line) {
  try {
    return decode_graph6(line);
  } catch (const Graph6Error& e) {
    throw UsageError(e.what());
  }
}

int witness_command(const std::string& graph, const std::string& method_text,
                    const std::string& format, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  const auto method = parse_method(method_text);
  if (!method) throw UsageError("unknown method " + method_text);
  const bool json = format == "json";
  int status = kExitOk;
  for (const auto& line : graph_lines(graph, in)) {
    const Graph g = parse_graph(line);
    try {
      std::optional<WitnessReport> proof;
      std::optional<Certificate> oracle;
      if (*method != SweepMethod::kOracle) {
        const bool over = g.order() >= 2 && is_connected(g) &&
                          chromatic_number(g) == max_degree(g) + 1;
        proof = over ? brooks_witness(g) : find_witness_report(g);
      }
      if (*method != SweepMethod::kProof) {
        // Brute force needs no χ = Δ premise; it only fails when nothing exists.
        oracle = oracle_witness(g);
        if (!oracle) throw ContractError("graph has no clique, high odd hole or exceptional certificate");
      }
      if (json) {
        if (proof && oracle) {
          out << "{\"proof\":" << serialize_certificate(proof->certificate)
              << ",\"oracle\":" << serialize_certificate(*oracle) << "}\n";
        } else {
          out << serialize_certificate(proof ? proof->certificate : *oracle) << "\n";
        }
      } else {
        if (proof) {
          out << line << ": " << describe_certificate(proof->certificate) << " [via "
              << route_name(proof->route) << "]\n";
        }
        if (oracle) out << line << ": " << describe_certificate(*oracle) << " [via oracle]\n";
      }
    } catch (const ContractError& e) {
      err << line << ": contract error: " << e.what() << "\n";
      status = kExitContract;
    }
  }
  return status;
}

int chi_command(const std::string& graph, std::ostream& out) {
  const Graph g = parse_graph(graph);
  if (g.order() == 0) throw UsageError("graph has no vertices");
  out << "chi " << chromatic_number(g) << "\n" << "delta " << max_degree(g) << "\n";
  return kExitOk;
}

int verify_command(const std::string& graph, const std::string& cert_path, std::ostream& out) {
  const Graph g = parse_graph(graph);
  const std::string text = read_file(cert_path);
  Certificate cert;
  try {
    cert = deserialize_certificate(text);
  } catch (const CertificateFormatError& e) {
    throw UsageError(e.what());
  }
  const Verdict verdict = verify_certificate(g, cert);
  if (verdict) {
    out << "ACCEPT " << kind_name(kind_of(cert)) << "\n";
    return kExitOk;
  }
  out << "REJECT " << reason_name(verdict.reason) << ": " << verdict.detail << "\n";
  return kExitReject;
}

int sweep_command(int min_n, int max_n, const std::string& method_text, int jobs,
                  const std::string& corpus, const std::string& json_path,
                  const std::string& format, bool allow_n9, std::ostream& out) {
  const auto method = parse_method(method_text);
  if (!method) throw UsageError("unknown method " + method_text);
  if (jobs <= 0) {
    if (const char* env = std::getenv(kJobsEnv)) {
      try {
        jobs = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError(std::string(kJobsEnv) + " is not an integer");
      }
    }
    if (jobs <= 0) jobs = 1;
  }

  SweepReport report;
  if (!corpus.empty()) {
    std::istringstream lines(read_file(corpus));
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    try {
      report = corpus_sweep(rows, *method, jobs);
    } catch (const Graph6Error& e) {
      throw UsageError(e.what());
    }
  } else {
    if (max_n == 9 && !allow_n9) throw UsageError("order 9 takes several minutes; pass --allow-n9");
    if (min_n < 1 || max_n > kMaxGeneratedOrder || min_n > max_n) {
      throw UsageError("orders must satisfy 1 <= --min-n <= --max-n <= 9");
    }
    report = theorem_sweep({min_n, max_n, *method, jobs});
  }

  const std::string json = report_json(report);
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!(file << json << "\n")) throw IoError("cannot write " + json_path);
  }
  out << (format == "json" ? json + "\n" : report_text(report));
  return report.passed() ? kExitOk : kExitReject;
}

int gen_command(int n, std::ostream& out) {
  if (n < 3 || n > kMaxOrder) throw UsageError("--squared-cycle needs 3 <= n <= 64");
  out << encode_graph6(cycle_power(n, 2)) << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Certificates for graphs whose chromatic number equals their maximum degree"};
  app.require_subcommand(1);

  std::string graph;
  std::string method = "proof";
  std::string format = "json";
  auto* witness = app.add_subcommand("witness", "find and verify a clique / high odd hole certificate");
  witness->add_option("--graph", graph, "graph6 line, or - to read lines from stdin")->required();
  witness->add_option("--method", method, "proof | oracle | both")->check(CLI::IsMember({"proof", "oracle", "both"}));
  witness->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* chi = app.add_subcommand("chi", "print chromatic number and maximum degree");
  chi->add_option("--graph", graph, "graph6 line")->required();

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "check a certificate file against a graph");
  verify->add_option("--graph", graph, "graph6 line")->required();
  verify->add_option("--certificate", cert_path, "certificate JSON file")->required();

  int min_n = 1;
  int max_n = 8;
  int jobs = 0;
  bool allow_n9 = false;
  std::string corpus;
  std::string json_path;
  std::string sweep_method = "both";
  std::string sweep_format = "text";
  auto* sweep = app.add_subcommand("sweep", "certify every connected graph with chi = Delta up to an order");
  sweep->add_option("--max-n", max_n, "largest order (<= 9)");
  sweep->add_option("--min-n", min_n, "smallest order");
  sweep->add_option("--method", sweep_method, "proof | oracle | both")->check(CLI::IsMember({"proof", "oracle", "both"}));
  sweep->add_option("--jobs", jobs, std::string("worker threads (default: $") + kJobsEnv + " or 1)");
  sweep->add_option("--corpus", corpus, "file of graph6 lines to check instead of generating");
  sweep->add_option("--json", json_path, "also write the JSON report to this file");
  sweep->add_option("--format", sweep_format, "stdout format: text | json")->check(CLI::IsMember({"json", "text"}));
  sweep->add_flag("--allow-n9", allow_n9, "permit the multi-minute order-9 sweep");

  int squared = 0;
  auto* gen = app.add_subcommand("gen", "emit graph6 for a generated graph");
  gen->add_option("--squared-cycle", squared, "square of the n-cycle")->required();

  std::vector<std::string> argv_rest(args.rbegin(), args.rend());
  if (!argv_rest.empty()) argv_rest.pop_back();
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*witness) return witness_command(graph, method, format, in, out, err);
    if (*chi) return chi_command(graph, out);
    if (*verify) return verify_command(graph, cert_path, out);
    if (*sweep) {
      return sweep_command(min_n, max_n, sweep_method, jobs, corpus, json_path, sweep_format,
                           allow_n9, out);
    }
    if (*gen) return gen_command(squared, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ContractError& e) {
    err << "contract error: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitUsage;
}

}  // namespace holecert
