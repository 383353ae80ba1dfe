#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rggdim/dimtest.hpp"
#include "rggdim/edge_list.hpp"
#include "rggdim/error.hpp"
#include "rggdim/geometry.hpp"
#include "rggdim/simulate.hpp"

namespace rggdim::cli {
namespace {

// Signals an exit code that has already been reported to the user.
struct Exit {
  int code;
};

struct GenerateOptions {
  std::size_t n = 0;
  std::size_t m = 1;
  double r = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct InputOptions {
  std::string input;
  std::size_t nodes = 0;
  double alpha = 0.05;
};

struct TestOptions {
  InputOptions in;
  unsigned m0 = 1;
  std::string format = "json";
};

struct ScanOptions {
  InputOptions in;
  unsigned m0_min = 1;
  unsigned m0_max = 5;
};

struct SimulateOptions {
  std::vector<std::size_t> n;
  std::vector<std::size_t> m;
  std::vector<double> r;
  unsigned m0 = 1;
  double alpha = 0.05;
  std::size_t reps = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

AdjacencyMatrix load_graph(const InputOptions& opts, std::ostream& err) {
  std::ifstream in(opts.input, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << opts.input << '\n';
    throw Exit{kIoError};
  }
  const EdgeListDocument doc = parse_edge_list(in);
  if (doc.lines_with_extra_columns > 0) {
    err << "warning: ignored columns after the second on " << doc.lines_with_extra_columns
        << " line(s)\n";
  }
  if (opts.nodes != 0 && opts.nodes < doc.node_labels.size()) {
    err << "error: --nodes " << opts.nodes << " is smaller than the " << doc.node_labels.size()
        << " labels in " << opts.input << '\n';
    throw Exit{kUsageError};
  }
  return doc.to_adjacency(opts.nodes);
}

void add_input_options(CLI::App& cmd, InputOptions& opts) {
  cmd.add_option("--input", opts.input, "Edge-list file")->required();
  cmd.add_option("--nodes", opts.nodes,
                 "Total node count, for graphs with isolated nodes absent from the file");
  cmd.add_option("--alpha", opts.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0).description("in (0, 1)"));
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  const RggParams params{opts.n, opts.m, opts.r, opts.seed};
  const Rgg graph = generate_rgg(params);
  const std::vector<std::string> header = {
      "rggdim generate: torus random geometric graph",
      "n=" + std::to_string(opts.n) + " m=" + std::to_string(opts.m) +
          " r=" + format_double(opts.r) + " seed=" + std::to_string(opts.seed),
      "edges=" + std::to_string(graph.adjacency.edge_count()),
  };
  if (opts.out == "-") {
    write_edge_list(out, graph.adjacency, header);
    return kSuccess;
  }
  std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << opts.out << '\n';
    return kIoError;
  }
  write_edge_list(file, graph.adjacency, header);
  file.flush();
  if (!file) {
    err << "error: failed writing " << opts.out << '\n';
    return kIoError;
  }
  return kSuccess;
}

void write_json(std::ostream& out, const TestResult& r) {
  out << "{\"n\": " << r.n << ", \"m0\": " << r.m0 << ", \"alpha\": " << format_double(r.alpha)
      << ", \"d_n\": " << format_double(r.d_n) << ", \"sigma2_hat\": " << format_double(r.sigma2_hat)
      << ", \"statistic\": " << format_double(r.statistic)
      << ", \"p_value\": " << format_double(r.p_value) << ", \"reject\": " << bool_text(r.reject)
      << "}\n";
}

constexpr const char* kTestCsvHeader = "n,m0,alpha,d_n,sigma2_hat,statistic,p_value,reject";
constexpr const char* kScanCsvHeader = "m0,d_n,sigma2_hat,statistic,p_value,reject";

int cmd_test(const TestOptions& opts, std::ostream& out, std::ostream& err) {
  const AdjacencyMatrix graph = load_graph(opts.in, err);
  if (graph.size() < 4) {
    err << "error: the dimension test needs at least 4 nodes, got " << graph.size() << '\n';
    return kUsageError;
  }
  const MotifCounts counts = motif_counts_fast(graph);
  try {
    const TestResult r = test_from_counts(counts, opts.m0, opts.in.alpha);
    if (opts.format == "csv") {
      out << kTestCsvHeader << '\n'
          << r.n << ',' << r.m0 << ',' << format_double(r.alpha) << ',' << format_double(r.d_n)
          << ',' << format_double(r.sigma2_hat) << ',' << format_double(r.statistic) << ','
          << format_double(r.p_value) << ',' << bool_text(r.reject) << '\n';
    } else {
      write_json(out, r);
    }
    return kSuccess;
  } catch (const DegenerateVariance& e) {
    const double d_n = compute_dn(counts, opts.m0);
    const double s2 = compute_sigma2_hat(counts, opts.m0);
    if (opts.format == "csv") {
      out << kTestCsvHeader << '\n'
          << counts.n << ',' << opts.m0 << ',' << format_double(opts.in.alpha) << ','
          << format_double(d_n) << ',' << format_double(s2) << ",degenerate,degenerate,degenerate\n";
    } else {
      out << "{\"status\": \"degenerate_variance\", \"n\": " << counts.n << ", \"m0\": " << opts.m0
          << ", \"alpha\": " << format_double(opts.in.alpha) << ", \"d_n\": " << format_double(d_n)
          << ", \"sigma2_hat\": " << format_double(s2) << "}\n";
    }
    err << "error: " << e.what() << '\n';
    return kDegenerateVariance;
  }
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.m0_min < 1 || opts.m0_min > opts.m0_max) {
    err << "error: need 1 <= --m0-min <= --m0-max\n";
    return kUsageError;
  }
  const AdjacencyMatrix graph = load_graph(opts.in, err);
  if (graph.size() < 4) {
    err << "error: the dimension test needs at least 4 nodes, got " << graph.size() << '\n';
    return kUsageError;
  }
  std::vector<unsigned> m0_values;
  for (unsigned m0 = opts.m0_min; m0 <= opts.m0_max; ++m0) m0_values.push_back(m0);
  const auto entries = scan_m0(graph, m0_values, opts.in.alpha);

  std::size_t degenerate = 0;
  out << kScanCsvHeader << '\n';
  for (const auto& e : entries) {
    out << e.m0 << ',' << format_double(e.d_n) << ',' << format_double(e.sigma2_hat) << ',';
    if (e.degenerate()) {
      ++degenerate;
      out << "degenerate,degenerate,degenerate\n";
    } else {
      out << format_double(e.result->statistic) << ',' << format_double(e.result->p_value) << ','
          << bool_text(e.result->reject) << '\n';
    }
  }
  if (degenerate == entries.size()) {
    err << "error: variance estimate is degenerate for every m0\n";
    return kDegenerateVariance;
  }
  return kSuccess;
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  out << "n,m,r,m0,alpha,reps,seed,rejections,degenerate_count,rejection_rate,std_error\n";
  bool failed = false;
  // Rows: radius, then size, then dimension.
  for (double r : opts.r) {
    for (std::size_t n : opts.n) {
      for (std::size_t m : opts.m) {
        const SimConfig config{n, m, r, opts.m0, opts.alpha, opts.reps, opts.seed};
        out << n << ',' << m << ',' << format_double(r) << ',' << opts.m0 << ','
            << format_double(opts.alpha) << ',' << opts.reps << ',' << opts.seed << ',';
        try {
          const SimReport rep = estimate_rejection_rate(config, opts.threads);
          out << rep.rejections << ',' << rep.degenerate_count << ','
              << format_double(rep.rejection_rate) << ',' << format_double(rep.std_error) << '\n';
        } catch (const EstimationFailed&) {
          failed = true;
          out << "0," << opts.reps << ",nan,nan\n";
          err << "error: every replicate degenerate for n=" << n << " m=" << m
              << " r=" << format_double(r) << '\n';
        }
      }
    }
  }
  return failed ? kDegenerateVariance : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypothesis test for the latent dimension of a random geometric graph", "rggdim"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Sample a torus random geometric graph");
  generate->add_option("--n", gen.n, "Number of nodes")->required()->check(CLI::PositiveNumber);
  generate->add_option("--m", gen.m, "Latent dimension")->check(CLI::PositiveNumber);
  generate->add_option("--r", gen.r, "Connection radius in [0, 0.5]")
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--out", gen.out, "Output edge-list path ('-' for stdout)")->required();

  TestOptions test;
  auto* test_cmd = app.add_subcommand("test", "Test H0: m = m0 on an edge-list graph");
  add_input_options(*test_cmd, test.in);
  test_cmd->add_option("--m0", test.m0, "Hypothesized dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  test_cmd->add_option("--format", test.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Test a range of hypothesized dimensions");
  add_input_options(*scan_cmd, scan.in);
  scan_cmd->add_option("--m0-min", scan.m0_min, "Smallest m0")->required();
  scan_cmd->add_option("--m0-max", scan.m0_max, "Largest m0")->required();

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo Type I error / power estimate");
  simulate->add_option("--n", sim.n, "Node counts (comma list)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{4}, std::numeric_limits<std::size_t>::max()));
  simulate->add_option("--m", sim.m, "Data-generating dimensions (comma list)")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  simulate->add_option("--r", sim.r, "Radii (comma list)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 0.5));
  simulate->add_option("--m0", sim.m0, "Hypothesized dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--alpha", sim.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0).description("in (0, 1)"));
  simulate->add_option("--reps", sim.reps, "Replicates per cell")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out, err);
    if (test_cmd->parsed()) return cmd_test(test, out, err);
    if (scan_cmd->parsed()) return cmd_scan(scan, out, err);
    if (simulate->parsed()) return cmd_simulate(sim, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const EncodingError& e) {
    err << "encoding error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DegenerateVariance& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerateVariance;
  }
  return kUsageError;
}

}  // namespace rggdim::cli
