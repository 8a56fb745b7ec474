// specnet: construct spread-optimal digraphs, analyze Laplacian spectra,
// brute-force verify the spectral optimality results, and run linear
// consensus simulations. Exit codes: 0 success/verified, 1 property
// violated, 2 usage or runtime error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "specnet/specnet.hpp"

using namespace specnet;

namespace {

DiGraph load_graph(const std::string& path, const std::string& fmt) {
  bool json = fmt == "json" || (fmt == "auto" && path.size() > 5 &&
                                path.compare(path.size() - 5, 5, ".json") == 0);
  if (path == "-") return json ? read_json_graph(std::cin) : read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return json ? read_json_graph(in) : read_edge_list(in);
}

// Stream to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(errc::parse_error, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

void write_graph(std::ostream& os, const DiGraph& g, const std::string& format) {
  if (format == "edges")
    write_edge_list(os, g);
  else if (format == "json")
    os << to_json(g).dump(2) << '\n';
  else if (format == "dot")
    write_dot(os, g);
  else
    fail(errc::precondition, "unknown output format '" + format + "'");
}

struct ConstructOpts {
  int n = 0;
  long long m = -1;
  std::string tree = "star";
  uint64_t tree_seed = 0;
  long long tree_rank = 0;
  std::string format = "edges";
  std::string out, trace_path, from_trace;
};

int run_construct(const ConstructOpts& o) {
  if (!o.from_trace.empty()) {
    std::ifstream in(o.from_trace);
    if (!in) fail(errc::parse_error, "cannot open '" + o.from_trace + "'");
    ConstructionTrace tr = read_trace(in);
    BuildResult res =
        build(tr.n, tr.final_m(), TreeSpec::explicit_arcs(tr.n, tr.tree_arcs));
    if (res.trace.steps.size() != tr.steps.size()) {
      std::cerr << "trace replay mismatch: expected " << res.trace.steps.size()
                << " steps, file has " << tr.steps.size() << "\n";
      return 1;
    }
    for (size_t i = 0; i < tr.steps.size(); ++i) {
      const TraceStep &a = tr.steps[i], &b = res.trace.steps[i];
      if (a.m != b.m || a.v != b.v || a.u != b.u) {
        std::cerr << "trace replay mismatch at step " << a.m << ": file has (" << a.v << ","
                  << a.u << "), algorithm gives (" << b.v << "," << b.u << ")\n";
        return 1;
      }
    }
    OutputTarget out(o.out);
    write_graph(out.stream(), res.graph, o.format);
    return 0;
  }

  TreeSpec spec = TreeSpec::star(o.n);
  if (o.tree == "star")
    spec = TreeSpec::star(o.n);
  else if (o.tree == "path")
    spec = TreeSpec::path(o.n);
  else if (o.tree == "random")
    spec = TreeSpec::random(o.n, o.tree_seed);
  else if (o.tree == "rank")
    spec = TreeSpec::index(o.n, o.tree_rank);
  else
    fail(errc::precondition, "unknown tree kind '" + o.tree + "'");

  BuildResult res = build(o.n, o.m, spec);
  if (!o.trace_path.empty()) {
    std::ofstream tf(o.trace_path);
    if (!tf) fail(errc::parse_error, "cannot write '" + o.trace_path + "'");
    write_trace(tf, res.trace);
  }
  OutputTarget out(o.out);
  write_graph(out.stream(), res.graph, o.format);
  return 0;
}

struct SpectrumOpts {
  std::string input;
  std::string input_format = "auto";
  std::string mode = "numeric";
  double tol = 1e-8;
  std::string out;
};

int run_spectrum(const SpectrumOpts& o) {
  DiGraph g = load_graph(o.input, o.input_format);
  OutputTarget out(o.out);
  if (o.mode == "numeric") {
    write_spectrum_csv(out.stream(), spectrum_numeric(g, o.tol));
  } else if (o.mode == "exact") {
    out.stream() << char_poly(laplacian<BigInt>(g)).to_line() << '\n';
  } else if (o.mode == "spread") {
    double sigma = sigma_squared(spectrum_numeric(g, o.tol));
    SpreadParameters p = spread_parameters(g.vertex_count(), g.net_arcs());
    out.stream() << fmt_double(sigma, 12) << ", " << fmt_double(p.sigma_min_sq.to_double(), 12)
                 << ", " << p.kappa << ", " << fmt_bool(matches_optimal_spectrum(g)) << '\n';
  } else {
    fail(errc::precondition, "unknown mode '" + o.mode + "'");
  }
  return 0;
}

struct VerifyConjectureOpts {
  int n = 0;
  long long m = 0;
  double tol = 1e-9;
  int jobs = 1;
  bool long_run = false;
  std::string out;
};

int run_verify_conjecture(const VerifyConjectureOpts& o) {
  ConjectureReport r = verify_conjecture(o.n, o.m, o.tol, o.jobs, o.long_run);
  OutputTarget out(o.out);
  write_conjecture_csv(out.stream(), r);
  if (!r.passed()) {
    std::cerr << "violation: min sigma^2 " << fmt_double(r.min_sigma_sq) << " vs exact "
              << r.sigma_min_sq.to_string() << ", nonoptimal minimizers "
              << (r.any_nonoptimal_at_min ? "present" : "absent") << "\n";
    return 1;
  }
  return 0;
}

int report_sweep(const SweepReport& r, const std::string& out_path) {
  OutputTarget out(out_path);
  write_sweep_csv(out.stream(), r);
  if (!r.failures.empty()) {
    size_t show = std::min<size_t>(r.failures.size(), 20);
    for (size_t i = 0; i < show; ++i) std::cerr << "failure: " << r.failures[i] << "\n";
    if (show < r.failures.size())
      std::cerr << "... " << r.failures.size() - show << " more\n";
    return 1;
  }
  return 0;
}

struct TreesOpts {
  int n = 0;
  bool list = false;
  long long rank = -1;
  std::string format = "edges";
  std::string out;
};

int run_trees(const TreesOpts& o) {
  OutputTarget out(o.out);
  if (o.rank >= 0) {
    write_graph(out.stream(), make_tree(TreeSpec::index(o.n, o.rank)), o.format);
    return 0;
  }
  if (o.list) {
    for (const DiGraph& t : enumerate_trees(o.n)) {
      for (size_t k = 0; k < t.arcs().size(); ++k) {
        if (k) out.stream() << ' ';
        out.stream() << t.arcs()[k].first << ':' << t.arcs()[k].second;
      }
      out.stream() << '\n';
    }
    return 0;
  }
  require(o.n >= 2 && o.n <= 21, errc::n_out_of_range, "tree count needs 2 <= n <= 21");
  out.stream() << factorial(o.n - 1) << '\n';
  return 0;
}

struct ConsensusOpts {
  std::string input;
  std::string input_format = "auto";
  std::string x0_path;
  double dt = 0.01;
  long long steps = 2000;
  long long stride = 1;
  std::string out;
};

int run_consensus(const ConsensusOpts& o) {
  DiGraph g = load_graph(o.input, o.input_format);
  std::vector<double> x0(g.vertex_count(), 0.0);
  if (o.x0_path.empty()) {
    x0[0] = 1.0;  // default: unit impulse at vertex 1
  } else {
    std::ifstream xf(o.x0_path);
    if (!xf) fail(errc::parse_error, "cannot open '" + o.x0_path + "'");
    for (int i = 0; i < g.vertex_count(); ++i)
      if (!(xf >> x0[i]))
        fail(errc::parse_error, "x0 file must hold " + std::to_string(g.vertex_count()) +
                                    " numbers");
  }
  ConsensusRun run = simulate_consensus(g, x0, o.dt, o.steps, o.stride);
  OutputTarget out(o.out);
  write_trajectory_csv(out.stream(), run);
  std::ostream& summary = out.to_file() ? std::cout : std::cerr;
  summary << "a(g) = " << fmt_double(algebraic_connectivity(g), 12)
          << ", final disagreement = " << fmt_double(run.final_disagreement(), 12) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for directed-graph synchronizability"};
  app.require_subcommand(1);

  ConstructOpts co;
  CLI::App* construct = app.add_subcommand("construct", "build a spread-optimal digraph");
  construct->add_option("-n,--vertices", co.n, "vertex count");
  construct->add_option("-m,--arcs", co.m, "arc count, in [n-1, n(n-1)]");
  construct->add_option("--tree", co.tree, "seed tree: star|path|random|rank")
      ->default_val("star");
  construct->add_option("--tree-seed", co.tree_seed, "seed for --tree random");
  construct->add_option("--tree-rank", co.tree_rank, "rank for --tree rank");
  construct->add_option("--format", co.format, "output: edges|json|dot")->default_val("edges");
  construct->add_option("--out", co.out, "output file (default stdout)");
  construct->add_option("--trace", co.trace_path, "also write the construction trace");
  construct->add_option("--from-trace", co.from_trace,
                        "replay and validate a trace file instead of constructing");

  SpectrumOpts so;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of a graph file");
  spectrum->add_option("input", so.input, "graph file (edge list or JSON)")->required();
  spectrum->add_option("--input-format", so.input_format, "auto|edges|json")->default_val("auto");
  spectrum->add_option("--mode", so.mode, "numeric|exact|spread")->default_val("numeric");
  spectrum->add_option("--tol", so.tol, "eigenvalue tolerance")->default_val(1e-8);
  spectrum->add_option("--out", so.out, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "brute-force verification suites");
  verify->require_subcommand(1);

  VerifyConjectureOpts vc;
  CLI::App* conjecture = verify->add_subcommand("conjecture", "exhaustive minimum-spread sweep");
  conjecture->add_option("-n,--vertices", vc.n)->required();
  conjecture->add_option("-m,--arcs", vc.m)->required();
  conjecture->add_option("--tol", vc.tol)->default_val(1e-9);
  conjecture->add_option("--jobs", vc.jobs, "worker count")->default_val(1);
  conjecture->add_flag("--long-run", vc.long_run, "allow the full n = 6 sweep");
  conjecture->add_option("--out", vc.out, "CSV output file (default stdout)");

  struct {
    int degree_max = 8;
    int coeff_bound = 5;
    long long trials = 100000;
    uint64_t rng = 0;
    std::string out;
  } t2;
  CLI::App* theorem2 = verify->add_subcommand("theorem2", "random root-spread inequality harness");
  theorem2->add_option("--degree-max", t2.degree_max)->default_val(8);
  theorem2->add_option("--coeff-bound", t2.coeff_bound)->default_val(5);
  theorem2->add_option("--trials", t2.trials)->default_val(100000);
  theorem2->add_option("--rng", t2.rng, "PRNG seed")->default_val(0);
  theorem2->add_option("--out", t2.out, "CSV output file (default stdout)");

  struct {
    int n_max = 10;
    int seeds = 3;
    uint64_t rng = 0;
    std::string out;
  } t3;
  CLI::App* theorem3 = verify->add_subcommand("theorem3", "exact characteristic-polynomial sweep");
  theorem3->add_option("--n-max", t3.n_max)->default_val(10);
  theorem3->add_option("--seeds", t3.seeds, "random seed trees per n")->default_val(3);
  theorem3->add_option("--rng", t3.rng, "PRNG seed")->default_val(0);
  theorem3->add_option("--out", t3.out, "CSV output file (default stdout)");

  TreesOpts to;
  CLI::App* trees = app.add_subcommand("trees", "count or enumerate seed trees");
  trees->add_option("-n,--vertices", to.n)->required();
  trees->add_flag("--list", to.list, "list all seed trees as tail:head lines");
  trees->add_option("--rank", to.rank, "emit the tree of this rank");
  trees->add_option("--format", to.format, "output for --rank: edges|json|dot")
      ->default_val("edges");
  trees->add_option("--out", to.out, "output file (default stdout)");

  ConsensusOpts cno;
  CLI::App* consensus = app.add_subcommand("consensus", "integrate x' = -Lx");
  consensus->add_option("input", cno.input, "graph file (edge list or JSON)")->required();
  consensus->add_option("--input-format", cno.input_format, "auto|edges|json")
      ->default_val("auto");
  consensus->add_option("--x0", cno.x0_path, "initial state file (default impulse at vertex 1)");
  consensus->add_option("--dt", cno.dt)->default_val(0.01);
  consensus->add_option("--steps", cno.steps)->default_val(2000);
  consensus->add_option("--stride", cno.stride, "sample every k-th step")->default_val(1);
  consensus->add_option("--out", cno.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(construct)) {
      if (co.from_trace.empty())
        require(construct->count("-n") && construct->count("-m"), errc::precondition,
                "construct needs -n and -m (or --from-trace)");
      return run_construct(co);
    }
    if (app.got_subcommand(spectrum)) return run_spectrum(so);
    if (app.got_subcommand(verify)) {
      if (verify->got_subcommand(conjecture)) return run_verify_conjecture(vc);
      if (verify->got_subcommand(theorem2))
        return report_sweep(verify_theorem2_random(t2.degree_max, t2.coeff_bound, t2.trials,
                                                   t2.rng),
                            t2.out);
      if (verify->got_subcommand(theorem3))
        return report_sweep(verify_theorem3(t3.n_max, t3.seeds, t3.rng), t3.out);
    }
    if (app.got_subcommand(trees)) return run_trees(to);
    if (app.got_subcommand(consensus)) return run_consensus(cno);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
