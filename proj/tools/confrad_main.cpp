// confrad: numerical toolkit for products of conformal radii over
// non-overlapping canonical domains. See README.md for the subcommands and
// output formats.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "confrad/bounds.hpp"
#include "confrad/harness.hpp"
#include "confrad/quaddiff.hpp"

namespace {

using namespace confrad;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct NRange {
  int lo = 2;
  int hi = 2;
};

NRange parse_n_range(const std::string& text) {
  const auto pos = text.find("..");
  NRange r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, pos));
      r.hi = std::stoi(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n-range", "expected N or A..B");
  }
  if (r.lo < 2 || r.hi < r.lo) throw CLI::ValidationError("--n-range", "need 2 <= A <= B");
  return r;
}

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("--gamma-list", "no values parsed");
  return out;
}

BoundKind kind_of(int k) { return k == 1 ? BoundKind::theorem1 : BoundKind::theorem2; }

std::vector<Complex> read_seeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--seeds", "cannot open " + path);
  std::vector<Complex> seeds;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    double re, im;
    if (ls >> re >> im) seeds.push_back(Complex{re, im});
  }
  if (seeds.empty()) throw CLI::ValidationError("--seeds", "no seed points in " + path);
  return seeds;
}

int cmd_bounds(int theorem, const NRange& range, double gamma) {
  std::cout << "theorem,n,gamma,bound,log_bound\n";
  for (int n = range.lo; n <= range.hi; ++n) {
    const FunctionalValue b = theorem == 1 ? bound_thm1(n, gamma) : bound_thm2(n);
    const double g = theorem == 1 ? gamma : 0.5;
    std::cout << theorem << ',' << n << ',' << fmt(g) << ',' << fmt(b.value) << ','
              << fmt(b.log_value) << '\n';
  }
  return 0;
}

int cmd_psi(int kind, double beta) {
  const double value = kind == 1 ? psi1(beta) : psi2(beta);
  std::cout << "kind,beta,psi,log_psi\n";
  std::cout << kind << ',' << fmt(beta) << ',' << fmt(value) << ','
            << fmt(std::log(value)) << '\n';
  return 0;
}

int cmd_beta0(int kind) {
  std::cout << "kind,beta0\n";
  std::cout << kind << ',' << fmt(find_beta0(kind_of(kind))) << '\n';
  return 0;
}

int cmd_extremal(int kind, int n, std::optional<double> budget, int starts, std::uint64_t seed) {
  const double b = budget ? *budget : (kind == 1 ? 2.0 : kSqrt2);
  SolveOptions opts;
  opts.starts = starts;
  opts.seed = seed;
  const ExtremalSolution sol = solve_product_max(kind_of(kind), n, b, opts);
  std::cout << "kind,n,budget,k,beta,objective_log,lagrange_residual,certified_symmetric,converged\n";
  for (std::size_t k = 0; k < sol.betas.size(); ++k)
    std::cout << kind << ',' << n << ',' << fmt(b) << ',' << k + 1 << ',' << fmt(sol.betas[k])
              << ',' << fmt(sol.objective_log) << ',' << fmt(sol.lagrange_residual) << ','
              << (sol.certified_symmetric ? 1 : 0) << ',' << (sol.converged ? 1 : 0) << '\n';
  return 0;
}

int cmd_identity(int kind, int n, double gamma) {
  const double d = check_symmetric_identity(kind_of(kind), n, gamma);
  std::cout << "kind,n,gamma,discrepancy\n";
  std::cout << kind << ',' << n << ',' << fmt(kind == 1 ? gamma : 0.5) << ',' << fmt(d) << '\n';
  return 0;
}

int cmd_verify(int theorem, const NRange& range, const std::vector<double>& gammas, long trials,
               std::uint64_t seed, const std::string& out_path) {
  VerifySpec spec;
  spec.theorem = theorem == 1 ? Theorem::one : Theorem::two;
  spec.n_lo = range.lo;
  spec.n_hi = range.hi;
  spec.gammas = gammas;
  spec.trials = trials;
  spec.seed = seed;

  std::ofstream out_file;
  std::ostream* stream = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path, std::ios::binary);  // binary: byte-identical reruns
    if (!out_file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
    stream = &out_file;
  }

  const RunSummary summary =
      run_verification(spec, [&](const TrialReport& r) { *stream << to_json_line(r) << '\n'; });

  std::ostream& report = out_path.empty() ? std::cerr : std::cout;
  report << run_summary_csv_header() << '\n' << to_csv_row(summary) << '\n';
  return summary.violations == 0 ? 0 : 2;
}

int cmd_qd(int kind, int n, double gamma, const std::string& seeds_path, const std::string& out_path,
           double step, double max_len, double escape) {
  const QuadDiff q = make_quad_diff(kind_of(kind), n, gamma);
  const std::vector<Complex> seeds = read_seeds(seeds_path);
  TrajectoryOptions opts;
  opts.escape_radius = escape;
  const std::vector<Trajectory> lines = sample_trajectories(q, seeds, step, max_len, opts);

  std::ofstream out_file;
  std::ostream* stream = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path, std::ios::binary);
    if (!out_file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
    stream = &out_file;
  }
  *stream << "trajectory_id,step_index,re,im\n";
  for (std::size_t id = 0; id < lines.size(); ++id)
    for (std::size_t i = 0; i < lines[id].points.size(); ++i)
      *stream << id << ',' << i << ',' << fmt(lines[id].points[i].real()) << ','
              << fmt(lines[id].points[i].imag()) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"confrad: products of conformal radii over non-overlapping domains"};
  app.require_subcommand(1);

  std::string n_range_text = "2..5";
  std::string gamma_list_text;
  int theorem = 1;
  int kind = 1;
  int n = 2;
  double gamma = 1.0;
  double beta = 1.0;
  std::optional<double> budget;
  int starts = 64;
  long trials = 1000;
  std::uint64_t seed = 42;
  std::string out_path;
  std::string seeds_path;
  double step = 1e-3;
  double max_len = 20.0;
  double escape = 10.0;

  auto* bounds_cmd = app.add_subcommand("bounds", "print a closed-form bound table (CSV)");
  bounds_cmd->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::Range(1, 2));
  bounds_cmd->add_option("--n-range", n_range_text, "N or A..B")->required();
  bounds_cmd->add_option("--gamma", gamma, "weight for theorem 1 (default 1)");

  auto* psi_cmd = app.add_subcommand("psi", "evaluate a bound profile");
  psi_cmd->add_option("--kind", kind, "1 or 2")->required()->check(CLI::Range(1, 2));
  psi_cmd->add_option("--beta", beta, "evaluation point")->required();

  auto* beta0_cmd = app.add_subcommand("beta0", "minimizer of the profile's log-derivative");
  beta0_cmd->add_option("--kind", kind, "1 or 2")->required()->check(CLI::Range(1, 2));

  auto* extremal_cmd = app.add_subcommand("extremal", "constrained product maximization");
  extremal_cmd->add_option("--kind", kind, "1 or 2")->required()->check(CLI::Range(1, 2));
  extremal_cmd->add_option("--n", n, "number of factors")->required()->check(CLI::Range(2, 64));
  extremal_cmd->add_option("--budget", budget, "sum constraint (default 2 or sqrt(2))");
  extremal_cmd->add_option("--starts", starts, "multistart count (default 64)");
  extremal_cmd->add_option("--seed", seed, "multistart seed");

  auto* identity_cmd = app.add_subcommand("identity", "bound-vs-profile factorization check");
  identity_cmd->add_option("--kind", kind, "1 or 2")->required()->check(CLI::Range(1, 2));
  identity_cmd->add_option("--n", n, "")->required()->check(CLI::Range(2, 1000));
  identity_cmd->add_option("--gamma", gamma, "weight for kind 1 (default 1)");

  auto* verify_cmd = app.add_subcommand("verify", "Monte-Carlo inequality verification");
  verify_cmd->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::Range(1, 2));
  verify_cmd->add_option("--n-range", n_range_text, "N or A..B")->required();
  verify_cmd->add_option("--gamma-list", gamma_list_text, "comma-separated, theorem 1 only");
  verify_cmd->add_option("--trials", trials, "trials per (n, gamma) combination")->required();
  verify_cmd->add_option("--seed", seed, "root seed")->required();
  verify_cmd->add_option("--out", out_path, "JSON Lines output file (default: stdout)");

  auto* qd_cmd = app.add_subcommand("qd", "sample quadratic-differential trajectories (CSV)");
  qd_cmd->add_option("--kind", kind, "1 or 2")->required()->check(CLI::Range(1, 2));
  qd_cmd->add_option("--n", n, "")->required()->check(CLI::Range(2, 64));
  qd_cmd->add_option("--gamma", gamma, "weight for kind 1 (default 1)");
  qd_cmd->add_option("--seeds", seeds_path, "file with one 're,im' seed per line")->required();
  qd_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");
  qd_cmd->add_option("--step", step, "integration step (default 1e-3)");
  qd_cmd->add_option("--max-len", max_len, "arc-length cap per trajectory (default 20)");
  qd_cmd->add_option("--escape", escape, "bounding disk radius (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (bounds_cmd->parsed()) {
      if (theorem == 1 && !(gamma > 0.0 && gamma <= 1.0)) {
        std::cerr << "--gamma must lie in (0, 1]\n";
        return 1;
      }
      return cmd_bounds(theorem, parse_n_range(n_range_text), gamma);
    }
    if (psi_cmd->parsed()) return cmd_psi(kind, beta);
    if (beta0_cmd->parsed()) return cmd_beta0(kind);
    if (extremal_cmd->parsed()) return cmd_extremal(kind, n, budget, starts, seed);
    if (identity_cmd->parsed()) return cmd_identity(kind, n, gamma);
    if (verify_cmd->parsed()) {
      std::vector<double> gammas;
      if (theorem == 1) {
        gammas = parse_gamma_list(gamma_list_text.empty() ? "0.25,0.5,1" : gamma_list_text);
      } else if (!gamma_list_text.empty()) {
        std::cerr << "--gamma-list applies to theorem 1 only\n";
        return 1;
      }
      return cmd_verify(theorem, parse_n_range(n_range_text), gammas, trials, seed, out_path);
    }
    if (qd_cmd->parsed())
      return cmd_qd(kind, n, gamma, seeds_path, out_path, step, max_len, escape);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const confrad::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
