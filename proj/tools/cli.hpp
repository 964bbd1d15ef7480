#ifndef NORMGAP_TOOLS_CLI_HPP
#define NORMGAP_TOOLS_CLI_HPP

// normgap command-line front end. Machine-readable output goes to `out`
// (or to --out), human-readable summaries to `err`.
//
// Exit codes: 0 success, 1 usage or input error, 2 invariant violation.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "normgap/normgap.hpp"

namespace normgap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;

namespace detail {

/// Writes `text` to `path`, or to `out` when `path` is empty.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
  f << text;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct VerifyArgs {
  std::string input;
  double p = 0.0;
  double q = 0.0;
  double tol = 1e-9;
  std::string out;
};

struct SweepConstantArgs {
  double p_min = 0.0;
  double p_max = 0.0;
  std::size_t p_steps = 0;
  std::vector<double> q;
  std::string out;
};

struct ExtremalArgs {
  std::size_t n = 0;
  double p = 0.0;
  double q = 0.0;
  bool json = false;
  std::uint64_t seed = 0;
  std::string out;
};

struct StressArgs {
  std::vector<std::size_t> n;
  std::vector<double> p;
  std::vector<double> q;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::string matrix;
  std::string rhs;
  double p = 0.0;
  double q = 2.0;
  double eps = 0.0;
  int max_iters = 200;
  int log_every = 10;
  std::uint64_t seed = 0;
  std::string out;
};

struct SweepRecoveryArgs {
  std::size_t n = 0;
  std::vector<std::size_t> m;
  std::vector<std::size_t> k;
  std::vector<double> p;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::string out;
};

}  // namespace detail

inline int cmd_verify(const detail::VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Signal x(csv::read_vector(a.input));
  const GapReport r = verify(x, Exponents(a.p, a.q), a.tol);
  detail::emit(a.out, detail::dump(r), out);
  err << "n=" << r.n << " gap=" << r.gap << " bound=" << r.bound << " slack=" << r.slack
      << (r.verified ? " verified" : " VIOLATED") << '\n';
  if (r.warning) err << "warning: " << *r.warning << '\n';
  return r.verified ? kExitOk : kExitViolation;
}

inline int cmd_sweep_constant(const detail::SweepConstantArgs& a, std::ostream& out,
                              std::ostream& err) {
  if (!(a.p_min > 0.0) || !(a.p_min <= a.p_max) || !(a.p_max <= 1.0)) {
    throw DomainError("p range must satisfy 0 < p-min <= p-max <= 1");
  }
  if (a.p_steps < 1) throw DomainError("p-steps must be >= 1");
  for (double q : a.q) {
    if (!(q > 1.0)) throw DomainError("every q must be > 1");
  }
  const std::size_t rows = a.p_min == a.p_max ? 1 : a.p_steps;
  std::ostringstream csvout;
  csvout << 'p';
  for (double q : a.q) csvout << ",q=" << csv::format_real(q);
  csvout << '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    const double p = rows == 1 ? a.p_min
                               : (i + 1 == rows ? a.p_max
                                                : a.p_min + (a.p_max - a.p_min) *
                                                                static_cast<double>(i) /
                                                                static_cast<double>(rows - 1));
    csvout << csv::format_real(p);
    for (double q : a.q) csvout << ',' << csv::format_real(sharpness_constant(Exponents(p, q)));
    csvout << '\n';
  }
  detail::emit(a.out, csvout.str(), out);
  err << "wrote " << rows << " rows x " << a.q.size() << " q columns\n";
  return kExitOk;
}

inline int cmd_extremal(const detail::ExtremalArgs& a, std::ostream& out, std::ostream& err) {
  const Exponents e(a.p, a.q);
  const ExtremalConfig cfg = best_integer_config(a.n, e);
  const Signal x = cfg.realize();
  const GapReport r = verify(x, e);
  const double ratio = attainment_ratio(a.n, e);
  nlohmann::json j{{"config", cfg},
                   {"k_star", k_star(a.n, e)},
                   {"attainment_ratio", ratio},
                   {"vector", x.values()},
                   {"report", r}};
  if (a.json) {
    out << detail::dump(j);
  } else {
    csv::write_row(out, x.values());
  }
  if (!a.out.empty()) detail::emit(a.out, detail::dump(j), out);
  err << "n=" << a.n << " k=" << cfg.k << " k_star=" << k_star(a.n, e)
      << " attainment_ratio=" << ratio << (r.equality_second ? " (bound attained)" : "") << '\n';
  return r.verified ? kExitOk : kExitViolation;
}

inline int cmd_stress(const detail::StressArgs& a, std::ostream& out, std::ostream& err) {
  nlohmann::json configs = nlohmann::json::array();
  std::uint64_t total = 0;
  for (std::size_t n : a.n) {
    for (double p : a.p) {
      for (double q : a.q) {
        const AdversarialReport rep = random_adversarial_search(n, Exponents(p, q), a.trials, a.seed);
        total += rep.violations;
        err << "n=" << n << " p=" << p << " q=" << q << " trials=" << rep.trials
            << " violations=" << rep.violations
            << " worst_normalized_slack=" << rep.worst_normalized_slack << '\n';
        configs.push_back(rep);
      }
    }
  }
  const nlohmann::json j{{"total_violations", total}, {"configurations", configs}};
  detail::emit(a.out, detail::dump(j), out);
  err << "violations: " << total << '\n';
  return total == 0 ? kExitOk : kExitViolation;
}

inline int cmd_solve(const detail::SolveArgs& a, std::ostream& out, std::ostream& err) {
  Eigen::MatrixXd matrix = csv::read_matrix(a.matrix);
  const std::vector<double> rhs = csv::read_vector(a.rhs);
  Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  const MeasurementProblem problem(std::move(matrix), std::move(b), a.eps);
  if (!(a.q > 1.0)) throw DomainError("diagnostic q must be > 1");
  IrlsOptions opts;
  opts.max_iters = a.max_iters;
  opts.log_every = a.log_every;
  opts.diagnostic_q = a.q;
  const SolveResult res = irls_lp(problem, PExponent(a.p), opts);
  detail::emit(a.out, detail::dump(res), out);
  bool all_verified = true;
  for (const GapReport& r : res.gap_diagnostics) all_verified = all_verified && r.verified;
  err << "iterations=" << res.iterations << (res.converged ? " converged" : " max-iters")
      << " residual=" << res.final_residual
      << " nonzeros(1e-9)=" << l0_norm(res.solution, 1e-9) << '\n';
  return all_verified ? kExitOk : kExitViolation;
}

inline int cmd_sweep_recovery(const detail::SweepRecoveryArgs& a, std::ostream& out,
                              std::ostream& err) {
  const std::vector<PhaseCell> cells = phase_sweep(a.n, a.m, a.k, a.p, a.trials, a.seed);
  std::ostringstream csvout;
  csvout << "m,k,p,trials,successes,success_rate\n";
  for (const PhaseCell& c : cells) {
    csvout << c.m << ',' << c.k << ',' << csv::format_real(c.p) << ',' << c.trials << ','
           << c.successes << ',' << csv::format_real(c.success_rate()) << '\n';
  }
  detail::emit(a.out, csvout.str(), out);
  err << "swept " << cells.size() << " cells at n=" << a.n << '\n';
  return kExitOk;
}

/// Parses argv and dispatches to a subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"normgap: l_p / l_q norm gap toolkit"};
  app.require_subcommand(1);

  detail::VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate the gap inequality for a vector file");
  verify_cmd->add_option("--input", va.input, "Vector CSV file")->required();
  verify_cmd->add_option("--p", va.p, "Exponent p in (0, 1]")->required();
  verify_cmd->add_option("--q", va.q, "Exponent q > 1")->required();
  verify_cmd->add_option("--tol", va.tol, "Relative equality tolerance")->capture_default_str();
  verify_cmd->add_option("--out", va.out, "Write JSON report here instead of stdout");

  detail::SweepConstantArgs sca;
  auto* sweep_c = app.add_subcommand("sweep-constant", "Tabulate c_{p,q} over a p grid");
  sweep_c->add_option("--p-min", sca.p_min)->required();
  sweep_c->add_option("--p-max", sca.p_max)->required();
  sweep_c->add_option("--p-steps", sca.p_steps)->required();
  sweep_c->add_option("--q", sca.q, "Repeatable")->required()->take_all();
  sweep_c->add_option("--out", sca.out, "Write CSV here instead of stdout");

  detail::ExtremalArgs ea;
  auto* extremal_cmd = app.add_subcommand("extremal", "Best border configuration for (n, p, q)");
  extremal_cmd->add_option("--n", ea.n)->required();
  extremal_cmd->add_option("--p", ea.p)->required();
  extremal_cmd->add_option("--q", ea.q)->required();
  extremal_cmd->add_flag("--json", ea.json, "Print the JSON report to stdout instead of the vector");
  extremal_cmd->add_option("--seed", ea.seed, "Accepted for uniformity; output is deterministic");
  extremal_cmd->add_option("--out", ea.out, "Also write the JSON report here");

  detail::StressArgs sa;
  auto* stress_cmd = app.add_subcommand("stress", "Randomized falsification search");
  stress_cmd->add_option("--n", sa.n, "Repeatable")->required()->take_all();
  stress_cmd->add_option("--p", sa.p, "Repeatable")->required()->take_all();
  stress_cmd->add_option("--q", sa.q, "Repeatable")->required()->take_all();
  stress_cmd->add_option("--trials", sa.trials)->capture_default_str();
  stress_cmd->add_option("--seed", sa.seed)->capture_default_str();
  stress_cmd->add_option("--out", sa.out, "Write JSON report here instead of stdout");

  detail::SolveArgs so;
  auto* solve_cmd = app.add_subcommand("solve", "IRLS l_p minimization");
  solve_cmd->add_option("--matrix", so.matrix, "Row-major matrix CSV")->required();
  solve_cmd->add_option("--rhs", so.rhs, "Measurement vector CSV")->required();
  solve_cmd->add_option("--p", so.p)->required();
  solve_cmd->add_option("--q", so.q, "Diagnostic exponent")->capture_default_str();
  solve_cmd->add_option("--eps", so.eps, "Noise level")->capture_default_str();
  solve_cmd->add_option("--max-iters", so.max_iters)->capture_default_str();
  solve_cmd->add_option("--log-every", so.log_every)->capture_default_str();
  solve_cmd->add_option("--seed", so.seed, "Accepted for uniformity; output is deterministic");
  solve_cmd->add_option("--out", so.out, "Write JSON result here instead of stdout");

  detail::SweepRecoveryArgs ra;
  auto* sweep_r = app.add_subcommand("sweep-recovery", "Recovery success-rate table");
  sweep_r->add_option("--n", ra.n)->required();
  sweep_r->add_option("--m", ra.m, "Repeatable")->required()->take_all();
  sweep_r->add_option("--k", ra.k, "Repeatable")->required()->take_all();
  sweep_r->add_option("--p", ra.p, "Repeatable")->required()->take_all();
  sweep_r->add_option("--trials", ra.trials)->capture_default_str();
  sweep_r->add_option("--seed", ra.seed)->capture_default_str();
  sweep_r->add_option("--out", ra.out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(va, out, err);
    if (sweep_c->parsed()) return cmd_sweep_constant(sca, out, err);
    if (extremal_cmd->parsed()) return cmd_extremal(ea, out, err);
    if (stress_cmd->parsed()) return cmd_stress(sa, out, err);
    if (solve_cmd->parsed()) return cmd_solve(so, out, err);
    if (sweep_r->parsed()) return cmd_sweep_recovery(ra, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    return kExitInput;
  }
  err << app.help();
  return kExitInput;
}

}  // namespace normgap::cli

#endif  // NORMGAP_TOOLS_CLI_HPP
