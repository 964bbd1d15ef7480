#ifndef NORMGAP_SOLVER_HPP
#define NORMGAP_SOLVER_HPP

// IRLS with epsilon continuation for
//   min ||x||_p  s.t.  ||b - A x||_2 <= noise_level,  0 < p <= 1.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "normgap/error.hpp"
#include "normgap/gapbound.hpp"
#include "normgap/parallel.hpp"
#include "normgap/random.hpp"
#include "normgap/signal.hpp"

namespace normgap {

/// b = A x + z with ||z||_2 <= noise_level.
class MeasurementProblem {
 public:
  /// `allow_determined` lifts the m < n requirement; only tests and the
  /// recovery sweep's m >= n rows use it.
  MeasurementProblem(Eigen::MatrixXd matrix, Eigen::VectorXd rhs, double noise_level = 0.0,
                     bool allow_determined = false)
      : matrix_(std::move(matrix)), rhs_(std::move(rhs)), noise_level_(noise_level) {
    if (matrix_.rows() == 0 || matrix_.cols() == 0) {
      throw InvalidInput("measurement matrix must be non-empty");
    }
    if (rhs_.size() != matrix_.rows()) {
      throw InvalidInput("rhs length " + std::to_string(rhs_.size()) + " does not match " +
                         std::to_string(matrix_.rows()) + " matrix rows");
    }
    if (!allow_determined && matrix_.rows() >= matrix_.cols()) {
      throw InvalidInput("measurement problem must be underdetermined (m < n)");
    }
    if (!matrix_.allFinite() || !rhs_.allFinite()) {
      throw InvalidInput("measurement data must be finite");
    }
    if (!(noise_level_ >= 0.0) || !std::isfinite(noise_level_)) {
      throw InvalidInput("noise level must be finite and >= 0");
    }
  }

  [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const Eigen::VectorXd& rhs() const noexcept { return rhs_; }
  [[nodiscard]] double noise_level() const noexcept { return noise_level_; }
  [[nodiscard]] Eigen::Index rows() const noexcept { return matrix_.rows(); }
  [[nodiscard]] Eigen::Index cols() const noexcept { return matrix_.cols(); }

 private:
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd rhs_;
  double noise_level_;
};

struct IrlsOptions {
  int max_iters = 200;
  double eps_init = 1.0;
  double eps_floor = 1e-8;
  double eps_decay = 0.1;
  double convergence_tol = 1e-8;  // relative step norm
  int log_every = 10;
  double diagnostic_q = 2.0;
};

struct SolveResult {
  Signal solution{0.0};
  int iterations = 0;
  bool converged = false;
  /// Smoothed objective sum_i (x_i^2 + eps)^{p/2} at each iterate, eps being
  /// the value used to produce that iterate.
  std::vector<double> objective_trace;
  /// Plain ||x||_p^p at each iterate.
  std::vector<double> lp_trace;
  std::vector<double> eps_trace;
  double final_residual = 0.0;
  std::vector<int> diagnostic_iterations;
  std::vector<GapReport> gap_diagnostics;
};

/// Gap/bound report for a solver iterate.
inline GapReport gap_diagnostic(const Signal& x, PExponent p, double q) {
  return verify(x, Exponents(p.value(), q));
}

namespace detail {

inline double smoothed_objective(const Eigen::VectorXd& x, double eps, double p) {
  return (x.array().square() + eps).pow(p / 2.0).sum();
}

inline double lp_pth_power(const Eigen::VectorXd& x, double p) {
  return x.array().abs().pow(p).sum();
}

inline Signal to_signal(const Eigen::VectorXd& x) {
  return Signal(std::vector<double>(x.data(), x.data() + x.size()));
}

/// Cholesky of a symmetric positive (semi)definite system, retried once with
/// a 1e-12 * trace / m diagonal shift.
inline Eigen::LLT<Eigen::MatrixXd> spd_factor(Eigen::MatrixXd gram) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() == Eigen::Success) return llt;
  const double shift = 1e-12 * gram.trace() / static_cast<double>(gram.rows());
  gram.diagonal().array() += shift;
  llt.compute(gram);
  if (llt.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "weighted Gram matrix is not positive definite after regularization (m="
        << gram.rows() << ", trace=" << gram.trace() << ", shift=" << shift << ")";
    throw SolverFailure(msg.str());
  }
  return llt;
}

/// x = D A^T (A D A^T)^{-1} b: minimizer of sum_i x_i^2 / d_i over A x = b.
inline Eigen::VectorXd weighted_least_norm(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                           const Eigen::VectorXd& d) {
  const Eigen::MatrixXd ad = a * d.asDiagonal();
  Eigen::MatrixXd gram = ad * a.transpose();
  const auto llt = spd_factor(std::move(gram));
  return ad.transpose() * llt.solve(b);
}

/// Penalized form min ||b - A x||^2 + lambda sum_i x_i^2 / d_i, with lambda
/// chosen by bisection so that ||b - A x|| matches the noise level.
inline Eigen::VectorXd weighted_discrepancy(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                            const Eigen::VectorXd& d, double noise) {
  const Eigen::MatrixXd ad = a * d.asDiagonal();
  const Eigen::MatrixXd gram = ad * a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success) throw SolverFailure("eigendecomposition failed");
  const Eigen::VectorXd sigma = eig.eigenvalues().cwiseMax(0.0);
  const Eigen::VectorXd beta = eig.eigenvectors().transpose() * b;
  // residual(lambda) = || lambda (G + lambda I)^{-1} b ||, increasing in lambda
  auto residual = [&](double lambda) {
    return (lambda * beta.array() / (sigma.array() + lambda)).matrix().norm();
  };
  double lo = -40.0;  // log10 lambda
  double hi = 40.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(std::pow(10.0, mid)) > noise) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double lambda = std::pow(10.0, lo);
  const Eigen::VectorXd coef = (beta.array() / (sigma.array() + lambda)).matrix();
  return ad.transpose() * (eig.eigenvectors() * coef);
}

}  // namespace detail

/// IRLS for the l_p problem. Weights are w_i = (x_i^2 + eps)^{p/2 - 1};
/// eps shrinks by `eps_decay` whenever the relative step drops below
/// sqrt(eps)/100, down to `eps_floor`. Iteration stops once eps sits at the
/// floor and the relative step is below `convergence_tol`, or at max_iters.
inline SolveResult irls_lp(const MeasurementProblem& problem, PExponent p,
                           const IrlsOptions& opts = {}) {
  const double pv = p.value();
  if (pv > 1.0) throw DomainError("irls_lp requires p <= 1");
  if (opts.max_iters < 1 || !(opts.eps_init > 0.0) || !(opts.eps_floor > 0.0) ||
      !(opts.eps_decay > 0.0 && opts.eps_decay < 1.0) || !(opts.convergence_tol > 0.0)) {
    throw DomainError("invalid IRLS options");
  }
  const Eigen::MatrixXd& a = problem.matrix();
  const Eigen::VectorXd& b = problem.rhs();
  const double noise = problem.noise_level();
  const int log_every = std::max(1, opts.log_every);

  SolveResult out;
  auto record = [&](const Eigen::VectorXd& x, double eps, int iter, bool force_log) {
    out.objective_trace.push_back(detail::smoothed_objective(x, eps, pv));
    out.lp_trace.push_back(detail::lp_pth_power(x, pv));
    out.eps_trace.push_back(eps);
    if (force_log || iter % log_every == 0) {
      out.diagnostic_iterations.push_back(iter);
      out.gap_diagnostics.push_back(gap_diagnostic(detail::to_signal(x), p, opts.diagnostic_q));
    }
  };

  const Eigen::Index n = problem.cols();
  if (b.norm() <= noise) {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
    out.iterations = 1;
    out.converged = true;
    record(zero, opts.eps_init, 1, true);
    out.solution = detail::to_signal(zero);
    out.final_residual = b.norm();
    return out;
  }

  auto step_solve = [&](const Eigen::VectorXd& d) {
    return noise > 0.0 ? detail::weighted_discrepancy(a, b, d, noise)
                       : detail::weighted_least_norm(a, b, d);
  };

  double eps = opts.eps_init;
  Eigen::VectorXd x = step_solve(Eigen::VectorXd::Ones(n));
  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    // d_i = 1 / w_i = (x_i^2 + eps)^{1 - p/2}
    const Eigen::VectorXd d = (x.array().square() + eps).pow(1.0 - pv / 2.0).matrix();
    Eigen::VectorXd next = step_solve(d);
    const double rel_step = (next - x).norm() / std::max(next.norm(), 1e-300);
    x = std::move(next);
    out.iterations = iter;

    const bool at_floor = eps <= opts.eps_floor;
    if (at_floor && rel_step < opts.convergence_tol) {
      out.converged = true;
      record(x, eps, iter, true);
      break;
    }
    record(x, eps, iter, iter == opts.max_iters);
    if (!at_floor && rel_step < std::sqrt(eps) / 100.0) {
      eps = std::max(eps * opts.eps_decay, opts.eps_floor);
    }
  }
  out.solution = detail::to_signal(x);
  out.final_residual = (b - a * x).norm();
  return out;
}

/// Standard compressed-sensing instance: A_ij ~ N(0, 1/m), x0 k-sparse with
/// random support and +-1 entries, b = A x0.
inline std::pair<MeasurementProblem, Signal> gaussian_problem(std::size_t m, std::size_t n,
                                                              std::size_t k, std::uint64_t seed,
                                                              bool allow_determined = false) {
  if (n == 0 || m == 0) throw InvalidInput("problem dimensions must be positive");
  if (!allow_determined && !(m < n)) throw InvalidInput("gaussian_problem requires m < n");
  if (k >= m && k != 0) throw InvalidInput("gaussian_problem requires k < m");
  if (k > n) throw InvalidInput("gaussian_problem requires k <= n");
  Rng rng = make_substream(seed, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = scale * gauss(rng);
  }
  std::vector<double> x0(n, 0.0);
  for (std::size_t i : detail::random_support(rng, n, k)) x0[i] = detail::random_sign(rng);
  const Eigen::VectorXd xv = Eigen::Map<const Eigen::VectorXd>(x0.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd b = a * xv;
  return {MeasurementProblem(std::move(a), std::move(b), 0.0, allow_determined),
          Signal(std::move(x0))};
}

inline double relative_error(const Signal& estimate, const Signal& truth) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    num += (estimate[i] - truth[i]) * (estimate[i] - truth[i]);
    den += truth[i] * truth[i];
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

inline constexpr double kRecoveryThreshold = 1e-3;

struct PhaseCell {
  std::size_t m = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;

  [[nodiscard]] double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// Recovery success rates over the (m, k, p) grid at fixed n. Trial t of
/// cell (m, k) uses the instance seeded by substream(seed, m, k, t), shared
/// across p so columns compare on identical problems.
inline std::vector<PhaseCell> phase_sweep(std::size_t n, const std::vector<std::size_t>& m_list,
                                          const std::vector<std::size_t>& k_list,
                                          const std::vector<double>& p_list, std::size_t trials,
                                          std::uint64_t seed, const IrlsOptions& opts = {},
                                          std::size_t workers = worker_count()) {
  if (m_list.empty() || k_list.empty() || p_list.empty()) {
    throw InvalidInput("phase sweep lists must be nonempty");
  }
  if (trials < 1) throw InvalidInput("phase sweep needs trials >= 1");
  for (double p : p_list) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("phase sweep needs 0 < p <= 1");
  }
  std::vector<PhaseCell> cells;
  for (std::size_t m : m_list) {
    for (std::size_t k : k_list) {
      for (double p : p_list) cells.push_back({m, k, p, trials, 0});
    }
  }
  const std::size_t total = cells.size() * trials;
  std::vector<unsigned char> success(total, 0);
  parallel_chunks(total, workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const PhaseCell& cell = cells[idx / trials];
      const std::size_t t = idx % trials;
      const std::uint64_t instance_seed =
          substream_seed(substream_seed(substream_seed(seed, cell.m), cell.k), t);
      auto [problem, truth] = gaussian_problem(cell.m, n, cell.k, instance_seed, cell.m >= n);
      try {
        const SolveResult res = irls_lp(problem, PExponent(cell.p), opts);
        success[idx] = relative_error(res.solution, truth) < kRecoveryThreshold ? 1 : 0;
      } catch (const SolverFailure&) {
        success[idx] = 0;
      }
    }
  });
  for (std::size_t idx = 0; idx < total; ++idx) cells[idx / trials].successes += success[idx];
  return cells;
}

}  // namespace normgap

#endif  // NORMGAP_SOLVER_HPP
