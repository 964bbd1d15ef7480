#ifndef NORMGAP_ORACLE_HPP
#define NORMGAP_ORACLE_HPP

// Brute-force and randomized checks of the gap inequality. Everything here
// evaluates realized vectors through gapbound, independently of the closed
// forms in extremal.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "normgap/error.hpp"
#include "normgap/extremal.hpp"
#include "normgap/gapbound.hpp"
#include "normgap/norms.hpp"
#include "normgap/parallel.hpp"
#include "normgap/random.hpp"
#include "normgap/signal.hpp"

namespace normgap {

struct BorderMax {
  double value = 0.0;
  ExtremalConfig config;
};

/// Exhaustive maximum of the gap over (k ones, n-k zeros), k in [1, n-1].
/// Ties resolve to the smaller k.
inline BorderMax border_enumeration_max(std::size_t n, const Exponents& e) {
  if (n < 2 || n > 4096) throw DomainError("border enumeration supports 2 <= n <= 4096");
  BorderMax best{-std::numeric_limits<double>::infinity(), ExtremalConfig{n, 1, 1.0, 0.0}};
  std::vector<double> x(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    x[k - 1] = 1.0;
    const double g = detail::gap_of(x, e);
    if (g > best.value) best = {g, ExtremalConfig{n, k, 1.0, 0.0}};
  }
  return best;
}

struct Violation {
  std::uint64_t trial = 0;
  std::vector<double> vector;
  GapReport report;
};

struct AdversarialReport {
  std::size_t n = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  /// min over trials of slack / max(1, max|x_i|)
  double worst_normalized_slack = std::numeric_limits<double>::infinity();
  std::uint64_t worst_trial = 0;
  /// min over trials of gap / max(1, max|x_i|), the lower side of the sandwich
  double worst_normalized_gap = std::numeric_limits<double>::infinity();
  std::vector<double> worst_vector;
  GapReport worst_report;
  /// First few violations by trial index.
  std::vector<Violation> evidence;
};

inline constexpr double kViolationTol = 1e-9;
inline constexpr std::size_t kMaxEvidence = 16;

/// Samples `trials` vectors from the generator mixture and tracks the
/// smallest normalized slack. Trial t draws from substream (seed, t), so the
/// outcome is independent of the worker count.
inline AdversarialReport random_adversarial_search(std::size_t n, const Exponents& e,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   std::size_t workers = worker_count()) {
  if (trials < 1) throw DomainError("adversarial search needs trials >= 1");
  if (n < 1) throw DomainError("adversarial search needs n >= 1");

  struct Partial {
    double worst = std::numeric_limits<double>::infinity();
    std::uint64_t worst_trial = 0;
    double worst_gap = std::numeric_limits<double>::infinity();
    std::uint64_t violations = 0;
    std::vector<std::uint64_t> violating_trials;
  };
  const double c = sharpness_constant(e);
  const double root_n = std::pow(static_cast<double>(n), 1.0 / e.q());

  std::vector<Partial> parts(std::clamp<std::size_t>(workers, 1, trials));
  parallel_chunks(trials, parts.size(), [&](std::size_t w, std::size_t begin, std::size_t end) {
    Partial& part = parts[w];
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng = make_substream(seed, t);
      const std::vector<double> x = sample_mixture(rng, n);
      const detail::GapParts g = detail::gap_parts(x, e);
      const double scale = std::max(1.0, g.max_abs);
      const double gp = g.lhs_norm_q - g.scaled_norm_p;
      const double slack = root_n * c * (g.max_abs - g.min_abs) - gp;
      const double normalized = slack / scale;
      if (normalized < part.worst) {
        part.worst = normalized;
        part.worst_trial = t;
      }
      part.worst_gap = std::min(part.worst_gap, gp / scale);
      if (normalized < -kViolationTol || gp / scale < -kViolationTol) {
        ++part.violations;
        if (part.violating_trials.size() < kMaxEvidence) part.violating_trials.push_back(t);
      }
    }
  });

  AdversarialReport rep;
  rep.n = n;
  rep.p = e.p();
  rep.q = e.q();
  rep.trials = trials;
  rep.seed = seed;
  std::vector<std::uint64_t> violating;
  for (const Partial& part : parts) {
    rep.violations += part.violations;
    rep.worst_normalized_gap = std::min(rep.worst_normalized_gap, part.worst_gap);
    violating.insert(violating.end(), part.violating_trials.begin(), part.violating_trials.end());
    if (part.worst < rep.worst_normalized_slack ||
        (part.worst == rep.worst_normalized_slack && part.worst_trial < rep.worst_trial)) {
      rep.worst_normalized_slack = part.worst;
      rep.worst_trial = part.worst_trial;
    }
  }
  auto replay = [&](std::uint64_t t) {
    Rng rng = make_substream(seed, t);
    return sample_mixture(rng, n);
  };
  rep.worst_vector = replay(rep.worst_trial);
  rep.worst_report = verify(Signal(rep.worst_vector), e, kViolationTol);
  std::sort(violating.begin(), violating.end());
  if (violating.size() > kMaxEvidence) violating.resize(kMaxEvidence);
  for (std::uint64_t t : violating) {
    std::vector<double> x = replay(t);
    GapReport r = verify(Signal(x), e, kViolationTol);
    rep.evidence.push_back({t, std::move(x), std::move(r)});
  }
  return rep;
}

struct HillClimbResult {
  double best_gap = -std::numeric_limits<double>::infinity();
  std::vector<double> best_point;
};

namespace detail {

inline constexpr double kHillStepStart = 0.25;
inline constexpr double kHillStepEnd = 1e-6;
inline constexpr double kHillCooling = 0.5;
inline constexpr int kHillDirections = 16;

/// Coordinate and random-direction ascent on [0,1]^n with a cooling step.
inline HillClimbResult hill_climb_single(std::vector<double> x, const Exponents& e, Rng& rng) {
  const std::size_t n = x.size();
  double current = gap_of(x, e);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> trial(n);
  auto try_move = [&](const std::vector<double>& y) {
    const double g = gap_of(y, e);
    if (g > current) {
      current = g;
      x = y;
      return true;
    }
    return false;
  };
  for (double step = kHillStepStart; step >= kHillStepEnd;) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (double dir : {1.0, -1.0}) {
        trial = x;
        trial[i] = std::clamp(trial[i] + dir * step, 0.0, 1.0);
        improved |= try_move(trial);
      }
    }
    for (int d = 0; d < kHillDirections; ++d) {
      double norm = 0.0;
      std::vector<double> dir(n);
      for (double& v : dir) {
        v = gauss(rng);
        norm += v * v;
      }
      norm = std::sqrt(norm);
      if (norm == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = std::clamp(x[i] + step * dir[i] / norm, 0.0, 1.0);
      }
      improved |= try_move(trial);
    }
    if (!improved) step *= kHillCooling;
  }
  return {current, std::move(x)};
}

}  // namespace detail

/// Local search from a given start point in [0,1]^n.
inline HillClimbResult hill_climb_from(std::vector<double> start, const Exponents& e,
                                       std::uint64_t seed) {
  if (start.empty()) throw DomainError("hill climb needs n >= 1");
  for (double& v : start) v = std::clamp(v, 0.0, 1.0);
  Rng rng = make_substream(seed, 0);
  return detail::hill_climb_single(std::move(start), e, rng);
}

/// Best gap over `restarts` local searches from uniform random starts.
inline HillClimbResult hill_climb_gap_detailed(std::size_t n, const Exponents& e,
                                               std::size_t restarts, std::uint64_t seed) {
  if (restarts < 1) throw DomainError("hill climb needs restarts >= 1");
  if (n < 1) throw DomainError("hill climb needs n >= 1");
  HillClimbResult best;
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng = make_substream(seed, r);
    std::vector<double> start(n);
    for (double& v : start) v = detail::uniform(rng, 0.0, 1.0);
    HillClimbResult res = detail::hill_climb_single(std::move(start), e, rng);
    if (res.best_gap > best.best_gap) best = std::move(res);
  }
  return best;
}

inline double hill_climb_gap(std::size_t n, const Exponents& e, std::size_t restarts,
                             std::uint64_t seed) {
  return hill_climb_gap_detailed(n, e, restarts, seed).best_gap;
}

/// True iff f(p) = log(normalized_lp(x, p)) is nondecreasing along the grid
/// within 1e-12.
inline bool check_f_monotone(const Signal& x, std::span<const double> p_grid) {
  for (std::size_t i = 1; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > p_grid[i - 1])) throw DomainError("p grid must be strictly increasing");
  }
  double prev = -std::numeric_limits<double>::infinity();
  for (double p : p_grid) {
    const double f = std::log(normalized_lp(x, PExponent(p)));
    if (f < prev - 1e-12) return false;
    prev = f;
  }
  return true;
}

/// h(t) = n^{-1/q} s(x - t, y - t), the shifted two-level gap.
inline double lemma1_h(double t, double xv, double yv, std::size_t n, std::size_t k,
                       const Exponents& e) {
  return lemma1_s(xv - t, std::max(0.0, yv - t), n, k, e) /
         std::pow(static_cast<double>(n), 1.0 / e.q());
}

struct Lemma1FuzzReport {
  std::size_t samples = 0;
  std::size_t shift_failures = 0;
  std::size_t monotone_failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();  // min of s(x-y,0) - s(x,y), scaled

  [[nodiscard]] bool passed() const { return shift_failures == 0 && monotone_failures == 0; }
};

inline constexpr std::size_t kLemma1GridPoints = 20;

inline Lemma1FuzzReport fuzz_lemma1_shift(std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("shift fuzz needs samples >= 1");
  Lemma1FuzzReport rep;
  rep.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = make_substream(seed, i);
    const double p = detail::uniform(rng, 0.01, 1.0);
    const double q = 1.0 + std::pow(10.0, detail::uniform(rng, -3.0, 1.5));
    const Exponents e(p, q);
    const std::size_t n = detail::uniform_index(rng, 2, 1000);
    const std::size_t k = detail::uniform_index(rng, 1, n - 1);
    const double xv = std::pow(10.0, detail::uniform(rng, -4.0, 4.0));
    // y spans [0, x); a tenth of the draws use y = 0 exactly.
    const double yv = detail::uniform_index(rng, 0, 9) == 0 ? 0.0 : xv * detail::uniform(rng, 0.0, 1.0);
    if (!(xv > yv)) continue;

    const double scale = std::max(1.0, xv);
    const double shifted = lemma1_s(xv, yv, n, k, e);
    const double base = lemma1_s(xv - yv, 0.0, n, k, e);
    rep.worst_margin = std::min(rep.worst_margin, (base - shifted) / scale);
    if (shifted > base + 1e-10 * scale) ++rep.shift_failures;

    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < kLemma1GridPoints; ++j) {
      const double t = j + 1 == kLemma1GridPoints
                           ? yv
                           : yv * static_cast<double>(j) / static_cast<double>(kLemma1GridPoints - 1);
      const double h = lemma1_h(t, xv, yv, n, k, e);
      if (h < prev - 1e-12 * scale) {
        ++rep.monotone_failures;
        break;
      }
      prev = h;
    }
  }
  return rep;
}

inline bool check_lemma1_shift(std::size_t samples, std::uint64_t seed) {
  return fuzz_lemma1_shift(samples, seed).passed();
}

/// c_{p,q} strictly decreasing in p along p_grid for every q in q_grid, and
/// strictly increasing in q along q_grid for every p. A step counts as strict
/// only when the change exceeds 1e-14.
inline bool check_constant_monotonicity(std::span<const double> p_grid,
                                        std::span<const double> q_grid) {
  constexpr double slack = 1e-14;
  for (double q : q_grid) {
    for (std::size_t i = 1; i < p_grid.size(); ++i) {
      if (!(p_grid[i] > p_grid[i - 1])) throw DomainError("p grid must be strictly increasing");
      if (!(sharpness_constant({p_grid[i - 1], q}) - sharpness_constant({p_grid[i], q}) > slack)) {
        return false;
      }
    }
  }
  for (double p : p_grid) {
    for (std::size_t j = 1; j < q_grid.size(); ++j) {
      if (!(q_grid[j] > q_grid[j - 1])) throw DomainError("q grid must be strictly increasing");
      if (!(sharpness_constant({p, q_grid[j]}) - sharpness_constant({p, q_grid[j - 1]}) > slack)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace normgap

#endif  // NORMGAP_ORACLE_HPP
