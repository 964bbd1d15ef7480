#ifndef NORMGAP_NORMS_HPP
#define NORMGAP_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>

#include "normgap/error.hpp"
#include "normgap/signal.hpp"

namespace normgap {

namespace detail {

inline double pow_exact_small(double t, double p) {
  if (p == 1.0) return t;
  if (p == 2.0) return t * t;
  return std::pow(t, p);
}

inline double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

/// Sum of (|x_i| / scale)^p. `scale` must be max_i |x_i| and positive, so
/// every ratio lies in [0, 1] and the sum lies in [1, n]. Ratios that
/// underflow are evaluated in the log domain, which keeps entries far below
/// the maximum visible for small p.
inline double scaled_power_sum(std::span<const double> x, double scale, double p) {
  double s = 0.0;
  for (double v : x) {
    const double a = std::abs(v);
    const double ratio = a / scale;
    if (ratio >= std::numeric_limits<double>::min() || a == 0.0) {
      s += pow_exact_small(ratio, p);
    } else {
      s += std::exp(p * (std::log(a) - std::log(scale)));
    }
  }
  return s;
}

/// Power mean of order p of the magnitudes, evaluated as M * (s / n)^{1/p}.
inline double power_mean(std::span<const double> x, double p) {
  const double m = max_abs(x);
  if (m == 0.0) return 0.0;
  const double s = scaled_power_sum(x, m, p) / static_cast<double>(x.size());
  return m * pow_exact_small(s, 1.0 / p);
}

}  // namespace detail

/// (sum_i |x_i|^p)^{1/p}, evaluated after factoring out max_i |x_i| so that
/// tiny p does not overflow intermediate powers. Zero for the zero vector.
inline double lp_norm(const Signal& x, PExponent p) {
  const double m = detail::max_abs(x.entries());
  if (m == 0.0) return 0.0;
  const double s = detail::scaled_power_sum(x.entries(), m, p);
  return m * detail::pow_exact_small(s, 1.0 / p.value());
}

/// sum_i |x_i|^p. Tends to the number of nonzeros as p -> 0+.
inline double lp_norm_pth_power(const Signal& x, PExponent p) {
  const double m = detail::max_abs(x.entries());
  if (m == 0.0) return 0.0;
  const double s = detail::scaled_power_sum(x.entries(), m, p);
  return detail::pow_exact_small(m, p) * s;
}

/// Number of entries with |x_i| > zero_tol.
inline std::size_t l0_norm(const Signal& x, double zero_tol = 0.0) {
  if (!(zero_tol >= 0.0)) {
    throw DomainError("zero tolerance must be nonnegative");
  }
  return static_cast<std::size_t>(std::count_if(x.entries().begin(), x.entries().end(),
                                                [&](double v) { return std::abs(v) > zero_tol; }));
}

/// ((sum_i |x_i|^p) / n)^{1/p}: the order-p power mean of the magnitudes.
inline double normalized_lp(const Signal& x, PExponent p) {
  return detail::power_mean(x.entries(), p);
}

/// (max_i |x_i|, min_i |x_i|); the minimum includes zero entries.
inline std::pair<double, double> max_abs_min_abs(const Signal& x) {
  double hi = 0.0;
  double lo = std::abs(x[0]);
  for (double v : x.entries()) {
    hi = std::max(hi, std::abs(v));
    lo = std::min(lo, std::abs(v));
  }
  return {hi, lo};
}

}  // namespace normgap

#endif  // NORMGAP_NORMS_HPP
