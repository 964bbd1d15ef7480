#ifndef NORMGAP_EXTREMAL_HPP
#define NORMGAP_EXTREMAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "normgap/error.hpp"
#include "normgap/gapbound.hpp"
#include "normgap/signal.hpp"

namespace normgap {

/// Border configuration: k entries at `high`, n - k entries at `low`.
struct ExtremalConfig {
  std::size_t n = 2;
  std::size_t k = 1;
  double high = 1.0;
  double low = 0.0;

  void validate() const {
    if (n < 2) throw DomainError("extremal config needs n >= 2");
    if (k < 1 || k >= n) throw DomainError("extremal config needs 1 <= k <= n-1");
    if (!(high > 0.0) || !std::isfinite(high)) throw DomainError("extremal config needs high > 0");
    if (!(low >= 0.0) || !(low < high)) throw DomainError("extremal config needs 0 <= low < high");
  }

  [[nodiscard]] Signal realize() const {
    validate();
    std::vector<double> v(n, low);
    std::fill_n(v.begin(), k, high);
    return Signal(std::move(v));
  }

  friend bool operator==(const ExtremalConfig&, const ExtremalConfig&) = default;
};

/// l(k) = k^{1/q} - n^{1/q-1/p} k^{1/p} for real k in (0, n), i.e. the gap of
/// a (k ones, n-k zeros) vector relaxed to continuous k.
inline double l_of_k(double k, std::size_t n, const Exponents& e) {
  const double nd = static_cast<double>(n);
  if (!(k > 0.0) || !(k < nd)) {
    throw DomainError("l_of_k requires 0 < k < n");
  }
  const double t = k / nd;
  return std::pow(nd, 1.0 / e.q()) * (std::pow(t, 1.0 / e.q()) - std::pow(t, 1.0 / e.p()));
}

/// Continuous maximizer n (p/q)^{pq/(q-p)} of l.
inline double k_star(std::size_t n, const Exponents& e) {
  if (n < 2) throw DomainError("k_star requires n >= 2");
  return m_star(n, e);
}

/// Best integer border configuration: compares l at floor and ceil of k*,
/// both clamped into [1, n-1]. l is concave in k, so this is the global
/// integer maximum. Ties go to the smaller k.
inline ExtremalConfig best_integer_config(std::size_t n, const Exponents& e) {
  const double ks = k_star(n, e);
  const double upper = static_cast<double>(n - 1);
  const auto lo_k = static_cast<std::size_t>(std::clamp(std::floor(ks), 1.0, upper));
  const auto hi_k = static_cast<std::size_t>(std::clamp(std::ceil(ks), 1.0, upper));
  std::size_t best = lo_k;
  if (hi_k != lo_k &&
      l_of_k(static_cast<double>(hi_k), n, e) > l_of_k(static_cast<double>(lo_k), n, e)) {
    best = hi_k;
  }
  return ExtremalConfig{n, best, 1.0, 0.0};
}

/// Realized gap of the best integer configuration over n^{1/q} c_{p,q}.
inline double attainment_ratio(std::size_t n, const Exponents& e) {
  const Signal x = best_integer_config(n, e).realize();
  return gap(x, e) / (std::pow(static_cast<double>(n), 1.0 / e.q()) * sharpness_constant(e));
}

}  // namespace normgap

#endif  // NORMGAP_EXTREMAL_HPP
