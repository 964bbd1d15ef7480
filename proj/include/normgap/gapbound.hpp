#ifndef NORMGAP_GAPBOUND_HPP
#define NORMGAP_GAPBOUND_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "normgap/error.hpp"
#include "normgap/norms.hpp"
#include "normgap/signal.hpp"

namespace normgap {

/// Exponent pair with 0 < p <= 1 < q, the range in which the gap bound holds.
class Exponents {
 public:
  Exponents(double p, double q) : p_(p), q_(q) {
    if (!std::isfinite(p) || !(p > 0.0) || !(p <= 1.0)) {
      throw DomainError("exponent p must satisfy 0 < p <= 1, got " + std::to_string(p));
    }
    if (!std::isfinite(q) || !(q > 1.0)) {
      throw DomainError("exponent q must satisfy q > 1, got " + std::to_string(q));
    }
  }

  [[nodiscard]] double p() const noexcept { return p_; }
  [[nodiscard]] double q() const noexcept { return q_; }

  friend bool operator==(const Exponents&, const Exponents&) = default;

 private:
  double p_;
  double q_;
};

namespace detail {

/// ln(p/q) through log1p, accurate when q is close to p.
inline double log_ratio(const Exponents& e) { return std::log1p((e.p() - e.q()) / e.q()); }

inline double n_root_q(std::size_t n, const Exponents& e) {
  return std::pow(static_cast<double>(n), 1.0 / e.q());
}

struct GapParts {
  double lhs_norm_q = 0.0;     // ||x||_q
  double scaled_norm_p = 0.0;  // n^{1/q - 1/p} ||x||_p
  double max_abs = 0.0;
  double min_abs = 0.0;
};

inline GapParts gap_parts(std::span<const double> x, const Exponents& e) {
  GapParts out;
  out.min_abs = std::abs(x.front());
  for (double v : x) {
    out.max_abs = std::max(out.max_abs, std::abs(v));
    out.min_abs = std::min(out.min_abs, std::abs(v));
  }
  if (out.max_abs == 0.0) return out;
  const double n = static_cast<double>(x.size());
  const double sq = scaled_power_sum(x, out.max_abs, e.q());
  const double sp = scaled_power_sum(x, out.max_abs, e.p());
  out.lhs_norm_q = out.max_abs * pow_exact_small(sq, 1.0 / e.q());
  out.scaled_norm_p =
      std::pow(n, 1.0 / e.q()) * out.max_abs * pow_exact_small(sp / n, 1.0 / e.p());
  return out;
}

inline double gap_of(std::span<const double> x, const Exponents& e) {
  const GapParts g = gap_parts(x, e);
  return g.lhs_norm_q - g.scaled_norm_p;
}

/// Gap of the two-level vector with k entries `high` and n - k entries `low`,
/// in O(1) and with the same scaling as gap_parts.
inline double two_level_gap(double high, double low, double n, double k, const Exponents& e) {
  if (high == 0.0) return 0.0;
  const double t = low / high;
  const double sq = k + (n - k) * pow_exact_small(t, e.q());
  const double sp = k + (n - k) * pow_exact_small(t, e.p());
  return high * pow_exact_small(sq, 1.0 / e.q()) -
         std::pow(n, 1.0 / e.q()) * high * pow_exact_small(sp / n, 1.0 / e.p());
}

}  // namespace detail

/// c_{p,q} = (1 - p/q) (p/q)^{p/(q-p)}, evaluated through logarithms.
inline double sharpness_constant(const Exponents& e) {
  const double one_minus_r = (e.q() - e.p()) / e.q();
  return one_minus_r * std::exp(e.p() / (e.q() - e.p()) * detail::log_ratio(e));
}

/// The q = 2 specialization c_p = (1 - p/2)(p/2)^{p/(2-p)}.
inline double sharpness_constant_q2(double p) { return sharpness_constant(Exponents(p, 2.0)); }

/// m* = n (p/q)^{pq/(q-p)}; the bound is attained by an m*-sparse
/// equal-magnitude vector when m* is a positive integer.
inline double m_star(std::size_t n, const Exponents& e) {
  const double expo = e.p() * e.q() / (e.q() - e.p());
  return static_cast<double>(n) * std::exp(expo * detail::log_ratio(e));
}

/// ||x||_q - n^{1/q-1/p} ||x||_p, unclamped. Tiny negative values are
/// possible in floating point near the equality case.
inline double gap(const Signal& x, const Exponents& e) { return detail::gap_of(x.entries(), e); }

/// n^{1/q} c_{p,q} (max_i |x_i| - min_i |x_i|).
inline double upper_bound(const Signal& x, const Exponents& e) {
  const auto [hi, lo] = max_abs_min_abs(x);
  return detail::n_root_q(x.size(), e) * sharpness_constant(e) * (hi - lo);
}

enum class EqualityClass { none, first, second, both };

inline std::string_view to_string(EqualityClass c) {
  switch (c) {
    case EqualityClass::none: return "none";
    case EqualityClass::first: return "first";
    case EqualityClass::second: return "second";
    case EqualityClass::both: return "both";
  }
  return "none";
}

/// Integer-ness tolerance for m*, which is O(n) and goes through exp/ln.
inline double m_star_integer_tol(std::size_t n) { return 1e-8 * static_cast<double>(n); }

/// Structural equality classification. `tol` is an absolute tolerance on
/// magnitudes. "first" needs all |x_i| equal; "second" additionally admits
/// vectors with exactly m = m* equal nonzero magnitudes and zeros elsewhere.
inline EqualityClass classify_equality(const Signal& x, const Exponents& e, double tol) {
  if (!(tol > 0.0)) throw DomainError("classification tolerance must be > 0");
  const auto [hi, lo] = max_abs_min_abs(x);
  if (hi - lo <= tol) return EqualityClass::both;

  const double m = m_star(x.size(), e);
  const double m_int = std::round(m);
  if (m_int < 1.0 || std::abs(m - m_int) > m_star_integer_tol(x.size())) {
    return EqualityClass::none;
  }
  std::size_t support = 0;
  double nz_hi = 0.0;
  double nz_lo = hi;
  for (double v : x.entries()) {
    const double a = std::abs(v);
    if (a > tol) {
      ++support;
      nz_hi = std::max(nz_hi, a);
      nz_lo = std::min(nz_lo, a);
    }
  }
  if (support == static_cast<std::size_t>(m_int) && nz_hi - nz_lo <= tol) {
    return EqualityClass::second;
  }
  return EqualityClass::none;
}

/// Full evaluation of both sides of the gap inequality for one (x, p, q).
struct GapReport {
  std::size_t n = 0;
  double p = 0.0;
  double q = 0.0;
  double lhs_norm_q = 0.0;
  double scaled_norm_p = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  double range = 0.0;
  bool equality_first = false;
  bool equality_second = false;
  double m_star = 0.0;
  bool verified = false;
  std::optional<std::string> warning;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// Evaluates the gap and its bound, classifies equality numerically, and
/// cross-checks that against the structural conditions. Tolerances are
/// relative to max(1, max_i |x_i|).
inline GapReport verify(const Signal& x, const Exponents& e, double tol_eq = 1e-9) {
  if (!(tol_eq > 0.0)) throw DomainError("equality tolerance must be > 0");
  const detail::GapParts parts = detail::gap_parts(x.entries(), e);

  GapReport r;
  r.n = x.size();
  r.p = e.p();
  r.q = e.q();
  r.lhs_norm_q = parts.lhs_norm_q;
  r.scaled_norm_p = parts.scaled_norm_p;
  r.gap = parts.lhs_norm_q - parts.scaled_norm_p;
  r.range = parts.max_abs - parts.min_abs;
  r.bound = detail::n_root_q(r.n, e) * sharpness_constant(e) * r.range;
  r.slack = r.bound - r.gap;
  r.m_star = m_star(r.n, e);

  const double scale = std::max(1.0, parts.max_abs);
  const double tol = tol_eq * scale;
  r.equality_first = std::abs(r.gap) <= tol;
  r.equality_second = std::abs(r.slack) <= tol;
  r.verified = r.gap >= -tol && r.slack >= -tol;

  std::string warning;
  auto append = [&warning](const std::string& w) {
    if (!warning.empty()) warning += "; ";
    warning += w;
  };
  if (!r.verified) {
    append("inequality violated beyond tolerance");
  }
  const EqualityClass structural = classify_equality(x, e, tol);
  const bool s_first = structural == EqualityClass::both || structural == EqualityClass::first;
  const bool s_second = structural == EqualityClass::both || structural == EqualityClass::second;
  if (s_first != r.equality_first || s_second != r.equality_second) {
    append("numeric equality flags (first=" + std::string(r.equality_first ? "true" : "false") +
           ", second=" + (r.equality_second ? "true" : "false") +
           ") disagree with structural classification '" + std::string(to_string(structural)) +
           "'");
  }
  const double tol_int = m_star_integer_tol(r.n);
  const double frac = std::abs(r.m_star - std::round(r.m_star));
  if (frac > tol_int && frac < 100.0 * tol_int) {
    append("m_star is within 100*tol_int of an integer but outside tol_int");
  }
  if (!warning.empty()) r.warning = std::move(warning);
  return r;
}

/// s(x, y) = (k x^q + (n-k) y^q)^{1/q} - n^{1/q-1/p} (k x^p + (n-k) y^p)^{1/p}
/// for x > y >= 0 and 1 <= k < n.
inline double lemma1_s(double xv, double yv, std::size_t n, std::size_t k, const Exponents& e) {
  if (!std::isfinite(xv) || !std::isfinite(yv) || !(xv > yv) || !(yv >= 0.0)) {
    throw DomainError("lemma1_s requires x > y >= 0");
  }
  if (k < 1 || k >= n) throw DomainError("lemma1_s requires 1 <= k < n");
  return detail::two_level_gap(xv, yv, static_cast<double>(n), static_cast<double>(k), e);
}

}  // namespace normgap

#endif  // NORMGAP_GAPBOUND_HPP
