#ifndef NORMGAP_SIGNAL_HPP
#define NORMGAP_SIGNAL_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normgap/error.hpp"

namespace normgap {

/// Finite real n-vector, n >= 1. Entries are validated once at construction
/// and never change afterwards.
class Signal {
 public:
  explicit Signal(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
      throw InvalidInput("signal must have at least one entry");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!std::isfinite(entries_[i])) {
        throw InvalidInput("signal entry " + std::to_string(i) + " is not finite");
      }
    }
  }

  Signal(std::initializer_list<double> entries) : Signal(std::vector<double>(entries)) {}

  [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<double> entries_;
};

/// Strictly positive, finite exponent for norm evaluation.
class PExponent {
 public:
  // NOLINTNEXTLINE(google-explicit-constructor)
  PExponent(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw DomainError("exponent p must be finite and > 0, got " + std::to_string(p));
    }
  }

  [[nodiscard]] double value() const noexcept { return p_; }
  // NOLINTNEXTLINE(google-explicit-constructor)
  operator double() const noexcept { return p_; }

 private:
  double p_;
};

}  // namespace normgap

#endif  // NORMGAP_SIGNAL_HPP
