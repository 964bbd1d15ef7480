#ifndef NORMGAP_RANDOM_HPP
#define NORMGAP_RANDOM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string_view>
#include <vector>

#include "normgap/error.hpp"

namespace normgap {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of substream `index` under master `seed`. Each trial owns its own
/// substream, so results do not depend on how trials are scheduled.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index));
}

using Rng = std::mt19937_64;

inline Rng make_substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(substream_seed(seed, index));
}

/// Signal generators for the falsification harness.
enum class Generator { uniform_cube, sparse_support, two_level_noisy, heavy_tailed };

inline constexpr Generator kAllGenerators[] = {Generator::uniform_cube, Generator::sparse_support,
                                               Generator::two_level_noisy,
                                               Generator::heavy_tailed};

inline std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::uniform_cube: return "uniform_cube";
    case Generator::sparse_support: return "sparse_support";
    case Generator::two_level_noisy: return "two_level_noisy";
    case Generator::heavy_tailed: return "heavy_tailed";
  }
  return "unknown";
}

namespace detail {

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double random_sign(Rng& rng) { return (rng() & 1U) ? 1.0 : -1.0; }

/// Overall magnitude 10^u, u uniform in [-3, 3].
inline double random_scale(Rng& rng) { return std::pow(10.0, uniform(rng, -3.0, 3.0)); }

inline std::vector<std::size_t> random_support(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[uniform_index(rng, i, n - 1)]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace detail

/// Two-level vector: k entries near `high`, n - k near `low`, Gaussian noise
/// of standard deviation `noise`, random signs, random placement.
inline std::vector<double> two_level_vector(Rng& rng, std::size_t n, std::size_t k, double high,
                                            double low, double noise) {
  if (k > n) throw DomainError("two-level vector needs k <= n");
  std::vector<double> x(n, low);
  for (std::size_t i : detail::random_support(rng, n, k)) x[i] = high;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double& v : x) {
    if (noise > 0.0) v += noise * gauss(rng);
    v *= detail::random_sign(rng);
  }
  return x;
}

inline std::vector<double> sample_vector(Rng& rng, Generator g, std::size_t n) {
  if (n == 0) throw DomainError("cannot sample an empty vector");
  std::vector<double> x(n, 0.0);
  const double scale = detail::random_scale(rng);
  switch (g) {
    case Generator::uniform_cube: {
      for (double& v : x) v = scale * detail::uniform(rng, -1.0, 1.0);
      break;
    }
    case Generator::sparse_support: {
      const std::size_t k = detail::uniform_index(rng, 1, n);
      for (std::size_t i : detail::random_support(rng, n, k)) {
        x[i] = scale * detail::uniform(rng, -1.0, 1.0);
      }
      break;
    }
    case Generator::two_level_noisy: {
      const std::size_t k = n > 1 ? detail::uniform_index(rng, 1, n - 1) : 1;
      // A quarter of the draws sit exactly on a border configuration.
      const bool exact = detail::uniform_index(rng, 0, 3) == 0;
      const double low = exact && (rng() & 1U) ? 0.0 : detail::uniform(rng, 0.0, 1.0);
      const double high = low + detail::uniform(rng, 1e-6, 1.0);
      const double noise = exact ? 0.0 : std::pow(10.0, detail::uniform(rng, -8.0, -1.0));
      x = two_level_vector(rng, n, k, scale * high, scale * low, scale * noise);
      break;
    }
    case Generator::heavy_tailed: {
      std::cauchy_distribution<double> cauchy(0.0, 1.0);
      for (double& v : x) {
        v = scale * cauchy(rng);
        if (!std::isfinite(v)) v = 0.0;
      }
      break;
    }
  }
  return x;
}

/// Draws a generator uniformly, then a vector from it.
inline std::vector<double> sample_mixture(Rng& rng, std::size_t n, Generator* chosen = nullptr) {
  const Generator g = kAllGenerators[detail::uniform_index(rng, 0, 3)];
  if (chosen != nullptr) *chosen = g;
  return sample_vector(rng, g, n);
}

}  // namespace normgap

#endif  // NORMGAP_RANDOM_HPP
