#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace framekit {

// Deterministic random source.  mt19937_64 is fully specified by the standard;
// uniform doubles and the Box-Muller step below are spelled out explicitly so
// that a seed identifies the same stream everywhere (std::normal_distribution
// and std::generate_canonical are implementation-defined and deliberately
// avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (one value per call, no caching so the
  // stream position is easy to reason about).
  double next_gaussian() {
    double u = next_unit();
    double v = next_unit();
    while (u <= 0.0) u = next_unit();  // avoid log(0)
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(two_pi * v);
  }

  std::complex<double> next_complex_gaussian() {
    double re = next_gaussian();
    double im = next_gaussian();
    return {re, im};
  }

  // n in [0, bound)
  std::uint64_t next_below(std::uint64_t bound) {
    // bounded rejection; bias-free and standard-independent
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return x % bound;
  }

 private:
  std::mt19937_64 gen_;
};

// Stable seed derivation for (master seed, label, index) triples, used by the
// property runner so each trial is independently replayable.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

}  // namespace framekit
