#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qbound {

/**
 * Seedable random source with a fully pinned algorithm, so fixtures can be
 * regenerated bit-for-bit from a seed on any platform (and reimplemented in
 * other languages):
 *
 *   - stream: std::mt19937_64 (algorithm fixed by the C++ standard)
 *   - uniform(): top 53 bits of the next 64-bit word, scaled to [0, 1)
 *   - gaussian(): Box-Muller on two uniforms; the second value of each
 *     pair is cached and returned by the following call
 *
 * std::uniform_real_distribution / std::normal_distribution are avoided on
 * purpose: their output sequences are implementation-defined.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));  // log(1-u1), safe at u1 = 0
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Gaussian real and imaginary parts, each unit variance.
  std::complex<double> complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qbound
