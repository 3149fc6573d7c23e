#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace blomkit {

/// Deterministic pseudo-random stream for secret-matrix generation.
///
/// The engine is std::mt19937_64 seeded directly with the 64-bit seed; its
/// output sequence is fully specified by the C++ standard, so identical seeds
/// give identical streams on every platform and standard library. Draws below
/// a bound use rejection sampling against the largest multiple of the bound
/// (std::uniform_int_distribution is implementation-defined and would break
/// cross-toolchain reproducibility).
///
/// Not cryptographically strong; suitable for simulation and fixtures only.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform draw needs a positive bound");
    // Largest multiple of bound representable in 64 bits.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace blomkit
