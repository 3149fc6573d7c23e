#include "blomkit/matrices.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace blomkit {

VandermondeSpec VandermondeSpec::with_default_points(std::uint32_t network_size,
                                                     std::uint32_t row_count, Prime modulus) {
  VandermondeSpec spec{network_size, row_count, modulus, {}};
  spec.points.reserve(network_size);
  for (std::uint32_t i = 1; i <= network_size; ++i) spec.points.push_back(i);
  return spec;
}

void VandermondeSpec::validate() const {
  if (points.size() != network_size) {
    throw std::invalid_argument("expected " + std::to_string(network_size) + " evaluation points, got " +
                                std::to_string(points.size()));
  }
  if (network_size > modulus.value() - 1) {
    throw std::invalid_argument("need " + std::to_string(network_size) +
                                " distinct nonzero points but GF(" + std::to_string(modulus.value()) +
                                ") has only " + std::to_string(modulus.value() - 1));
  }
  if (row_count == 0) {
    throw std::invalid_argument("row count must be positive");
  }
  std::unordered_set<FieldElement> seen;
  for (FieldElement p : points) {
    if (p == 0 || p >= modulus.value()) {
      throw std::invalid_argument("evaluation points must lie in [1, q)");
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("duplicate evaluation point " + std::to_string(p));
    }
  }
}

void HadamardSpec::validate() const {
  if (order == 0 || !std::has_single_bit(order)) {
    throw std::invalid_argument("Hadamard order " + std::to_string(order) + " is not a power of two");
  }
  if (row_count == 0 || row_count > order) {
    throw std::invalid_argument("row count must be in [1, order]");
  }
}

FieldMatrix vandermonde(const VandermondeSpec& spec) {
  spec.validate();
  FieldMatrix m(spec.row_count, spec.network_size);
  for (std::size_t c = 0; c < spec.network_size; ++c) {
    FieldElement value = 1;
    for (std::size_t r = 0; r < spec.row_count; ++r) {
      m(r, c) = value;
      value = mul_mod(value, spec.points[c], spec.modulus);
    }
  }
  return m;
}

FieldMatrix nonbinary_hadamard(const HadamardSpec& spec) {
  spec.validate();
  const FieldElement minus_one = spec.modulus.value() - 1;
  FieldMatrix m(spec.order, spec.order);
  for (std::uint32_t r = 0; r < spec.order; ++r) {
    for (std::uint32_t c = 0; c < spec.order; ++c) {
      m(r, c) = (std::popcount(r & c) % 2 == 0) ? 1 : minus_one;
    }
  }
  return m;
}

std::vector<FieldElement> hadamard_column(std::uint32_t order, std::uint32_t col, std::uint32_t m,
                                          Prime q) {
  if (order == 0 || !std::has_single_bit(order)) {
    throw std::invalid_argument("Hadamard order " + std::to_string(order) + " is not a power of two");
  }
  if (col < 1 || col > order) {
    throw std::invalid_argument("column " + std::to_string(col) + " out of range [1, " +
                                std::to_string(order) + "]");
  }
  if (m > order) {
    throw std::invalid_argument("row count exceeds Hadamard order");
  }
  const FieldElement minus_one = q.value() - 1;
  const std::uint32_t c = col - 1;
  std::vector<FieldElement> out(m);
  for (std::uint32_t r = 0; r < m; ++r) {
    out[r] = (std::popcount(r & c) % 2 == 0) ? 1 : minus_one;
  }
  return out;
}

std::uint32_t next_power_of_two(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("no power of two at or above zero requested size");
  return std::bit_ceil(n);
}

}  // namespace blomkit
