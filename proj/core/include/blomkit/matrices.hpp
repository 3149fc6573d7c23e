#pragma once

#include <cstdint>
#include <vector>

#include "blomkit/field.hpp"

namespace blomkit {

/// Generator input for the classic public matrix: rows are successive powers
/// of N distinct nonzero evaluation points.
struct VandermondeSpec {
  std::uint32_t network_size = 0;  // N, one column per node
  std::uint32_t row_count = 0;     // m
  Prime modulus;
  std::vector<FieldElement> points;  // length N, pairwise distinct, nonzero

  /// points default to 1..N.
  static VandermondeSpec with_default_points(std::uint32_t network_size, std::uint32_t row_count,
                                             Prime modulus);
  void validate() const;
};

/// Generator input for the Sylvester-construction public matrix.
struct HadamardSpec {
  std::uint32_t order = 0;      // power of two
  std::uint32_t row_count = 0;  // rows kept when truncating
  Prime modulus;

  void validate() const;
};

/// m x N matrix with entry (r, c) = points[c]^r (0-based r).
FieldMatrix vandermonde(const VandermondeSpec& spec);

/// Full order x order Sylvester Hadamard matrix over GF(q): entry (r, c) is 1
/// when popcount(r AND c) is even (0-based), else q-1 (the residue of -1).
FieldMatrix nonbinary_hadamard(const HadamardSpec& spec);

/// Rows 1..m of column `col` (1-based) of the non-binary Hadamard matrix,
/// synthesized in O(m) time without materializing the matrix.
std::vector<FieldElement> hadamard_column(std::uint32_t order, std::uint32_t col, std::uint32_t m,
                                          Prime q);

/// Smallest power of two >= n (n >= 1).
std::uint32_t next_power_of_two(std::uint32_t n);

}  // namespace blomkit
