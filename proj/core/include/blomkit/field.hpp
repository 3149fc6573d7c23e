#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace blomkit {

/// A GF(q) element stored as its least nonnegative residue in [0, q).
using FieldElement = std::uint64_t;

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Validated prime modulus.
///
/// Bounded to 32 bits so that the product of two reduced residues plus a
/// reduced accumulator always fits in 64 bits; every operation below reduces
/// eagerly, so no intermediate ever needs more headroom than that.
class Prime {
 public:
  Prime() : q_(2) {}  // smallest field, keeps default-constructed specs valid
  explicit Prime(std::uint64_t q);

  std::uint64_t value() const { return q_; }

  friend bool operator==(Prime a, Prime b) { return a.q_ == b.q_; }
  friend bool operator!=(Prime a, Prime b) { return a.q_ != b.q_; }

 private:
  std::uint64_t q_;
};

inline FieldElement add_mod(FieldElement a, FieldElement b, Prime q) {
  FieldElement s = a + b;
  if (s >= q.value()) s -= q.value();
  return s;
}

inline FieldElement sub_mod(FieldElement a, FieldElement b, Prime q) {
  return a >= b ? a - b : a + q.value() - b;
}

inline FieldElement mul_mod(FieldElement a, FieldElement b, Prime q) {
  return (a * b) % q.value();
}

inline FieldElement neg_mod(FieldElement a, Prime q) {
  return a == 0 ? 0 : q.value() - a;
}

/// Multiplicative inverse via the extended Euclidean algorithm.
/// Throws std::domain_error for a = 0.
FieldElement inv_mod(FieldElement a, Prime q);

FieldElement pow_mod(FieldElement base, std::uint64_t exp, Prime q);

/// Dense row-major matrix over GF(q). The matrix does not carry its modulus;
/// producers keep every entry reduced.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols, FieldElement fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static FieldMatrix identity(std::size_t n);
  static FieldMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  FieldElement operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  FieldElement& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<const FieldElement> row(std::size_t r) const {
    assert(r < rows_);
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<FieldElement> column(std::size_t c) const;

  FieldMatrix transposed() const;
  /// Leading r x c submatrix.
  FieldMatrix top_left(std::size_t r, std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);

  const std::vector<FieldElement>& data() const { return data_; }

  bool operator==(const FieldMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Matrix product over GF(q). Throws std::invalid_argument on dimension
/// mismatch.
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, Prime q);

/// Row rank over GF(q) by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(FieldMatrix m, Prime q);

/// Solves a * x = rhs over GF(q); free variables are set to zero, so the
/// returned solution is deterministic. Returns nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& a,
                                                      std::span<const FieldElement> rhs,
                                                      Prime q);

/// Tests whether target is a linear combination of the rows of `rows`; on
/// success returns one coefficient vector (length rows.rows()).
std::optional<std::vector<FieldElement>> in_row_space(const FieldMatrix& rows,
                                                      std::span<const FieldElement> target,
                                                      Prime q);

}  // namespace blomkit
