#include "blomkit/field.hpp"

#include <stdexcept>
#include <string>

namespace blomkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t q) : q_(q) {
  if (q > 0xFFFFFFFFull) {
    throw std::invalid_argument("modulus " + std::to_string(q) + " exceeds the supported 32-bit range");
  }
  if (!is_prime(q)) {
    throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
  }
}

FieldElement inv_mod(FieldElement a, Prime q) {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  // Extended Euclid on (a, q); q prime, so gcd is 1.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(q.value());
  std::int64_t new_r = static_cast<std::int64_t>(a % q.value());
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(q.value());
  return static_cast<FieldElement>(t);
}

FieldElement pow_mod(FieldElement base, std::uint64_t exp, Prime q) {
  FieldElement result = 1 % q.value();
  FieldElement acc = base % q.value();
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, acc, q);
    acc = mul_mod(acc, acc, q);
    exp >>= 1;
  }
  return result;
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty()) return {};
  FieldMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw std::invalid_argument("ragged row lengths in matrix literal");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<FieldElement> FieldMatrix::column(std::size_t c) const {
  assert(c < cols_);
  std::vector<FieldElement> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

FieldMatrix FieldMatrix::top_left(std::size_t r, std::size_t c) const {
  assert(r <= rows_ && c <= cols_);
  FieldMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

void FieldMatrix::swap_rows(std::size_t a, std::size_t b) {
  assert(a < rows_ && b < rows_);
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, Prime q) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      FieldElement aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = add_mod(out(i, j), mul_mod(aik, b(k, j), q), q);
      }
    }
  }
  return out;
}

namespace {

// In-place forward elimination with first-nonzero pivoting; returns the pivot
// column of each pivot row, in order.
std::vector<std::size_t> row_echelon(FieldMatrix& m, Prime q) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    m.swap_rows(pivot_row, found);
    FieldElement pivot_inv = inv_mod(m(pivot_row, col), q);
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(pivot_row, c) = mul_mod(m(pivot_row, c), pivot_inv, q);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      FieldElement factor = m(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = sub_mod(m(r, c), mul_mod(factor, m(pivot_row, c), q), q);
      }
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(FieldMatrix m, Prime q) { return row_echelon(m, q).size(); }

std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& a,
                                                      std::span<const FieldElement> rhs,
                                                      Prime q) {
  if (rhs.size() != a.rows()) {
    throw std::invalid_argument("right-hand side length does not match row count");
  }
  FieldMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = rhs[r];
  }
  std::vector<std::size_t> pivots = row_echelon(aug, q);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = nonzero row
  std::vector<FieldElement> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    // Reduced echelon form: the pivot row directly reads off the unknown.
    x[pivots[i]] = aug(i, a.cols());
  }
  return x;
}

std::optional<std::vector<FieldElement>> in_row_space(const FieldMatrix& rows,
                                                      std::span<const FieldElement> target,
                                                      Prime q) {
  if (target.size() != rows.cols() && rows.rows() != 0) {
    throw std::invalid_argument("target length does not match constraint width");
  }
  if (rows.rows() == 0) {
    for (FieldElement v : target) {
      if (v != 0) return std::nullopt;
    }
    return std::vector<FieldElement>{};
  }
  return solve_linear(rows.transposed(), target, q);
}

}  // namespace blomkit
