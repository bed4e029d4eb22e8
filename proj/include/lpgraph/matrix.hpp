#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpgraph/error.hpp"
#include "lpgraph/poly.hpp"

namespace lpgraph {

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
  }

  /// The minor on the given row and column indices, in the given order.
  DenseMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    DenseMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

/// Bareiss fraction-free determinant over the Laurent ring. The empty
/// matrix has determinant 1. Throws Precondition on a non-square matrix.
LaurentPoly determinant(DenseMatrix<LaurentPoly> m);

/// Rank over the fraction field by fraction-free elimination.
std::size_t rank(DenseMatrix<LaurentPoly> m);

/// Rank of an integer matrix modulo the prime 2^61 - 1. Never exceeds the
/// rank over the rationals.
std::size_t rank_mod_prime(const DenseMatrix<Integer>& m);

}  // namespace lpgraph
