// Copyright (c) 2026 the helm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HELM_SPARSE_HPP
#define HELM_SPARSE_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace helm {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

// ---- dense vector helpers ----------------------------------------------

/// Sesquilinear pairing (x, y) = y^* x.
Complex inner(const Vector& x, const Vector& y);
double norm2(const Vector& x);
/// y += alpha * x
void axpy(Complex alpha, const Vector& x, Vector& y);
void scale(Complex alpha, Vector& x);
Vector subtract(const Vector& x, const Vector& y);  // x - y
Vector zeros(std::size_t n);
Vector ones(std::size_t n);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Compressed-row complex matrix. Column indices are strictly increasing
/// within each row; entries of magnitude below 1e-300 are pruned when the
/// matrix is built.
class SparseComplexMatrix {
 public:
  SparseComplexMatrix() = default;

  static SparseComplexMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                           std::vector<Triplet> triplets);
  static SparseComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& col_indices() const { return col_indices_; }
  const std::vector<Complex>& values() const { return values_; }

  /// Entry lookup by binary search; zero if not stored.
  Complex coeff(std::size_t i, std::size_t j) const;

  Vector apply(const Vector& x) const;          // A x
  Vector apply_adjoint(const Vector& x) const;  // A^* x, without forming A^*

  SparseComplexMatrix adjoint() const;
  SparseComplexMatrix transpose() const;
  SparseComplexMatrix multiply(const SparseComplexMatrix& other) const;

  Vector diagonal() const;
  double frobenius_norm() const;
  double max_abs() const;

  std::vector<Triplet> to_triplets() const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> col_indices_;
  std::vector<Complex> values_;
};

/// y = A x
Vector matvec(const SparseComplexMatrix& A, const Vector& x);
/// y = A^* x
Vector adjoint_matvec(const SparseComplexMatrix& A, const Vector& x);

/// sum_i coeffs[i] * matrices[i]; all matrices must share dimensions.
SparseComplexMatrix linear_combination(
    const std::vector<std::pair<Complex, const SparseComplexMatrix*>>& terms);

}  // namespace helm

#endif  // HELM_SPARSE_HPP
