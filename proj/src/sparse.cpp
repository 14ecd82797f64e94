// Copyright (c) 2026 the helm authors
// SPDX-License-Identifier: Apache-2.0

#include "helm/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helm/error.hpp"

namespace helm {

namespace {
constexpr double kPruneThreshold = 1e-300;
}

Complex inner(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw DimensionMismatchError("inner: size mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm2(const Vector& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

void axpy(Complex alpha, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatchError("axpy: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(Complex alpha, Vector& x) {
  for (auto& v : x) v *= alpha;
}

Vector subtract(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw DimensionMismatchError("subtract: size mismatch");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vector zeros(std::size_t n) { return Vector(n, Complex(0.0)); }

Vector ones(std::size_t n) { return Vector(n, Complex(1.0)); }

SparseComplexMatrix SparseComplexMatrix::from_triplets(
    std::size_t n_rows, std::size_t n_cols, std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= n_rows || t.col >= n_cols)
      throw DimensionMismatchError("from_triplets: index out of range");
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });

  SparseComplexMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_offsets_.assign(n_rows + 1, 0);
  m.col_indices_.reserve(triplets.size());
  m.values_.reserve(triplets.size());

  std::size_t i = 0;
  for (std::size_t row = 0; row < n_rows; ++row) {
    m.row_offsets_[row] = m.values_.size();
    while (i < triplets.size() && triplets[i].row == row) {
      const std::size_t col = triplets[i].col;
      Complex sum = 0.0;
      while (i < triplets.size() && triplets[i].row == row &&
             triplets[i].col == col) {
        sum += triplets[i].value;
        ++i;
      }
      if (std::abs(sum) >= kPruneThreshold) {
        m.col_indices_.push_back(col);
        m.values_.push_back(sum);
      }
    }
  }
  m.row_offsets_[n_rows] = m.values_.size();
  return m;
}

SparseComplexMatrix SparseComplexMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Complex(1.0)});
  return from_triplets(n, n, std::move(t));
}

Complex SparseComplexMatrix::coeff(std::size_t i, std::size_t j) const {
  const auto begin = col_indices_.begin() + static_cast<long>(row_offsets_[i]);
  const auto end = col_indices_.begin() + static_cast<long>(row_offsets_[i + 1]);
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return Complex(0.0);
  return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

Vector SparseComplexMatrix::apply(const Vector& x) const {
  if (x.size() != n_cols_)
    throw DimensionMismatchError("matvec: expected size " +
                                 std::to_string(n_cols_) + ", got " +
                                 std::to_string(x.size()));
  Vector y(n_rows_, Complex(0.0));
  for (std::size_t i = 0; i < n_rows_; ++i) {
    Complex s = 0.0;
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
      s += values_[p] * x[col_indices_[p]];
    y[i] = s;
  }
  return y;
}

Vector SparseComplexMatrix::apply_adjoint(const Vector& x) const {
  if (x.size() != n_rows_)
    throw DimensionMismatchError("adjoint_matvec: expected size " +
                                 std::to_string(n_rows_) + ", got " +
                                 std::to_string(x.size()));
  Vector y(n_cols_, Complex(0.0));
  for (std::size_t i = 0; i < n_rows_; ++i) {
    const Complex xi = x[i];
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
      y[col_indices_[p]] += std::conj(values_[p]) * xi;
  }
  return y;
}

SparseComplexMatrix SparseComplexMatrix::adjoint() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
      t.push_back({col_indices_[p], i, std::conj(values_[p])});
  return from_triplets(n_cols_, n_rows_, std::move(t));
}

SparseComplexMatrix SparseComplexMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
      t.push_back({col_indices_[p], i, values_[p]});
  return from_triplets(n_cols_, n_rows_, std::move(t));
}

SparseComplexMatrix SparseComplexMatrix::multiply(
    const SparseComplexMatrix& other) const {
  if (n_cols_ != other.n_rows_)
    throw DimensionMismatchError("multiply: inner dimension mismatch");
  // Row-wise product with a dense accumulator over the result row.
  std::vector<Complex> work(other.n_cols_, Complex(0.0));
  std::vector<std::size_t> mark(other.n_cols_, static_cast<std::size_t>(-1));
  std::vector<std::size_t> pattern;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n_rows_; ++i) {
    pattern.clear();
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
      const std::size_t k = col_indices_[p];
      const Complex aik = values_[p];
      for (std::size_t q = other.row_offsets_[k]; q < other.row_offsets_[k + 1];
           ++q) {
        const std::size_t j = other.col_indices_[q];
        if (mark[j] != i) {
          mark[j] = i;
          work[j] = Complex(0.0);
          pattern.push_back(j);
        }
        work[j] += aik * other.values_[q];
      }
    }
    for (const std::size_t j : pattern) t.push_back({i, j, work[j]});
  }
  return from_triplets(n_rows_, other.n_cols_, std::move(t));
}

Vector SparseComplexMatrix::diagonal() const {
  const std::size_t n = std::min(n_rows_, n_cols_);
  Vector d(n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) d[i] = coeff(i, i);
  return d;
}

double SparseComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s);
}

double SparseComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<Triplet> SparseComplexMatrix::to_triplets() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
      t.push_back({i, col_indices_[p], values_[p]});
  return t;
}

Vector matvec(const SparseComplexMatrix& A, const Vector& x) {
  return A.apply(x);
}

Vector adjoint_matvec(const SparseComplexMatrix& A, const Vector& x) {
  return A.apply_adjoint(x);
}

SparseComplexMatrix linear_combination(
    const std::vector<std::pair<Complex, const SparseComplexMatrix*>>& terms) {
  if (terms.empty()) throw Error("linear_combination: no terms");
  const std::size_t nr = terms.front().second->rows();
  const std::size_t nc = terms.front().second->cols();
  std::vector<Triplet> t;
  for (const auto& [coeff, mat] : terms) {
    if (mat->rows() != nr || mat->cols() != nc)
      throw DimensionMismatchError("linear_combination: shape mismatch");
    for (auto trip : mat->to_triplets()) {
      trip.value *= coeff;
      t.push_back(trip);
    }
  }
  return SparseComplexMatrix::from_triplets(nr, nc, std::move(t));
}

}  // namespace helm
