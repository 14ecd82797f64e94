// Copyright (c) 2026 the helm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HELM_ERROR_HPP
#define HELM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace helm {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Pivot vanished to working precision during full LU.
struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/// ILU hit a zero pivot; a smaller drop tolerance is needed.
struct ZeroPivotError : Error {
  explicit ZeroPivotError(const std::string& what) : Error(what) {}
};

/// Matrix passed to the HPD factorization is not positive definite.
struct NotHpdError : Error {
  explicit NotHpdError(const std::string& what) : Error(what) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace helm

#endif  // HELM_ERROR_HPP
