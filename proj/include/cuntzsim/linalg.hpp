#pragma once

// Spectral and rank computations, backed by Eigen.

#include <span>
#include <vector>

#include "cuntzsim/matrix.hpp"

namespace cuntzsim {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k is the eigenvector of values[k]
};

HermitianEigen eigh(const CMatrix& hermitian);

double min_eigenvalue(const CMatrix& hermitian);

/// Dimension of span{ops} as vectors in C^(rows*cols), via SVD with relative
/// threshold tol.
std::size_t span_rank(std::span<const CMatrix> ops, double tol = 1e-9);

/// Numerical rank of a single matrix.
std::size_t matrix_rank(const CMatrix& m, double tol = 1e-9);

}  // namespace cuntzsim
