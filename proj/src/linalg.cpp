#include "cuntzsim/linalg.hpp"

#include <Eigen/Dense>

#include "cuntzsim/errors.hpp"

namespace cuntzsim {
namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::size_t rank_of(const Eigen::MatrixXcd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank;
}

}  // namespace

HermitianEigen eigh(const CMatrix& hermitian) {
  if (!hermitian.is_square()) throw DimensionMismatch("eigh: matrix is not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(hermitian));
  if (solver.info() != Eigen::Success) throw InternalConsistency("eigh: eigensolver did not converge");
  HermitianEigen out;
  const auto n = static_cast<std::size_t>(hermitian.rows());
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < n; ++i)
      out.vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  }
  return out;
}

double min_eigenvalue(const CMatrix& hermitian) {
  const auto e = eigh(hermitian);
  return e.values.empty() ? 0.0 : e.values.front();
}

std::size_t span_rank(std::span<const CMatrix> ops, double tol) {
  if (ops.empty()) return 0;
  const auto len = static_cast<Eigen::Index>(ops.front().size());
  Eigen::MatrixXcd stacked(len, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t c = 0; c < ops.size(); ++c) {
    if (static_cast<Eigen::Index>(ops[c].size()) != len) throw DimensionMismatch("span_rank: operator sizes differ");
    for (Eigen::Index i = 0; i < len; ++i) stacked(i, static_cast<Eigen::Index>(c)) = ops[c].data()[i];
  }
  return rank_of(stacked, tol);
}

std::size_t matrix_rank(const CMatrix& m, double tol) { return rank_of(to_eigen(m), tol); }

}  // namespace cuntzsim
