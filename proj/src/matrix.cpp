#include "cuntzsim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cuntzsim/errors.hpp"
#include "cuntzsim/kernels.hpp"

namespace cuntzsim {
namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::column(std::span<const Complex> v) {
  CMatrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.data());
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex CMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  return std::sqrt(kernels::dot(data_.size(), data_.data(), data_.data()).real());
}

CMatrix& CMatrix::operator+=(const CMatrix& other) { return add_scaled(1.0, other); }
CMatrix& CMatrix::operator-=(const CMatrix& other) { return add_scaled(-1.0, other); }

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix& CMatrix::add_scaled(Complex s, const CMatrix& other) {
  require_same_shape(*this, other, "add");
  kernels::axpy(data_.size(), s, other.data(), data_.data());
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()));
  }
  CMatrix c(a.rows(), b.cols());
  kernels::gemm(a.rows(), b.cols(), a.cols(), a.data(), b.data(), c.data());
  return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      if (s == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

CMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  CMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

StateVector apply(const CMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw DimensionMismatch("apply: matrix/vector size mismatch");
  StateVector out(m.rows());
  kernels::gemm(m.rows(), 1, m.cols(), m.data(), v.data(), out.data());
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionMismatch("inner: vector size mismatch");
  return kernels::dot(u.size(), u.data(), v.data());
}

double norm(std::span<const Complex> v) { return std::sqrt(inner(v, v).real()); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  return (a - b).frobenius_norm();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.is_square() && max_abs_diff(m, m.adjoint()) < tol;
}

bool is_projector(const CMatrix& p, double tol) {
  return p.is_square() && max_abs_diff(p * p, p) < tol && max_abs_diff(p, p.adjoint()) < tol;
}

}  // namespace cuntzsim
