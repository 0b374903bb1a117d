#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cuntzsim {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

/// Dense row-major complex matrix. Products go through the runtime-selected
/// kernels in kernels.hpp.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  /// Column vector (n x 1).
  static CMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  std::span<const Complex> values() const { return data_; }
  std::span<Complex> values() { return data_; }

  CMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);
  /// this += s * other
  CMatrix& add_scaled(Complex s, const CMatrix& other);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
/// |u><v|
CMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

StateVector apply(const CMatrix& m, std::span<const Complex> v);
/// <u, v> conjugate-linear in u.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

/// ||P^2 - P|| and ||P - P*|| both below tol.
bool is_projector(const CMatrix& p, double tol = 1e-10);
bool is_hermitian(const CMatrix& m, double tol = 1e-12);

}  // namespace cuntzsim
