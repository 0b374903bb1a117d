#include "cuntzsim/kernels.hpp"

#include <algorithm>

namespace cuntzsim::kernels {
namespace {

void gemm_scalar(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c) {
  std::fill(c, c + m * n, cd{});
  for (std::size_t i = 0; i < m; ++i) {
    cd* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const cd* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] += cd(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
  }
}

void axpy_scalar(std::size_t n, cd alpha, const cd* x, cd* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cd dot_scalar(std::size_t n, const cd* x, const cd* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

constexpr KernelTable kScalar{Isa::scalar, &gemm_scalar, &axpy_scalar, &dot_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace cuntzsim::kernels
