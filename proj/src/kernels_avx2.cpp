// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a
// runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "cuntzsim/kernels.hpp"

namespace cuntzsim::kernels {
namespace {

// Complex numbers are interleaved (re, im); one __m256d holds two of them.
inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// (ar + i ai) * b for two packed complex values b.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

void gemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c) {
  std::fill(c, c + m * n, cd{});
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    cd* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cd av = a[i * k + p];
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(av.real());
      const __m256d ai = _mm256_set1_pd(av.imag());
      const cd* brow = b + p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        store2(crow + j, _mm256_add_pd(load2(crow + j), cmul_broadcast(ar, ai, load2(brow + j))));
      }
      for (; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void axpy_avx2(std::size_t n, cd alpha, const cd* x, cd* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_broadcast(ar, ai, load2(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

cd dot_avx2(std::size_t n, const cd* x, const cd* y) {
  // straight = (xr*yr, xi*yi), crossed = (xr*yi, xi*yr), summed lane-wise.
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    straight = _mm256_fmadd_pd(xv, yv, straight);
    crossed = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), crossed);
  }
  alignas(32) double s[4];
  alignas(32) double t[4];
  _mm256_store_pd(s, straight);
  _mm256_store_pd(t, crossed);
  double re = (s[0] + s[1]) + (s[2] + s[3]);
  double im = (t[0] - t[1]) + (t[2] - t[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

constexpr KernelTable kAvx2{Isa::avx2, &gemm_avx2, &axpy_avx2, &dot_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table_if_compiled() { return &kAvx2; }
}  // namespace detail

}  // namespace cuntzsim::kernels
