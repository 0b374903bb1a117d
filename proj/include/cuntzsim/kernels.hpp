#pragma once

// Dense complex kernels behind CMatrix. A scalar reference implementation is
// always present; an AVX2+FMA variant is compiled on x86-64 and selected at
// runtime when the CPU supports it. CUNTZSIM_SIMD=scalar forces the reference
// path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace cuntzsim::kernels {

using cd = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  /// c (m x n) = a (m x k) * b (k x n), all row-major; c is overwritten.
  void (*gemm)(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c);
  /// y += alpha * x
  void (*axpy)(std::size_t n, cd alpha, const cd* x, cd* y);
  /// sum_i conj(x_i) * y_i
  cd (*dot)(std::size_t n, const cd* x, const cd* y);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

bool cpu_supports_avx2();

const KernelTable& active();
/// Overrides the runtime selection; throws InvalidArgument if the ISA is unavailable.
void select(Isa isa);

std::string_view isa_name(Isa isa);

inline void gemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c) {
  active().gemm(m, n, k, a, b, c);
}
inline void axpy(std::size_t n, cd alpha, const cd* x, cd* y) { active().axpy(n, alpha, x, y); }
inline cd dot(std::size_t n, const cd* x, const cd* y) { return active().dot(n, x, y); }

namespace detail {
// Defined in kernels_avx2.cpp when available.
const KernelTable* avx2_table_if_compiled();
}  // namespace detail

}  // namespace cuntzsim::kernels
