#include <atomic>
#include <cstdlib>
#include <string>

#include "cuntzsim/errors.hpp"
#include "cuntzsim/kernels.hpp"

namespace cuntzsim::kernels {

#ifndef CUNTZSIM_HAVE_AVX2
namespace detail {
const KernelTable* avx2_table_if_compiled() { return nullptr; }
}  // namespace detail
#endif

bool cpu_supports_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

const KernelTable* avx2_table() {
  if (!cpu_supports_avx2()) return nullptr;
  return detail::avx2_table_if_compiled();
}

namespace {

const KernelTable* initial_selection() {
  if (const char* env = std::getenv("CUNTZSIM_SIMD"); env != nullptr && std::string(env) == "scalar") {
    return &scalar_table();
  }
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_selection()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  const KernelTable* t = isa == Isa::scalar ? &scalar_table() : avx2_table();
  if (t == nullptr) throw InvalidArgument("kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
  current().store(t, std::memory_order_release);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace cuntzsim::kernels
