#include <cstdlib>
#include <string_view>

#include "graphsep/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace graphsep::simd {

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",         scalar::rotate,      scalar::axpy,    scalar::scale_copy,
      scalar::dot,      scalar::sum_squares, scalar::sum_abs, scalar::sum_squared_diff,
  };
  return table;
}

const KernelTable* avx2_kernels() {
#if GRAPHSEP_HAVE_AVX2
  static const KernelTable table{
      "avx2",         avx2::rotate,      avx2::axpy,    avx2::scale_copy,
      avx2::dot,      avx2::sum_squares, avx2::sum_abs, avx2::sum_squared_diff,
  };
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  const char* env = std::getenv("GRAPHSEP_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace graphsep::simd
