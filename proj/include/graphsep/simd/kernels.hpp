#pragma once

#include <cstddef>
#include <string_view>

// Inner loops of the dense linear algebra, in a scalar reference version and
// vectorized variants. One table is picked at first use from the CPU features
// (GRAPHSEP_SIMD=scalar forces the reference table).
//
// Elementwise kernels never fuse multiply-add, so every variant is bitwise
// identical to the scalar one. Reductions use lane-parallel partial sums and
// agree with the scalar order only to rounding.
namespace graphsep::simd {

struct KernelTable {
  std::string_view name;

  // x[i], y[i] <- c x[i] - s y[i], s x[i] + c y[i]
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  // y[i] += a x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // y[i] = a x[i]
  void (*scale_copy)(double a, const double* x, double* y, std::size_t n);

  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum_squares)(const double* x, std::size_t n);
  double (*sum_abs)(const double* x, std::size_t n);
  // sum (x[i] - y[i])^2
  double (*sum_squared_diff)(const double* x, const double* y, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Table used by the library.
const KernelTable& active();

}  // namespace graphsep::simd
