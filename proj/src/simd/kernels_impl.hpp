#pragma once

#include <cstddef>

namespace graphsep::simd {

namespace scalar {
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale_copy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_squared_diff(const double* x, const double* y, std::size_t n);
}  // namespace scalar

#if GRAPHSEP_HAVE_AVX2
namespace avx2 {
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale_copy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_squared_diff(const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace graphsep::simd
