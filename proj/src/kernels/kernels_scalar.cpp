#include "mcg/kernels.hpp"

// Reference implementations. These define the semantics the SIMD variants are
// tested against.

namespace mcg::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void blend_scalar(double t, const double* x, const double* y, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + t * (y[i] - x[i]);
}

void mul_scalar(double* acc, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] *= v[i];
}

void mul_one_minus_scalar(double* acc, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] *= 1.0 - v[i];
}

void one_minus_mul_scalar(const double* a, const double* b, double* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 1.0 - a[i] * b[i];
}

}  // namespace mcg::kernels::detail
