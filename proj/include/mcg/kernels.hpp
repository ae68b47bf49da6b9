#pragma once

#include <cstddef>

// Vector kernels used by the solver's inner loops. Each operation has a plain
// scalar reference implementation and (on x86-64) an AVX2 variant; the public
// entry points dispatch at runtime on CPU capability. set_backend() overrides
// the dispatch, which the equivalence tests use to compare both paths.

namespace mcg::kernels {

enum class Backend { scalar, avx2 };

/// Best backend supported by this machine.
Backend preferred_backend();
Backend active_backend();
/// Force a backend. Throws std::invalid_argument if unsupported here.
void set_backend(Backend b);
const char* backend_name(Backend b);

/// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);
/// sum_i x[i]
double sum(const double* x, std::size_t n);
/// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
/// out[i] = x[i] + t * (y[i] - x[i]); out may alias x or y
void blend(double t, const double* x, const double* y, double* out, std::size_t n);
/// acc[i] *= v[i]
void mul(double* acc, const double* v, std::size_t n);
/// acc[i] *= 1 - v[i]
void mul_one_minus(double* acc, const double* v, std::size_t n);
/// out[i] = 1 - a[i] * b[i]; out may alias a or b
void one_minus_mul(const double* a, const double* b, double* out, std::size_t n);

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
double sum_scalar(const double* x, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void blend_scalar(double t, const double* x, const double* y, double* out, std::size_t n);
void mul_scalar(double* acc, const double* v, std::size_t n);
void mul_one_minus_scalar(double* acc, const double* v, std::size_t n);
void one_minus_mul_scalar(const double* a, const double* b, double* out, std::size_t n);

#if MCG_HAVE_AVX2
double dot_avx2(const double* a, const double* b, std::size_t n);
double sum_avx2(const double* x, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void blend_avx2(double t, const double* x, const double* y, double* out, std::size_t n);
void mul_avx2(double* acc, const double* v, std::size_t n);
void mul_one_minus_avx2(double* acc, const double* v, std::size_t n);
void one_minus_mul_avx2(const double* a, const double* b, double* out, std::size_t n);
#endif

}  // namespace detail

}  // namespace mcg::kernels
