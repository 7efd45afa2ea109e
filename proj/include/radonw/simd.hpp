#pragma once

#include <cstddef>

// Small data-parallel reduction kernels used by the quadrature and Monte Carlo
// accumulation loops.  Scalar reference implementations are always available;
// an AVX2 variant is selected at runtime when the CPU supports it.  The two
// backends may differ by a few ulp (different association order), which the
// equivalence tests account for.

namespace radonw::simd {

double dot_scalar(const double* w, const double* v, std::size_t n);
double sum_scalar(const double* v, std::size_t n);
double max_abs_scalar(const double* v, std::size_t n);

double dot(const double* w, const double* v, std::size_t n);
double sum(const double* v, std::size_t n);
double max_abs(const double* v, std::size_t n);

/// "avx2" or "scalar", decided once per process.
const char* active_backend();

}  // namespace radonw::simd
