#include "radonw/simd.hpp"

#include <cmath>

#if defined(__x86_64__) || defined(_M_X64)
#define RADONW_X86 1
#include <immintrin.h>
#else
#define RADONW_X86 0
#endif

namespace radonw::simd {

double dot_scalar(const double* w, const double* v, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += w[i] * v[i];
    acc1 += w[i + 1] * v[i + 1];
    acc2 += w[i + 2] * v[i + 2];
    acc3 += w[i + 3] * v[i + 3];
  }
  double acc = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) acc += w[i] * v[i];
  return acc;
}

double sum_scalar(const double* v, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += v[i];
    acc1 += v[i + 1];
    acc2 += v[i + 2];
    acc3 += v[i + 3];
  }
  double acc = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) acc += v[i];
  return acc;
}

double max_abs_scalar(const double* v, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(v[i]));
  return m;
}

#if RADONW_X86

__attribute__((target("avx2,fma"))) static double dot_avx2(const double* w, const double* v,
                                                           std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(v + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4)
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i), a0);
  __m256d a = _mm256_add_pd(a0, a1);
  __m128d lo = _mm256_castpd256_pd128(a);
  __m128d hi = _mm256_extractf128_pd(a, 1);
  __m128d s = _mm_add_pd(lo, hi);
  double acc = _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
  for (; i < n; ++i) acc += w[i] * v[i];
  return acc;
}

__attribute__((target("avx2"))) static double sum_avx2(const double* v, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(v + i));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(v + i + 4));
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_add_pd(a0, _mm256_loadu_pd(v + i));
  __m256d a = _mm256_add_pd(a0, a1);
  __m128d lo = _mm256_castpd256_pd128(a);
  __m128d hi = _mm256_extractf128_pd(a, 1);
  __m128d s = _mm_add_pd(lo, hi);
  double acc = _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
  for (; i < n; ++i) acc += v[i];
  return acc;
}

__attribute__((target("avx2"))) static double max_abs_avx2(const double* v, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m = _mm256_max_pd(m, _mm256_and_pd(mask, _mm256_loadu_pd(v + i)));
  __m128d lo = _mm256_castpd256_pd128(m);
  __m128d hi = _mm256_extractf128_pd(m, 1);
  __m128d s = _mm_max_pd(lo, hi);
  double acc = _mm_cvtsd_f64(_mm_max_sd(s, _mm_unpackhi_pd(s, s)));
  for (; i < n; ++i) acc = std::max(acc, std::fabs(v[i]));
  return acc;
}

static bool have_avx2() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

#else
static bool have_avx2() { return false; }
#endif

namespace {
using DotFn = double (*)(const double*, const double*, std::size_t);
using RedFn = double (*)(const double*, std::size_t);

struct Dispatch {
  DotFn dot;
  RedFn sum;
  RedFn max_abs;
  const char* name;
  Dispatch() {
#if RADONW_X86
    if (have_avx2()) {
      dot = dot_avx2;
      sum = sum_avx2;
      max_abs = max_abs_avx2;
      name = "avx2";
      return;
    }
#endif
    dot = dot_scalar;
    sum = sum_scalar;
    max_abs = max_abs_scalar;
    name = "scalar";
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}
}  // namespace

double dot(const double* w, const double* v, std::size_t n) { return dispatch().dot(w, v, n); }
double sum(const double* v, std::size_t n) { return dispatch().sum(v, n); }
double max_abs(const double* v, std::size_t n) { return dispatch().max_abs(v, n); }
const char* active_backend() { return dispatch().name; }

}  // namespace radonw::simd
