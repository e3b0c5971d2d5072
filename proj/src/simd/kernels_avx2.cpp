#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace sublat::simd::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

// sin(x) for |x| <= pi/2 by Horner in x^2.
inline __m256d sin_half_period(__m256d x) {
  const __m256d x2 = _mm256_mul_pd(x, x);
  constexpr int kTerms = sizeof(kSinCoeff) / sizeof(kSinCoeff[0]);
  __m256d p = _mm256_set1_pd(kSinCoeff[kTerms - 1]);
  for (int k = kTerms - 2; k >= 0; --k) p = _mm256_fmadd_pd(p, x2, _mm256_set1_pd(kSinCoeff[k]));
  return _mm256_mul_pd(p, x);
}

double torus_sin2_avx2(const double* y, std::size_t n) {
  const __m256d pi = _mm256_set1_pd(kPi);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(y + i);
    const __m256d r = _mm256_sub_pd(v, _mm256_round_pd(v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
    const __m256d s = sin_half_period(_mm256_mul_pd(pi, r));
    acc = _mm256_fmadd_pd(s, s, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    const double r = y[i] - std::nearbyint(y[i]);
    const double s = std::sin(kPi * r);
    total += s * s;
  }
  return total;
}

}  // namespace

const KernelTable kAvx2Table{"avx2", dot_avx2, axpy_avx2, torus_sin2_avx2};

}  // namespace sublat::simd::detail
