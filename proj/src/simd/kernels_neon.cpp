#include <arm_neon.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace sublat::simd::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

inline float64x2_t sin_half_period(float64x2_t x) {
  const float64x2_t x2 = vmulq_f64(x, x);
  constexpr int kTerms = sizeof(kSinCoeff) / sizeof(kSinCoeff[0]);
  float64x2_t p = vdupq_n_f64(kSinCoeff[kTerms - 1]);
  for (int k = kTerms - 2; k >= 0; --k) p = vfmaq_f64(vdupq_n_f64(kSinCoeff[k]), p, x2);
  return vmulq_f64(p, x);
}

double torus_sin2_neon(const double* y, std::size_t n) {
  const float64x2_t pi = vdupq_n_f64(kPi);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(y + i);
    const float64x2_t r = vsubq_f64(v, vrndnq_f64(v));
    const float64x2_t s = sin_half_period(vmulq_f64(pi, r));
    acc = vfmaq_f64(acc, s, s);
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double r = y[i] - std::nearbyint(y[i]);
    const double s = std::sin(kPi * r);
    total += s * s;
  }
  return total;
}

}  // namespace

const KernelTable kNeonTable{"neon", dot_neon, axpy_neon, torus_sin2_neon};

}  // namespace sublat::simd::detail
