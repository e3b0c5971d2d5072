#include <cmath>

#include "kernels_impl.hpp"

namespace sublat::simd::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double torus_sin2_scalar(const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - std::nearbyint(y[i]);
    const double v = std::sin(kPi * r);
    s += v * v;
  }
  return s;
}

}  // namespace

const KernelTable kScalarTable{"scalar", dot_scalar, axpy_scalar, torus_sin2_scalar};

}  // namespace sublat::simd::detail
