#pragma once

#include <cstddef>
#include <vector>

namespace sublat::simd {

/// Floating-point inner loops used by LLL, enumeration and the torus-code
/// search. Every table computes the same functions; vector variants may differ
/// from the scalar reference only by rounding (summation order, polynomial sine).
struct KernelTable {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// sum_i sin^2(pi * (y_i - nearest_integer(y_i)))
  double (*torus_sin2_sum)(const double* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// Vector variants compiled into this build and supported by the running CPU.
std::vector<const KernelTable*> available_kernels();

/// Best available table, chosen once. The environment variable SUBLAT_KERNELS
/// (scalar | avx2 | neon) forces a choice when that variant is available.
const KernelTable& active_kernels();

}  // namespace sublat::simd
