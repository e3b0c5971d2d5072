#pragma once

#include "sublat/simd/kernels.hpp"

namespace sublat::simd::detail {

extern const KernelTable kScalarTable;

#if defined(SUBLAT_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

#if defined(SUBLAT_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

// Odd Taylor coefficients of sin through x^21; on [-pi/2, pi/2] the truncation
// error is below 2e-18.
inline constexpr double kSinCoeff[] = {
    1.0,
    -1.0 / 6.0,
    1.0 / 120.0,
    -1.0 / 5040.0,
    1.0 / 362880.0,
    -1.0 / 39916800.0,
    1.0 / 6227020800.0,
    -1.0 / 1307674368000.0,
    1.0 / 355687428096000.0,
    -1.0 / 121645100408832000.0,
    1.0 / 51090942171709440000.0,
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace sublat::simd::detail
