#pragma once

#include "sublat/exact/matrix.hpp"

namespace sublat::exact {

/// Exact determinant by fraction-free (Bareiss) elimination. Throws DimensionError
/// for non-square input.
mpz_class det(const IntMatrix& a);

/// Rational determinant (clears denominators, then Bareiss).
mpq_class det(const RatMatrix& a);

/// Exact inverse. Throws SingularMatrixError (det = 0) when singular.
RatMatrix inverse(const IntMatrix& a);
RatMatrix inverse(const RatMatrix& a);

/// det(A) * A^{-T}, the transposed cofactor matrix. Satisfies
/// A^T * dualadj(A) = det(A) * I. Note this is the transpose of the classical
/// adjugate.
IntMatrix dualadj(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const RatMatrix& a);

}  // namespace sublat::exact
