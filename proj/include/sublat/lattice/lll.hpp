#pragma once

#include "sublat/exact/matrix.hpp"
#include "sublat/lattice/basis.hpp"

namespace sublat::lattice {

struct LllResult {
  exact::IntMatrix basis;      // reduced rows
  exact::IntMatrix transform;  // unimodular U with basis == U * input
  bool exact_fallback = false; // floating pass did not verify and exact reduction finished the job
};

/// LLL reduction of integer basis rows. A floating-point Schnorr-Euchner pass
/// does the bulk of the work; the result is always verified in exact integer
/// arithmetic and repaired by exact integral LLL if needed.
LllResult lll_reduce(const exact::IntMatrix& basis, const mpq_class& delta = mpq_class(99, 100));

struct GramLllResult {
  exact::IntMatrix gram;       // U * G * U^T
  exact::IntMatrix transform;  // U
};

/// Exact integral LLL acting on a positive definite integer Gram matrix.
GramLllResult lll_reduce_gram(const exact::IntMatrix& gram, const mpq_class& delta = mpq_class(99, 100));

/// Reduces a rational basis (denominators are cleared first and restored after).
LatticeBasis lll(const LatticeBasis& b, const mpq_class& delta = mpq_class(99, 100));

}  // namespace sublat::lattice
