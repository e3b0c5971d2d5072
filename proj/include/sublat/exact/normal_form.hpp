#pragma once

#include <optional>
#include <vector>

#include "sublat/exact/matrix.hpp"

namespace sublat::exact {

/// Row Hermite normal form: echelon rows with positive pivots, entries above
/// each pivot reduced into [0, pivot), zero rows moved to the bottom. The
/// result has the same shape as the input and the same integer row span.
IntMatrix hnf(const IntMatrix& a);

struct HnfResult {
  IntMatrix form;
  IntMatrix transform;  // unimodular U with U * A == form
};

HnfResult hnf_with_transform(const IntMatrix& a);

/// True when the integer row vector lies in the row span of an HNF matrix.
bool in_row_span(std::span<const mpz_class> v, const IntMatrix& hnf_form);

struct SnfResult {
  /// d_1 | d_2 | ... , nonnegative, min(rows, cols) of them.
  std::vector<mpz_class> invariants;
  /// Present when requested: left * A * right == diag(invariants).
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

SnfResult snf(const IntMatrix& a, bool with_transforms = false);

}  // namespace sublat::exact
