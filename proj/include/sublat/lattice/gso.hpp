#pragma once

#include <cstddef>
#include <vector>

#include "sublat/exact/matrix.hpp"

namespace sublat::lattice {

/// Fraction-free Gram-Schmidt data of an integral Gram matrix.
///
/// d[0] = 1 and d[i+1] is the leading (i+1) x (i+1) principal minor, so
/// |b*_i|^2 = d[i+1] / d[i] and mu_ij = lambda(i, j) / d[j+1] for j < i.
/// All of these are integers.
struct ExactGso {
  std::vector<mpz_class> d;
  exact::IntMatrix lambda;

  std::size_t dim() const { return d.size() - 1; }
};

/// Throws DegenerateBasisError when the Gram matrix is not positive definite.
ExactGso exact_gso(const exact::IntMatrix& gram);

/// True when |mu_ij| <= 1/2 for all j < i and the Lovasz condition holds for delta.
bool is_lll_reduced(const ExactGso& gso, const mpq_class& delta);

/// Double-precision GSO coefficients, row-major mu (dim x dim, unit diagonal).
struct FloatGso {
  std::size_t dim = 0;
  std::vector<double> mu;
  std::vector<double> bnorm2;

  double mu_at(std::size_t i, std::size_t j) const { return mu[i * dim + j]; }
};

/// Converts exact data; every |b*_i|^2 is divided by norm_scale.
FloatGso to_float(const ExactGso& gso, const mpz_class& norm_scale = 1);

}  // namespace sublat::lattice
