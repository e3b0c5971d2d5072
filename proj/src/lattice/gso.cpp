#include "sublat/lattice/gso.hpp"

#include "sublat/lattice/basis.hpp"

namespace sublat::lattice {

ExactGso exact_gso(const exact::IntMatrix& gram) {
  if (!gram.is_square()) throw DimensionError("Gram matrix must be square");
  const std::size_t n = gram.rows();
  ExactGso g;
  g.d.assign(n + 1, 0);
  g.d[0] = 1;
  g.lambda = exact::IntMatrix(n, n);
  mpz_class u;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      u = gram(k, j);
      for (std::size_t i = 0; i < j; ++i) {
        u *= g.d[i + 1];
        mpz_submul(u.get_mpz_t(), g.lambda(k, i).get_mpz_t(), g.lambda(j, i).get_mpz_t());
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), g.d[i].get_mpz_t());
      }
      if (j < k) {
        g.lambda(k, j) = u;
      } else {
        if (u <= 0) throw DegenerateBasisError("Gram matrix is not positive definite");
        g.d[k + 1] = u;
        g.lambda(k, k) = u;
      }
    }
  }
  return g;
}

bool is_lll_reduced(const ExactGso& g, const mpq_class& delta) {
  const std::size_t n = g.dim();
  mpz_class lhs, rhs;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lhs = 2 * abs(g.lambda(i, j));
      if (lhs > g.d[j + 1]) return false;
    }
    // q (d[i+1] d[i-1] + lambda^2) >= p d[i]^2
    const mpz_class& lam = g.lambda(i, i - 1);
    lhs = delta.get_den() * (g.d[i + 1] * g.d[i - 1] + lam * lam);
    rhs = delta.get_num() * g.d[i] * g.d[i];
    if (lhs < rhs) return false;
  }
  return true;
}

FloatGso to_float(const ExactGso& g, const mpz_class& norm_scale) {
  FloatGso f;
  f.dim = g.dim();
  f.mu.assign(f.dim * f.dim, 0.0);
  f.bnorm2.assign(f.dim, 0.0);
  for (std::size_t i = 0; i < f.dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) f.mu[i * f.dim + j] = ratio_to_double(g.lambda(i, j), g.d[j + 1]);
    f.mu[i * f.dim + i] = 1.0;
    f.bnorm2[i] = ratio_to_double(g.d[i + 1], g.d[i] * norm_scale);
  }
  return f;
}

}  // namespace sublat::lattice
