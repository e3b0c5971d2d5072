#include "sublat/lattice/density.hpp"

#include <cmath>

#include "sublat/exact/linalg.hpp"
#include "sublat/lattice/enumerate.hpp"

namespace sublat::lattice {

namespace {

mpq_class density_squared(const mpq_class& min_norm, const mpq_class& gram_det, std::size_t n) {
  mpq_class num = 1;
  for (std::size_t i = 0; i < n; ++i) num *= min_norm;
  mpz_class four_n = 1;
  four_n <<= 2 * n;
  return num / (mpq_class(four_n) * gram_det);
}

}  // namespace

mpq_class center_density_squared(const LatticeBasis& b) {
  return density_squared(shortest_vector(b).norm_sq, volume(b).squared, b.rank());
}

mpq_class center_density_squared(const GramMatrix& g) {
  return density_squared(shortest_vector(g).norm_sq, exact::det(g), g.rows());
}

double center_density(const LatticeBasis& b) { return sqrt_to_double(center_density_squared(b)); }
double center_density(const GramMatrix& g) { return sqrt_to_double(center_density_squared(g)); }

double sqrt_to_double(const mpq_class& q) {
  if (q < 0) throw Error("square root of a negative number");
  if (q == 0) return 0.0;
  long en = 0, ed = 0;
  double m = mpz_get_d_2exp(&en, q.get_num_mpz_t()) / mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  long e = en - ed;
  if (e % 2 != 0) {
    m *= 2.0;
    e -= 1;
  }
  return std::ldexp(std::sqrt(m), static_cast<int>(e / 2));
}

}  // namespace sublat::lattice
