#include "sublat/lattice/basis.hpp"

#include <cmath>

#include "sublat/exact/linalg.hpp"

namespace sublat::lattice {

namespace {

void validate(const RatMatrix& m, const mpq_class& scale) {
  if (m.empty()) throw DimensionError("lattice basis must be nonempty");
  if (m.rows() > m.cols()) throw DegenerateBasisError("more basis vectors than ambient dimensions");
  if (scale <= 0) throw DimensionError("basis scale must be positive");
  if (exact::rank(m) != m.rows()) throw DegenerateBasisError("basis rows are linearly dependent");
}

}  // namespace

LatticeBasis::LatticeBasis(RatMatrix rows, mpq_class scale) : matrix_(std::move(rows)), scale_(std::move(scale)) {
  validate(matrix_, scale_);
}

LatticeBasis::LatticeBasis(const IntMatrix& rows, mpq_class scale)
    : LatticeBasis(exact::to_rational(rows), std::move(scale)) {}

LatticeBasis LatticeBasis::from_real(const RealMatrix& rows, int precision_bits) {
  RatMatrix m(rows.rows, rows.cols);
  mpz_class den = 1;
  den <<= precision_bits;
  for (std::size_t i = 0; i < rows.rows; ++i) {
    for (std::size_t j = 0; j < rows.cols; ++j) {
      const double scaled = std::nearbyint(std::ldexp(rows(i, j), precision_bits));
      mpq_class q(mpz_class(scaled), den);
      q.canonicalize();
      m(i, j) = q;
    }
  }
  LatticeBasis b(std::move(m));
  b.rationalized_bits_ = precision_bits;
  return b;
}

RatMatrix LatticeBasis::generator() const {
  if (scale_ == 1) return matrix_;
  return scale_ * matrix_;
}

GramMatrix gram(const LatticeBasis& b) {
  const RatMatrix& m = b.matrix();
  RatMatrix g = m * m.transpose();
  if (b.scale() != 1) g = mpq_class(b.scale() * b.scale()) * g;
  return g;
}

Volume volume(const LatticeBasis& b) {
  Volume v;
  if (b.rank() == b.ambient_dim()) {
    mpq_class d = abs(exact::det(b.matrix()));
    for (std::size_t i = 0; i < b.rank(); ++i) d *= b.scale();
    v.exact = d;
    v.squared = d * d;
    v.value = to_double(d);
    return v;
  }
  v.squared = exact::det(gram(b));
  if (v.squared <= 0) throw DegenerateBasisError("Gram determinant is not positive");
  mpz_class num = v.squared.get_num(), den = v.squared.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    v.exact = mpq_class(rn, rd);
    v.value = to_double(*v.exact);
  } else {
    v.value = std::sqrt(to_double(v.squared));
  }
  return v;
}

LatticeBasis dual(const LatticeBasis& b) {
  const RatMatrix gen = b.generator();
  RatMatrix d = exact::inverse(gen * gen.transpose()) * gen;
  return LatticeBasis(std::move(d));
}

mpq_class gram_error_exact(const GramMatrix& g1, const GramMatrix& g2) {
  if (g1.rows() != g2.rows() || g1.cols() != g2.cols()) throw DimensionError("Gram matrices differ in shape");
  return exact::max_abs(g1 - g2);
}

double gram_error(const GramMatrix& g1, const GramMatrix& g2) { return to_double(gram_error_exact(g1, g2)); }

double ratio_to_double(const mpz_class& num, const mpz_class& den) {
  if (num == 0) return 0.0;
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

double to_double(const mpq_class& q) { return ratio_to_double(q.get_num(), q.get_den()); }

}  // namespace sublat::lattice
