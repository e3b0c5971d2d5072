#include "sublat/exact/linalg.hpp"

namespace sublat::exact {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* op) {
  if (rows != cols) throw DimensionError(std::string(op) + " requires a square matrix");
}

// Gauss-Jordan on [A | I] over the rationals; returns false when singular.
bool invert_in_place(RatMatrix& a, RatMatrix& inv) {
  const std::size_t n = a.rows();
  inv = RatMatrix::identity(n);
  mpq_class f;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return false;
    a.swap_rows(piv, col);
    inv.swap_rows(piv, col);
    const mpq_class p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(col, j) != 0) a(i, j) -= f * a(col, j);
        if (inv(col, j) != 0) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return true;
}

}  // namespace

mpz_class det(const IntMatrix& a) {
  require_square(a.rows(), a.cols(), "det");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m_ij = (m_kk m_ij - m_ik m_kj) / prev, exact by Sylvester's identity
        mpz_mul(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), m(k, k).get_mpz_t());
        mpz_submul(m(i, j).get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  mpz_class d = m(n - 1, n - 1);
  return sign < 0 ? mpz_class(-d) : d;
}

mpq_class det(const RatMatrix& a) {
  require_square(a.rows(), a.cols(), "det");
  const std::size_t n = a.rows();
  // Scale each row by its own denominator lcm to keep numbers small.
  IntMatrix m(n, n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class s = a(i, j) * l;
      m(i, j) = s.get_num();
    }
    scale *= l;
  }
  mpq_class d(det(m), scale);
  d.canonicalize();
  return d;
}

RatMatrix inverse(const RatMatrix& a) {
  require_square(a.rows(), a.cols(), "inverse");
  RatMatrix work = a;
  RatMatrix inv;
  if (!invert_in_place(work, inv)) throw SingularMatrixError("matrix is singular", 0);
  return inv;
}

RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

IntMatrix dualadj(const IntMatrix& a) {
  require_square(a.rows(), a.cols(), "dualadj");
  const mpz_class d = det(a);
  if (d == 0) throw SingularMatrixError("dualadj of a singular matrix", 0);
  const RatMatrix inv = inverse(a);
  const std::size_t n = a.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = inv(j, i) * d;
      if (v.get_den() != 1) throw ConsistencyError("cofactor is not integral");
      out(i, j) = v.get_num();
    }
  }
  return out;
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  std::size_t r = 0;
  mpq_class f;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace sublat::exact
