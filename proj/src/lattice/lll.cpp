#include "sublat/lattice/lll.hpp"

#include <algorithm>
#include <cmath>

#include "sublat/lattice/gso.hpp"
#include "sublat/simd/kernels.hpp"

namespace sublat::lattice {

using exact::IntMatrix;

namespace {

void require_delta(const mpq_class& delta) {
  if (delta <= mpq_class(1, 4) || delta >= 1) throw Error("LLL delta must lie in (1/4, 1)");
}

void sub_row(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_submul(m(target, j).get_mpz_t(), q.get_mpz_t(), m(source, j).get_mpz_t());
}

void sub_col(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    mpz_submul(m(i, target).get_mpz_t(), q.get_mpz_t(), m(i, source).get_mpz_t());
}

// round(num / den) for den > 0, halves rounded up.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q = 2 * num + den;
  mpz_class d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), d2.get_mpz_t());
  return q;
}

// Floating Schnorr-Euchner pass; returns false when precision ran out.
bool float_pass(IntMatrix& b, IntMatrix& u, double delta) {
  const std::size_t k = b.rows();
  const std::size_t n = b.cols();
  const auto& kern = simd::active_kernels();

  std::size_t maxbits = 0;
  for (const auto& x : b.entries()) maxbits = std::max(maxbits, mpz_sizeinbase(x.get_mpz_t(), 2));
  const long shift = maxbits > 400 ? static_cast<long>(maxbits) - 400 : 0;

  std::vector<double> bf(k * n), nrm(k), mu(k * k), r(k * k), bstar(k);
  auto load = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      long e = 0;
      const double m = mpz_get_d_2exp(&e, b(i, j).get_mpz_t());
      bf[i * n + j] = std::ldexp(m, static_cast<int>(e - shift));
    }
    nrm[i] = kern.dot(&bf[i * n], &bf[i * n], n);
  };
  auto fdot = [&](std::size_t i, std::size_t j) {
    const double s = kern.dot(&bf[i * n], &bf[j * n], n);
    if (std::abs(s) >= 0x1p-26 * std::sqrt(nrm[i] * nrm[j])) return s;
    const mpz_class e = exact::dot(b.row(i), b.row(j));
    long ex = 0;
    const double m = mpz_get_d_2exp(&ex, e.get_mpz_t());
    return std::ldexp(m, static_cast<int>(ex - 2 * shift));
  };
  auto gso_row = [&](std::size_t i) {
    double bi = nrm[i];
    for (std::size_t j = 0; j < i; ++j) {
      double s = fdot(i, j);
      for (std::size_t m = 0; m < j; ++m) s -= mu[j * k + m] * r[i * k + m];
      r[i * k + j] = s;
      mu[i * k + j] = s / bstar[j];
      bi -= mu[i * k + j] * s;
    }
    bstar[i] = bi;
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    b.swap_rows(i, j);
    u.swap_rows(i, j);
    std::swap_ranges(bf.begin() + i * n, bf.begin() + (i + 1) * n, bf.begin() + j * n);
    std::swap(nrm[i], nrm[j]);
  };

  for (std::size_t i = 0; i < k; ++i) load(i);
  bstar[0] = nrm[0];
  const std::size_t limit = 100000 + 1000 * k * k;
  std::size_t steps = 0;
  std::size_t kk = 1;
  mpz_class qz;
  while (kk < k) {
    if (++steps > limit) return false;
    for (int passes = 0;; ++passes) {
      if (passes > 64) return false;
      gso_row(kk);
      bool changed = false;
      for (std::size_t j = kk; j-- > 0;) {
        const double m = mu[kk * k + j];
        if (std::abs(m) <= 0.5 + 1e-9) continue;
        const double q = std::nearbyint(m);
        qz = q;
        sub_row(b, kk, j, qz);
        sub_row(u, kk, j, qz);
        for (std::size_t t = 0; t < j; ++t) mu[kk * k + t] -= q * mu[j * k + t];
        mu[kk * k + j] -= q;
        changed = true;
      }
      if (!changed) break;
      load(kk);
    }
    if (!(bstar[kk] > 0)) return false;
    const double m = mu[kk * k + kk - 1];
    if (bstar[kk] < (delta - m * m) * bstar[kk - 1]) {
      swap_rows(kk, kk - 1);
      kk = std::max<std::size_t>(kk - 1, 1);
      if (kk == 1) bstar[0] = nrm[0];
    } else {
      ++kk;
    }
  }
  return true;
}

}  // namespace

GramLllResult lll_reduce_gram(const IntMatrix& gram_in, const mpq_class& delta) {
  require_delta(delta);
  if (!gram_in.is_square()) throw DimensionError("Gram matrix must be square");
  const std::size_t n = gram_in.rows();
  IntMatrix g = gram_in;
  IntMatrix h = IntMatrix::identity(n);
  std::vector<mpz_class> d(n + 1);
  d[0] = 1;
  d[1] = g(0, 0);
  if (d[1] <= 0) throw DegenerateBasisError("Gram matrix is not positive definite");
  IntMatrix lam(n, n);
  const mpz_class& p = delta.get_num();
  const mpz_class& q = delta.get_den();

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam(k, l)) <= d[l + 1]) return;
    const mpz_class r = round_div(lam(k, l), d[l + 1]);
    sub_row(h, k, l, r);
    sub_row(g, k, l, r);
    sub_col(g, k, l, r);
    mpz_submul(lam(k, l).get_mpz_t(), r.get_mpz_t(), d[l + 1].get_mpz_t());
    for (std::size_t i = 0; i < l; ++i) mpz_submul(lam(k, i).get_mpz_t(), r.get_mpz_t(), lam(l, i).get_mpz_t());
  };

  std::size_t kmax = 0;
  auto swap = [&](std::size_t k) {
    h.swap_rows(k, k - 1);
    g.swap_rows(k, k - 1);
    g.swap_cols(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam(k, j), lam(k - 1, j));
    const mpz_class lm = lam(k, k - 1);
    mpz_class bnew = d[k - 1] * d[k + 1] + lm * lm;
    mpz_divexact(bnew.get_mpz_t(), bnew.get_mpz_t(), d[k].get_mpz_t());
    mpz_class t;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      t = lam(i, k);
      mpz_class a = d[k + 1] * lam(i, k - 1) - lm * t;
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d[k].get_mpz_t());
      lam(i, k) = a;
      mpz_class c = bnew * t + lm * lam(i, k);
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d[k + 1].get_mpz_t());
      lam(i, k - 1) = c;
    }
    d[k] = bnew;
  };

  std::size_t k = 1;
  mpz_class u;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        u = g(k, j);
        for (std::size_t i = 0; i < j; ++i) {
          u *= d[i + 1];
          mpz_submul(u.get_mpz_t(), lam(k, i).get_mpz_t(), lam(j, i).get_mpz_t());
          mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
        }
        if (j < k) {
          lam(k, j) = u;
        } else {
          if (u <= 0) throw DegenerateBasisError("Gram matrix is not positive definite");
          d[k + 1] = u;
        }
      }
    }
    red(k, k - 1);
    const mpz_class& lm = lam(k, k - 1);
    if (q * (d[k + 1] * d[k - 1] + lm * lm) < p * d[k] * d[k]) {
      swap(k);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
  return {std::move(g), std::move(h)};
}

LllResult lll_reduce(const IntMatrix& basis, const mpq_class& delta) {
  require_delta(delta);
  if (basis.empty()) throw DimensionError("empty basis");
  if (basis.rows() > basis.cols()) throw DegenerateBasisError("more basis vectors than ambient dimensions");
  exact_gso(basis * basis.transpose());

  LllResult res{basis, IntMatrix::identity(basis.rows()), false};
  const bool ok = float_pass(res.basis, res.transform, delta.get_d());
  const IntMatrix g = res.basis * res.basis.transpose();
  if (ok && is_lll_reduced(exact_gso(g), delta)) return res;

  const GramLllResult fix = lll_reduce_gram(g, delta);
  res.basis = fix.transform * res.basis;
  res.transform = fix.transform * res.transform;
  res.exact_fallback = true;
  return res;
}

LatticeBasis lll(const LatticeBasis& b, const mpq_class& delta) {
  const mpz_class den = exact::common_denominator(b.matrix());
  const IntMatrix ints = exact::to_integer(mpq_class(den) * b.matrix());
  const LllResult r = lll_reduce(ints, delta);
  return LatticeBasis(mpq_class(1, den) * exact::to_rational(r.basis), b.scale());
}

}  // namespace sublat::lattice
