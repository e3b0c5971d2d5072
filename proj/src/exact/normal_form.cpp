#include "sublat/exact/normal_form.hpp"

#include <algorithm>

namespace sublat::exact {

namespace {

// rows (r, i) <- [[s, t], [-b/g, a/g]] * rows (r, i); determinant one.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const mpz_class& s, const mpz_class& t,
                  const mpz_class& u, const mpz_class& v) {
  mpz_class x, y;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    x = s * m(r, j) + t * m(i, j);
    y = u * m(r, j) + v * m(i, j);
    m(r, j) = x;
    m(i, j) = y;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  // row_dst -= q * row_src
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_submul(m(dst, j).get_mpz_t(), q.get_mpz_t(), m(src, j).get_mpz_t());
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) mpz_submul(m(i, dst).get_mpz_t(), q.get_mpz_t(), m(i, src).get_mpz_t());
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

template <bool kTrack>
IntMatrix hnf_impl(const IntMatrix& a, IntMatrix* u_out) {
  IntMatrix h = a;
  IntMatrix u;
  if constexpr (kTrack) u = IntMatrix::identity(a.rows());
  mpz_class g, s, t, ua, ub, q;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, col).get_mpz_t(), h(i, col).get_mpz_t());
      mpz_divexact(ua.get_mpz_t(), h(i, col).get_mpz_t(), g.get_mpz_t());
      mpz_divexact(ub.get_mpz_t(), h(r, col).get_mpz_t(), g.get_mpz_t());
      ua = -ua;
      combine_rows(h, r, i, s, t, ua, ub);
      if constexpr (kTrack) combine_rows(u, r, i, s, t, ua, ub);
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      negate_row(h, r);
      if constexpr (kTrack) negate_row(u, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      mpz_fdiv_q(q.get_mpz_t(), h(k, col).get_mpz_t(), h(r, col).get_mpz_t());
      if (q == 0) continue;
      add_row_multiple(h, k, r, q);
      if constexpr (kTrack) add_row_multiple(u, k, r, q);
    }
    ++r;
  }
  if constexpr (kTrack) *u_out = std::move(u);
  return h;
}

template <bool kTrack>
SnfResult snf_impl(const IntMatrix& a) {
  IntMatrix d = a;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  IntMatrix left, right;
  if constexpr (kTrack) {
    left = IntMatrix::identity(m);
    right = IntMatrix::identity(n);
  }
  const std::size_t k = std::min(m, n);
  mpz_class q, rem;
  for (std::size_t t = 0; t < k; ++t) {
    bool zero_block = false;
    for (;;) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        zero_block = true;
        break;
      }
      d.swap_rows(t, pi);
      d.swap_cols(t, pj);
      if constexpr (kTrack) {
        left.swap_rows(t, pi);
        right.swap_cols(t, pj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row_multiple(d, i, t, q);
        if constexpr (kTrack) add_row_multiple(left, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col_multiple(d, j, t, q);
        if constexpr (kTrack) add_col_multiple(right, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          mpz_tdiv_r(rem.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (rem != 0) {
            bad = i;
            break;
          }
        }
      if (bad == m) break;
      // row_t += row_bad; the next pass reduces the offending entry below the pivot.
      mpz_class minus_one = -1;
      add_row_multiple(d, t, bad, minus_one);
      if constexpr (kTrack) add_row_multiple(left, t, bad, minus_one);
    }
    if (zero_block) break;
    if (d(t, t) < 0) {
      negate_row(d, t);
      if constexpr (kTrack) negate_row(left, t);
    }
  }
  SnfResult res;
  res.invariants.resize(k);
  for (std::size_t t = 0; t < k; ++t) res.invariants[t] = d(t, t);
  if constexpr (kTrack) {
    res.left = std::move(left);
    res.right = std::move(right);
  }
  return res;
}

}  // namespace

IntMatrix hnf(const IntMatrix& a) { return hnf_impl<false>(a, nullptr); }

HnfResult hnf_with_transform(const IntMatrix& a) {
  IntMatrix u;
  IntMatrix h = hnf_impl<true>(a, &u);
  return {std::move(h), std::move(u)};
}

bool in_row_span(std::span<const mpz_class> v, const IntMatrix& h) {
  if (v.size() != h.cols()) throw DimensionError("membership vector length mismatch");
  IntVector x(v.begin(), v.end());
  mpz_class q, r;
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (col < h.cols() && h(i, col) == 0) {
      if (x[col] != 0) return false;
      ++col;
    }
    if (col == h.cols()) break;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x[col].get_mpz_t(), h(i, col).get_mpz_t());
    if (r != 0) return false;
    for (std::size_t j = col; j < h.cols(); ++j) mpz_submul(x[j].get_mpz_t(), q.get_mpz_t(), h(i, j).get_mpz_t());
    ++col;
  }
  for (std::size_t j = col; j < x.size(); ++j)
    if (x[j] != 0) return false;
  return true;
}

SnfResult snf(const IntMatrix& a, bool with_transforms) {
  return with_transforms ? snf_impl<true>(a) : snf_impl<false>(a);
}

}  // namespace sublat::exact
