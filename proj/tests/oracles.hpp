#pragma once

// Independent reference computations used only by the tests. They are slow and
// simple on purpose and share no code with the library algorithms.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "sublat/exact/matrix.hpp"

namespace oracle {

using sublat::exact::IntMatrix;

/// Determinant by cofactor expansion along the first row.
inline mpz_class laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    const mpz_class term = a(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

/// Calls f on every k-subset of {0..n-1} (as an index vector).
inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Smith invariants from determinantal divisors: d_k = gcd of all k x k minors.
inline std::vector<mpz_class> snf_by_minors(const IntMatrix& a) {
  const std::size_t r = std::min(a.rows(), a.cols());
  std::vector<mpz_class> divisors{1};
  std::vector<mpz_class> inv;
  for (std::size_t k = 1; k <= r; ++k) {
    mpz_class g = 0;
    subsets(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
        g = gcd(g, laplace_det(m));
      });
    });
    if (g == 0) {
      while (inv.size() < r) inv.push_back(0);
      return inv;
    }
    inv.push_back(g / divisors.back());
    divisors.push_back(g);
  }
  return inv;
}

/// Minimum squared norm over nonzero coefficient vectors in [-box, box]^k.
inline mpz_class brute_min_norm(const IntMatrix& basis, int box) {
  const std::size_t k = basis.rows(), n = basis.cols();
  std::vector<int> x(k, -box);
  mpz_class best = -1;
  for (;;) {
    bool nonzero = false;
    for (int v : x) nonzero |= v != 0;
    if (nonzero) {
      mpz_class norm = 0;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < k; ++i) s += x[i] * basis(i, j);
        norm += s * s;
      }
      if (best < 0 || norm < best) best = norm;
    }
    std::size_t i = 0;
    while (i < k && x[i] == box) x[i++] = -box;
    if (i == k) return best;
    ++x[i];
  }
}

/// Deterministic 64-bit generator (splitmix64) for reproducible random cases.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1p-53; }
};

inline IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(lo, hi);
  return m;
}

}  // namespace oracle

#include <cmath>
#include <set>

namespace oracle {

/// Minimum of (4/n) sum sin^2(pi v_i / c) over the nonzero elements of the
/// group generated by the rows of `primal` modulo c, found by closing {0}
/// under adding each row. Returns the squared distance.
inline long double coset_min_distance_sq(const IntMatrix& primal, const mpz_class& c, std::size_t* group_size = nullptr) {
  const std::size_t n = primal.cols();
  using Vec = std::vector<long>;
  const long cl = c.get_si();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < primal.rows(); ++i) {
    Vec g(n);
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), primal(i, j).get_mpz_t(), c.get_mpz_t());
      g[j] = r.get_si();
    }
    gens.push_back(g);
  }
  std::set<Vec> seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier)
      for (const Vec& g : gens) {
        Vec s(n);
        for (std::size_t j = 0; j < n; ++j) s[j] = (v[j] + g[j]) % cl;
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier.swap(next);
  }
  if (group_size) *group_size = seen.size();
  const long double pi = 3.141592653589793238462643383279502884L;
  long double best = 4;
  for (const Vec& v : seen) {
    long double s = 0;
    bool zero = true;
    for (long x : v) {
      zero &= x == 0;
      const long double t = std::sin(pi * static_cast<long double>(x) / static_cast<long double>(cl));
      s += t * t;
    }
    if (!zero) best = std::min(best, 4 * s / static_cast<long double>(n));
  }
  return best;
}

}  // namespace oracle
