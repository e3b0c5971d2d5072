#include "sublat/lattice/enumerate.hpp"

#include <algorithm>

#include "sublat/lattice/lll.hpp"

namespace sublat::lattice {

using exact::IntMatrix;
using exact::IntVector;

namespace {

struct Candidate {
  std::vector<long> x;
  double norm2;
};

IntMatrix integral_gram(const GramMatrix& g, mpz_class& den) {
  den = exact::common_denominator(g);
  return exact::to_integer(mpq_class(den) * g);
}

// Enumerates the reduced integer Gram and returns the exact minimum with its
// tie-broken coefficient vector in the original basis (x * u).
SvpResult search(const IntMatrix& reduced_gram, const IntMatrix& u) {
  const std::size_t n = reduced_gram.rows();
  if (n > kMaxEnumerationDim) throw CapabilityError("enumeration is limited to rank 26");

  mpz_class min_diag = reduced_gram(0, 0);
  for (std::size_t i = 1; i < n; ++i) min_diag = std::min(min_diag, mpz_class(reduced_gram(i, i)));

  // Lengths are measured in units of the shortest basis vector.
  Enumerator en(to_float(exact_gso(reduced_gram), min_diag));
  constexpr double kMargin = 1e-7;
  double best = 1.0;
  std::vector<Candidate> cands;
  std::size_t purge_at = 1024;
  auto visit = [&](std::span<const long> x, double len, std::span<const double>) {
    if (len > best * (1 + kMargin)) return best * (1 + kMargin);
    best = std::min(best, len);
    cands.push_back({std::vector<long>(x.begin(), x.end()), len});
    if (cands.size() >= purge_at) {
      std::erase_if(cands, [&](const Candidate& c) { return c.norm2 > best * (1 + kMargin); });
      purge_at = std::max<std::size_t>(1024, 2 * cands.size());
    }
    return best * (1 + kMargin);
  };
  SvpResult out;
  out.stats = en.run(1.0 + kMargin, visit);

  bool have = false;
  IntVector xi(n), coeff, neg;
  mpz_class norm;
  for (const Candidate& c : cands) {
    if (c.norm2 > best * (1 + kMargin)) continue;
    for (std::size_t i = 0; i < n; ++i) xi[i] = c.x[i];
    const IntVector gx = exact::row_times(xi, reduced_gram);
    norm = exact::dot(gx, xi);
    coeff = exact::row_times(xi, u);
    neg = coeff;
    for (auto& v : neg) v = -v;
    if (std::lexicographical_compare(neg.begin(), neg.end(), coeff.begin(), coeff.end())) coeff.swap(neg);
    if (!have || norm < out.norm_sq ||
        (norm == out.norm_sq && std::lexicographical_compare(coeff.begin(), coeff.end(),
                                                             out.coeffs.begin(), out.coeffs.end()))) {
      out.norm_sq = norm;
      out.coeffs = coeff;
      have = true;
    }
  }
  if (!have) throw ConsistencyError("enumeration found no vector within the initial radius");
  return out;
}

}  // namespace

SvpResult shortest_vector(const LatticeBasis& b) {
  if (b.rank() > kMaxEnumerationDim) throw CapabilityError("enumeration is limited to rank 26");
  const RatMatrix gen = b.generator();
  const mpz_class den = exact::common_denominator(gen);
  const IntMatrix ints = exact::to_integer(mpq_class(den) * gen);
  const LllResult red = lll_reduce(ints, mpq_class(99, 100));
  SvpResult sv = search(red.basis * red.basis.transpose(), red.transform);
  sv.norm_sq /= mpq_class(den * den);
  sv.vector.assign(b.ambient_dim(), 0);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.ambient_dim(); ++j) sv.vector[j] += sv.coeffs[i] * gen(i, j);
  return sv;
}

SvpResult shortest_vector(const GramMatrix& g) {
  if (!g.is_square()) throw DimensionError("Gram matrix must be square");
  if (g.rows() > kMaxEnumerationDim) throw CapabilityError("enumeration is limited to rank 26");
  mpz_class den;
  const IntMatrix ints = integral_gram(g, den);
  const GramLllResult red = lll_reduce_gram(ints, mpq_class(99, 100));
  SvpResult sv = search(red.gram, red.transform);
  sv.norm_sq /= mpq_class(den);
  return sv;
}

}  // namespace sublat::lattice
