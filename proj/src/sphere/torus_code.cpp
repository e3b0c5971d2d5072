#include "sublat/sphere/torus_code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sublat/lattice/gso.hpp"
#include "sublat/lattice/lll.hpp"

namespace sublat::sphere {

using exact::IntMatrix;
using lattice::ratio_to_double;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRel = 1e-9;      // slack on floating comparisons before the exact recheck
constexpr double kZeroSum = 1e-20; // leaf sums below this are tested for the zero coset

// Largest sum_i (pi r_i)^2 over residues with sum_i sin^2(pi r_i) = s: the map
// u -> asin(sqrt u)^2 is convex, so the maximum puts floor(s) residues at 1/2.
double residue_norm_bound(double s, std::size_t n) {
  s = std::min(s, static_cast<double>(n));
  const double whole = std::floor(s);
  const double a = std::asin(std::sqrt(std::min(1.0, s - whole)));
  return (whole * (kPi / 2) * (kPi / 2) + a * a) / (kPi * kPi);
}

double sin2_of_ratio(const mpz_class& r, const mpz_class& c) {
  const double s = std::sin(kPi * ratio_to_double(r, c));
  return s * s;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntVector canonical_sign(const IntVector& r, const mpz_class& c) {
  IntVector neg(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  neg = centered_residues(neg, c);
  return lex_less(neg, r) ? neg : r;
}

}  // namespace

std::vector<double> torus_point(std::span<const mpz_class> x, const mpz_class& c) {
  if (c < 1) throw DimensionError("torus modulus must be positive");
  if (x.empty()) throw DimensionError("torus point needs n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(x.size()));
  std::vector<double> p(2 * x.size());
  mpz_class r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), x[i].get_mpz_t(), c.get_mpz_t());
    const double t = 2 * kPi * ratio_to_double(r, c);
    p[2 * i] = scale * std::cos(t);
    p[2 * i + 1] = scale * std::sin(t);
  }
  return p;
}

IntVector centered_residues(std::span<const mpz_class> v, const mpz_class& c) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), v[i].get_mpz_t(), c.get_mpz_t());
    if (2 * r[i] > c) r[i] -= c;
  }
  return r;
}

double pair_distance(std::span<const mpz_class> x, std::span<const mpz_class> y, const mpz_class& c) {
  if (x.size() != y.size()) throw DimensionError("points differ in dimension");
  IntVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  const IntVector r = centered_residues(diff, c);
  double s = 0;
  for (const auto& ri : r) s += sin2_of_ratio(ri, c);
  return std::sqrt(4 * s / static_cast<double>(x.size()));
}

std::pair<double, double> sandwich(std::span<const mpz_class> v, const mpz_class& c) {
  mpz_class norm = 0;
  for (const auto& x : v) norm += x * x;
  const double len = std::sqrt(ratio_to_double(norm, c * c));
  const double root_n = std::sqrt(static_cast<double>(v.size()));
  return {4 * len / root_n, 2 * kPi * len / root_n};
}

TorusCode::TorusCode(suborth::SequenceMember m)
    : member(std::move(m)), modulus(abs(member.det_dual)), dim(member.dim()), size(modulus) {}

CodeDistance min_distance(const TorusCode& code, const SearchOptions& opts) {
  const std::size_t n = code.dim;
  if (n > kMaxCodeDim) throw CapabilityError("torus code search is limited to n <= 24");
  if (code.size == 1) throw DimensionError("a one-point code has no minimum distance");
  const simd::KernelTable& kern = opts.kernels ? *opts.kernels : simd::active_kernels();
  const mpz_class& c = code.modulus;

  const IntMatrix b = lattice::lll_reduce(code.member.primal).basis;
  const IntMatrix gram = b * b.transpose();
  lattice::RealMatrix rows(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = ratio_to_double(b(i, j), c);

  auto in_zero_coset = [&](std::span<const long> x) {
    mpz_class v;
    for (std::size_t j = 0; j < n; ++j) {
      v = 0;
      for (std::size_t i = 0; i < n; ++i) v += x[i] * b(i, j);
      if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) return false;
    }
    return true;
  };

  struct Candidate {
    std::vector<long> x;
    double sum;
  };
  std::vector<Candidate> cands;
  double best = std::numeric_limits<double>::infinity();
  std::vector<long> unit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    const double s = kern.torus_sin2_sum(&rows.data[i * n], n);
    if (s < best && !in_zero_coset(unit)) best = s;
    unit[i] = 0;
  }
  auto radius_for = [&](double s) { return residue_norm_bound(s * (1 + kRel), n) * (1 + kRel); };
  double radius = radius_for(best);
  std::size_t purge_at = 4096;

  lattice::Enumerator en(lattice::to_float(lattice::exact_gso(gram), c * c), rows, kern);
  auto visit = [&](std::span<const long> x, double, std::span<const double> y) {
    const double s = kern.torus_sin2_sum(y.data(), n);
    if (s < kZeroSum && in_zero_coset(x)) return radius;
    if (s > best * (1 + kRel)) return radius;
    if (s < best) {
      best = s;
      radius = radius_for(best);
    }
    cands.push_back({std::vector<long>(x.begin(), x.end()), s});
    if (cands.size() >= purge_at) {
      std::erase_if(cands, [&](const Candidate& k) { return k.sum > best * (1 + kRel); });
      purge_at = std::max<std::size_t>(4096, 2 * cands.size());
    }
    return radius;
  };

  CodeDistance out;
  out.stats = en.run(radius, visit, opts.node_budget);
  out.certified = !out.stats.budget_exhausted;

  // Exact residues, then the smallest sum with the canonical witness.
  double best_exact = std::numeric_limits<double>::infinity();
  IntVector xi(n);
  for (const Candidate& k : cands) {
    if (k.sum > best * (1 + kRel)) continue;
    for (std::size_t i = 0; i < n; ++i) xi[i] = k.x[i];
    const IntVector r = centered_residues(exact::row_times(xi, b), c);
    double s = 0;
    for (const auto& ri : r) s += sin2_of_ratio(ri, c);
    if (s == 0) continue;
    const IntVector w = canonical_sign(r, c);
    if (out.witness.empty()) {
      best_exact = s;
      out.witness = w;
      continue;
    }
    const bool tie = std::abs(s - best_exact) <= 1e-13 * best_exact;
    if (tie ? lex_less(w, out.witness) : s < best_exact) out.witness = w;
    if (tie || s < best_exact) best_exact = std::min(best_exact, s);
  }
  if (out.witness.empty()) {
    // Only reachable when the budget stopped the search before any leaf; fall back to the best seed row.
    for (std::size_t i = 0; i < n; ++i) {
      const IntVector r = centered_residues(b.row(i), c);
      double s = 0;
      for (const auto& ri : r) s += sin2_of_ratio(ri, c);
      if (s > 0 && s < best_exact) {
        best_exact = s;
        out.witness = canonical_sign(r, c);
      }
    }
  }
  out.value = std::sqrt(4 * best_exact / static_cast<double>(n));
  if (out.certified) {
    out.lower_bound = out.value;
  } else {
    const lattice::SvpResult sv = lattice::shortest_vector(exact::to_rational(gram));
    out.lower_bound = 4 * std::sqrt(lattice::to_double(sv.norm_sq / mpq_class(c * c))) / std::sqrt(double(n));
  }
  return out;
}

std::vector<CodeRow> code_table(const suborth::SequenceSpec& spec, long w_from, long w_to, const SearchOptions& opts) {
  std::vector<CodeRow> rows;
  for (long w = w_from; w <= w_to; ++w) {
    CodeRow row;
    row.w = w;
    try {
      TorusCode code(suborth::primal_member(spec, w));
      row.size = code.size;
      row.distance = min_distance(code, opts);
    } catch (const SingularMatrixError&) {
      row.skipped = "singular member";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sublat::sphere
