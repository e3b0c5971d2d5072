#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sublat/exact/matrix.hpp"
#include "sublat/lattice/enumerate.hpp"
#include "sublat/simd/kernels.hpp"
#include "sublat/suborth/sequence.hpp"

namespace sublat::sphere {

using exact::IntVector;

/// Largest dimension accepted by min_distance.
inline constexpr std::size_t kMaxCodeDim = 24;

/// Phi(x) = (1/sqrt n) (cos 2 pi x_1/c, sin 2 pi x_1/c, ..., cos 2 pi x_n/c, sin 2 pi x_n/c).
std::vector<double> torus_point(std::span<const mpz_class> x, const mpz_class& c);

/// |Phi(x) - Phi(y)| = sqrt((4/n) sum_i sin^2(pi (x_i - y_i) / c)).
double pair_distance(std::span<const mpz_class> x, std::span<const mpz_class> y, const mpz_class& c);

/// Representative of each coordinate modulo c in (-c/2, c/2].
IntVector centered_residues(std::span<const mpz_class> v, const mpz_class& c);

/// The M = |det B*_w| points Lambda_w / (c Z^n) mapped through Phi.
struct TorusCode {
  suborth::SequenceMember member;
  mpz_class modulus;
  std::size_t dim = 0;
  mpz_class size;

  explicit TorusCode(suborth::SequenceMember m);
};

struct CodeDistance {
  double value = 0;     // minimum distance when certified, otherwise the best distance found
  IntVector witness;    // centered coset representative attaining value
  bool certified = false;
  double lower_bound = 0;  // equals value when certified
  lattice::EnumerationStats stats;
};

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0: unlimited
  const simd::KernelTable* kernels = nullptr;  // nullptr: active table
};

/// Exact minimum distance over the nonzero cosets. Ties go to the
/// lexicographically smallest centered witness (over both signs). When the
/// node budget runs out the result is the bracket [lower_bound, value], with
/// lower_bound = (4/sqrt n) rho(Lambda_w) / c.
CodeDistance min_distance(const TorusCode& code, const SearchOptions& opts = {});

/// ((4/sqrt n) |v|/c, (2 pi/sqrt n) |v|/c), which encloses pair_distance(v, 0).
std::pair<double, double> sandwich(std::span<const mpz_class> v, const mpz_class& c);

struct CodeRow {
  long w = 0;
  mpz_class size;
  std::optional<CodeDistance> distance;
  std::string skipped;  // reason when the member is singular
};

std::vector<CodeRow> code_table(const suborth::SequenceSpec& spec, long w_from, long w_to,
                                const SearchOptions& opts = {});

}  // namespace sublat::sphere
