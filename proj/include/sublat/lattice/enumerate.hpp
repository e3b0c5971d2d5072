#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "sublat/lattice/basis.hpp"
#include "sublat/lattice/gso.hpp"
#include "sublat/simd/kernels.hpp"

namespace sublat::lattice {

/// Largest rank accepted by exhaustive enumeration.
inline constexpr std::size_t kMaxEnumerationDim = 26;

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool budget_exhausted = false;
};

/// Schnorr-Euchner (zig-zag) Fincke-Pohst enumeration over a GSO.
///
/// Visits every nonzero integer coefficient vector x whose squared length
/// sum_i (x_i + sum_{j>i} mu_ji x_j)^2 |b*_i|^2 is at most the current radius,
/// exactly one of each pair +-x (the one whose last nonzero entry is positive).
/// The visitor is called as
///
///     double visit(std::span<const long> x, double norm2, std::span<const double> coords)
///
/// and returns the squared radius to continue with, which may shrink the
/// search. When basis rows are supplied, coords holds x * rows in ambient
/// coordinates; otherwise it is empty.
class Enumerator {
 public:
  explicit Enumerator(FloatGso gso, const simd::KernelTable& kernels = simd::active_kernels())
      : gso_(std::move(gso)), kernels_(&kernels) {}

  Enumerator(FloatGso gso, RealMatrix rows, const simd::KernelTable& kernels = simd::active_kernels())
      : gso_(std::move(gso)), rows_(std::move(rows)), kernels_(&kernels) {
    if (rows_.rows != gso_.dim) throw DimensionError("coordinate rows do not match the GSO dimension");
  }

  std::size_t dim() const { return gso_.dim; }

  /// node_budget = 0 means unlimited.
  template <class Visitor>
  EnumerationStats run(double radius2, Visitor&& visit, std::uint64_t node_budget = 0) {
    stats_ = {};
    radius2_ = radius2;
    budget_ = node_budget;
    x_.assign(gso_.dim, 0);
    coords_.assign(rows_.rows == 0 ? 0 : (gso_.dim + 1) * rows_.cols, 0.0);
    if (gso_.dim > 0) descend(gso_.dim - 1, 0.0, true, visit);
    return stats_;
  }

 private:
  template <class Visitor>
  void descend(std::size_t k, double partial, bool top_zero, Visitor& visit) {
    const std::size_t n = gso_.dim;
    double c = 0.0;
    for (std::size_t j = k + 1; j < n; ++j) c -= static_cast<double>(x_[j]) * gso_.mu[j * n + k];
    const double bk = gso_.bnorm2[k];
    long xk = top_zero ? 0 : std::lround(c);
    long dx = c >= static_cast<double>(xk) ? 1 : -1;
    long ddx = dx;
    const std::size_t amb = rows_.cols;
    const bool track = !coords_.empty();

    for (;;) {
      if (budget_ != 0 && stats_.nodes >= budget_) {
        stats_.budget_exhausted = true;
        return;
      }
      ++stats_.nodes;
      const double diff = static_cast<double>(xk) - c;
      const double len = partial + diff * diff * bk;
      if (len > radius2_) break;
      x_[k] = xk;
      if (track) {
        double* here = coords_.data() + k * amb;
        const double* above = coords_.data() + (k + 1) * amb;
        std::copy(above, above + amb, here);
        kernels_->axpy(static_cast<double>(xk), rows_.data.data() + k * amb, here, amb);
      }
      const bool zero_so_far = top_zero && xk == 0;
      if (k == 0) {
        if (!zero_so_far) {
          ++stats_.leaves;
          radius2_ = visit(std::span<const long>(x_), len,
                           std::span<const double>(coords_.data(), track ? amb : 0));
        }
      } else {
        descend(k - 1, len, zero_so_far, visit);
        if (stats_.budget_exhausted) return;
      }
      if (top_zero) {
        ++xk;
      } else {
        xk += dx;
        ddx = -ddx;
        dx = ddx - dx;
      }
    }
    x_[k] = 0;
  }

  FloatGso gso_;
  RealMatrix rows_;
  const simd::KernelTable* kernels_;
  EnumerationStats stats_;
  double radius2_ = 0.0;
  std::uint64_t budget_ = 0;
  std::vector<long> x_;
  std::vector<double> coords_;
};

struct SvpResult {
  exact::IntVector coeffs;             // with respect to the input basis
  std::vector<mpq_class> vector;       // ambient coordinates (empty for Gram input)
  mpq_class norm_sq;                   // exact squared length
  EnumerationStats stats;
};

/// Exact shortest nonzero vector. Among vectors of minimal length the one with
/// the lexicographically smallest coefficient vector (over both signs) is
/// returned. Throws CapabilityError above kMaxEnumerationDim.
SvpResult shortest_vector(const LatticeBasis& b);
SvpResult shortest_vector(const GramMatrix& g);

}  // namespace sublat::lattice
