#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sublat/exact/matrix.hpp"

namespace sublat::lattice {

using exact::IntMatrix;
using exact::RatMatrix;

/// Row-major matrix of doubles, used for irrational generators (Cholesky factors).
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Symmetric positive definite matrix of exact rationals, G = B * B^T.
using GramMatrix = RatMatrix;

/// Full-rank k x n generator (rows are basis vectors, k <= n) times a positive
/// rational scale. Bases that come from floating data are rationalized on
/// construction and remember it.
class LatticeBasis {
 public:
  explicit LatticeBasis(RatMatrix rows, mpq_class scale = 1);
  explicit LatticeBasis(const IntMatrix& rows, mpq_class scale = 1);

  /// Rounds every entry to the nearest multiple of 2^-precision_bits.
  static LatticeBasis from_real(const RealMatrix& rows, int precision_bits = 40);

  const RatMatrix& matrix() const { return matrix_; }
  const mpq_class& scale() const { return scale_; }
  /// Entry precision in bits when built from floating data, otherwise empty.
  std::optional<int> rationalized_bits() const { return rationalized_bits_; }

  std::size_t rank() const { return matrix_.rows(); }
  std::size_t ambient_dim() const { return matrix_.cols(); }

  /// scale * matrix
  RatMatrix generator() const;

 private:
  RatMatrix matrix_;
  mpq_class scale_;
  std::optional<int> rationalized_bits_;
};

/// Exact B * B^T (including scale^2).
GramMatrix gram(const LatticeBasis& b);

struct Volume {
  mpq_class squared;                // det(gram)
  std::optional<mpq_class> exact;   // present when sqrt(det(gram)) is rational
  double value = 0.0;
};

/// sqrt(det(gram(B))); exact for square bases (|det B| * scale^n).
Volume volume(const LatticeBasis& b);

/// (B B^T)^{-1} B, which is B^{-T} for square B.
LatticeBasis dual(const LatticeBasis& b);

/// max_ij |G1_ij - G2_ij|.
mpq_class gram_error_exact(const GramMatrix& g1, const GramMatrix& g2);
double gram_error(const GramMatrix& g1, const GramMatrix& g2);

/// num / den as a double without overflow for huge operands.
double ratio_to_double(const mpz_class& num, const mpz_class& den);
double to_double(const mpq_class& q);

}  // namespace sublat::lattice
