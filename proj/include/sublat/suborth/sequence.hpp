#pragma once

#include <string>
#include <vector>

#include "sublat/exact/matrix.hpp"
#include "sublat/lattice/basis.hpp"

namespace sublat::suborth {

using exact::IntMatrix;
using exact::RatMatrix;

/// The triple (B*, P, label) behind the sequence B*_w = w B* + P.
struct SequenceSpec {
  IntMatrix dual_base;
  IntMatrix perturbation;
  std::string label;

  /// Validates that B* is square and nonsingular and that P has its shape.
  SequenceSpec(IntMatrix dual_base, IntMatrix perturbation, std::string label = {});
  /// P = 0.
  static SequenceSpec unperturbed(IntMatrix dual_base, std::string label = {});

  std::size_t dim() const { return dual_base.rows(); }
};

/// One realized member: B*_w and B_w = dualadj(B*_w).
struct SequenceMember {
  double w = 0;  // integral except on the rounded path
  IntMatrix dual;
  IntMatrix primal;
  mpz_class det_dual;

  std::size_t dim() const { return dual.rows(); }
};

/// w B* + P; throws SingularMatrixError when the result is singular.
IntMatrix dual_member(const SequenceSpec& spec, long w);

/// Builds B_w and checks (B*_w)^T B_w = det I; throws SingularMatrixError.
SequenceMember primal_member(const SequenceSpec& spec, long w);

/// Same as primal_member for an arbitrary nonsingular dual generator.
SequenceMember member_from_dual(IntMatrix dual, double w);

/// Entrywise nearest integer of w * B* (halves away from zero).
IntMatrix rounded_dual_member(const lattice::RealMatrix& dual_base, double w);

struct OrthogonalSublattice {
  IntMatrix generator;  // det_dual * I
  IntMatrix witness;    // (B*_w)^T, with witness * B_w == generator
};

OrthogonalSublattice orthogonal_sublattice(const SequenceMember& m);

/// M(w) = |det B*_w|.
mpz_class code_size(const SequenceMember& m);

/// Invariant factors of Lambda_w / (det Z^n) with the factors equal to 1 dropped.
struct QuotientGroup {
  std::vector<mpz_class> factors;
  mpz_class order;

  /// "Z_a (+) Z_b", or "trivial" for the one-element group.
  std::string to_string() const;
};

QuotientGroup quotient_group(const SequenceMember& m);

enum class ConvergenceKind { Exact, QuadraticDual, QuadraticPrimal, Linear };

const char* to_string(ConvergenceKind k);

struct ConvergenceClass {
  ConvergenceKind kind = ConvergenceKind::Linear;  // strongest condition that holds
  bool exact = false;
  bool quadratic_dual = false;
  bool quadratic_primal = false;
  IntMatrix dual_residual;    // P B*^T + B* P^T
  RatMatrix primal_residual;  // S + S^T with S = B*^{-1} P

  /// Every condition that holds, e.g. "QuadraticDual+QuadraticPrimal".
  std::string describe() const;
};

ConvergenceClass classify(const SequenceSpec& spec);

/// max_ij |(1/w^2) G*_w - G*|_ij with G*_w = B*_w B*_w^T.
mpq_class convergence_error(const SequenceSpec& spec, long w);

/// delta(Lambda_w) / delta(target), evaluated as the square root of an exact ratio.
double density_ratio(const SequenceSpec& spec, long w, const lattice::LatticeBasis& target);
double density_ratio(const SequenceMember& m, const mpq_class& target_density_sq);

/// Exact squared center density of Lambda_w (generated by B_w).
mpq_class member_density_squared(const SequenceMember& m);

}  // namespace sublat::suborth
