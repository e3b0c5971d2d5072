#include "sublat/suborth/sequence.hpp"

#include <cmath>
#include <sstream>

#include "sublat/exact/linalg.hpp"
#include "sublat/exact/normal_form.hpp"
#include "sublat/lattice/density.hpp"

namespace sublat::suborth {

SequenceSpec::SequenceSpec(IntMatrix b, IntMatrix p, std::string l)
    : dual_base(std::move(b)), perturbation(std::move(p)), label(std::move(l)) {
  if (!dual_base.is_square()) throw DimensionError("dual base must be square");
  if (perturbation.rows() != dual_base.rows() || perturbation.cols() != dual_base.cols())
    throw DimensionError("perturbation shape differs from the dual base");
  const mpz_class d = exact::det(dual_base);
  if (d == 0) throw SingularMatrixError("dual base is singular", d);
}

SequenceSpec SequenceSpec::unperturbed(IntMatrix b, std::string l) {
  IntMatrix zero(b.rows(), b.cols());
  return SequenceSpec(std::move(b), std::move(zero), std::move(l));
}

IntMatrix dual_member(const SequenceSpec& spec, long w) {
  if (w < 1) throw DimensionError("sequence index w must be at least 1");
  IntMatrix m = mpz_class(w) * spec.dual_base + spec.perturbation;
  const mpz_class d = exact::det(m);
  if (d == 0) throw SingularMatrixError("member w = " + std::to_string(w) + " is singular", d);
  return m;
}

SequenceMember member_from_dual(IntMatrix dual, double w) {
  SequenceMember m;
  m.w = w;
  m.det_dual = exact::det(dual);
  if (m.det_dual == 0) throw SingularMatrixError("dual generator is singular", 0);
  m.primal = exact::dualadj(dual);
  m.dual = std::move(dual);
  if (m.dual.transpose() * m.primal != m.det_dual * IntMatrix::identity(m.dim()))
    throw ConsistencyError("orthogonal sublattice witness failed");
  return m;
}

SequenceMember primal_member(const SequenceSpec& spec, long w) {
  return member_from_dual(dual_member(spec, w), static_cast<double>(w));
}

IntMatrix rounded_dual_member(const lattice::RealMatrix& base, double w) {
  if (!(w > 0)) throw DimensionError("w must be positive");
  if (base.rows != base.cols || base.rows == 0) throw DimensionError("dual base must be square");
  IntMatrix m(base.rows, base.cols);
  for (std::size_t i = 0; i < base.rows; ++i)
    for (std::size_t j = 0; j < base.cols; ++j) m(i, j) = std::round(w * base(i, j));
  const mpz_class d = exact::det(m);
  if (d == 0) throw SingularMatrixError("rounded member is singular", d);
  return m;
}

OrthogonalSublattice orthogonal_sublattice(const SequenceMember& m) {
  OrthogonalSublattice s{abs(m.det_dual) * IntMatrix::identity(m.dim()), m.dual.transpose()};
  // witness * B_w = det * I; flip the witness sign so the generator is positive
  if (m.det_dual < 0) s.witness = -s.witness;
  if (s.witness * m.primal != s.generator) throw ConsistencyError("orthogonal sublattice witness failed");
  return s;
}

mpz_class code_size(const SequenceMember& m) { return abs(m.det_dual); }

std::string QuotientGroup::to_string() const {
  if (factors.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " (+) " : "") << "Z_" << factors[i];
  return os.str();
}

QuotientGroup quotient_group(const SequenceMember& m) {
  QuotientGroup g;
  g.order = 1;
  for (const mpz_class& d : exact::snf(m.dual).invariants) {
    if (d == 1) continue;
    g.factors.push_back(d);
    g.order *= d;
  }
  if (g.order != abs(m.det_dual)) throw ConsistencyError("quotient order differs from the determinant");
  return g;
}

const char* to_string(ConvergenceKind k) {
  switch (k) {
    case ConvergenceKind::Exact: return "Exact";
    case ConvergenceKind::QuadraticDual: return "QuadraticDual";
    case ConvergenceKind::QuadraticPrimal: return "QuadraticPrimal";
    case ConvergenceKind::Linear: return "Linear";
  }
  return "?";
}

std::string ConvergenceClass::describe() const {
  if (exact) return "Exact";
  std::string s;
  if (quadratic_dual) s = "QuadraticDual";
  if (quadratic_primal) s += s.empty() ? "QuadraticPrimal" : "+QuadraticPrimal";
  return s.empty() ? "Linear" : s;
}

ConvergenceClass classify(const SequenceSpec& spec) {
  ConvergenceClass c;
  const IntMatrix& b = spec.dual_base;
  const IntMatrix& p = spec.perturbation;
  c.exact = p.is_zero();
  c.dual_residual = p * b.transpose() + b * p.transpose();
  c.quadratic_dual = c.dual_residual.is_zero();
  const RatMatrix s = exact::inverse(b) * exact::to_rational(p);
  c.primal_residual = s + s.transpose();
  c.quadratic_primal = c.primal_residual.is_zero();
  if (c.exact) c.kind = ConvergenceKind::Exact;
  else if (c.quadratic_dual) c.kind = ConvergenceKind::QuadraticDual;
  else if (c.quadratic_primal) c.kind = ConvergenceKind::QuadraticPrimal;
  else c.kind = ConvergenceKind::Linear;
  return c;
}

mpq_class convergence_error(const SequenceSpec& spec, long w) {
  const IntMatrix bw = dual_member(spec, w);
  const RatMatrix gw = exact::to_rational(bw * bw.transpose());
  const RatMatrix g = exact::to_rational(spec.dual_base * spec.dual_base.transpose());
  return exact::max_abs(mpq_class(1, w * w) * gw - g);
}

mpq_class member_density_squared(const SequenceMember& m) {
  return lattice::center_density_squared(lattice::LatticeBasis(m.primal));
}

double density_ratio(const SequenceMember& m, const mpq_class& target_density_sq) {
  return lattice::sqrt_to_double(member_density_squared(m) / target_density_sq);
}

double density_ratio(const SequenceSpec& spec, long w, const lattice::LatticeBasis& target) {
  return density_ratio(primal_member(spec, w), lattice::center_density_squared(target));
}

}  // namespace sublat::suborth
