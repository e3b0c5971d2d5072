#include <doctest.h>

#include "oracles.hpp"
#include "sublat/catalog/catalog.hpp"
#include "sublat/exact/linalg.hpp"
#include "sublat/lattice/density.hpp"
#include "sublat/suborth/sequence.hpp"

using namespace sublat;
using namespace sublat::suborth;
using exact::IntMatrix;

namespace {

SequenceSpec d3(const char* p) { return catalog::dn(3).spec(p); }

}  // namespace

TEST_CASE("dual members of D3*") {
  CHECK(dual_member(d3("good"), 1) == IntMatrix::from_rows({{2, 1, 1}, {-1, 2, 1}, {0, 1, 2}}));
  CHECK(exact::det(dual_member(d3("zero"), 2)) == 32);
  const IntMatrix c = dual_member(d3("cyclic"), 1);
  CHECK(c == IntMatrix::from_rows({{2, 1, 0}, {0, 2, 1}, {1, 1, 1}}));
  CHECK(exact::det(c) == 3);
  CHECK_THROWS_AS(dual_member(d3("good"), 0), DimensionError);
}

TEST_CASE("singular members are reported") {
  const SequenceSpec s(IntMatrix::identity(2), IntMatrix::from_rows({{-1, 0}, {0, 0}}));
  CHECK_THROWS_AS(dual_member(s, 1), SingularMatrixError);
  CHECK(exact::det(dual_member(s, 2)) == 2);
  CHECK_THROWS_AS(SequenceSpec(IntMatrix::from_rows({{1, 1}, {1, 1}}), IntMatrix(2, 2)), SingularMatrixError);
  CHECK_THROWS_AS(SequenceSpec(IntMatrix::identity(2), IntMatrix(3, 3)), DimensionError);
}

TEST_CASE("primal members and the orthogonal sublattice") {
  const SequenceMember z = primal_member(d3("zero"), 1);
  CHECK(z.primal == IntMatrix::from_rows({{2, 0, -2}, {0, 2, -2}, {0, 0, 4}}));
  const SequenceMember g = primal_member(d3("good"), 1);
  CHECK(g.det_dual == 7);
  CHECK(exact::det(g.primal) == 49);
  const OrthogonalSublattice o = orthogonal_sublattice(g);
  CHECK(o.generator == mpz_class(7) * IntMatrix::identity(3));
  CHECK(o.witness == g.dual.transpose());
  CHECK(o.witness * g.primal == o.generator);

  const SequenceMember id = primal_member(SequenceSpec::unperturbed(IntMatrix::identity(4)), 1);
  CHECK(orthogonal_sublattice(id).witness == IntMatrix::identity(4));

  const SequenceMember w3 = primal_member(d3("zero"), 3);
  CHECK(w3.primal == mpz_class(9) * z.primal);
}

TEST_CASE("negative determinants keep a positive sublattice generator") {
  const SequenceSpec s(IntMatrix::from_rows({{0, 1}, {1, 0}}), IntMatrix(2, 2));
  const SequenceMember m = primal_member(s, 3);
  CHECK(m.det_dual == -9);
  CHECK(code_size(m) == 9);
  const OrthogonalSublattice o = orthogonal_sublattice(m);
  CHECK(o.generator == mpz_class(9) * IntMatrix::identity(2));
  CHECK(o.witness * m.primal == o.generator);
}

TEST_CASE("code sizes from Table 1") {
  const long expect[] = {7, 38, 117};
  for (long w = 1; w <= 3; ++w) CHECK(code_size(primal_member(d3("good"), w)) == expect[w - 1]);
  for (long w = 1; w <= 10; ++w) CHECK(code_size(primal_member(d3("zero"), w)) == 4 * w * w * w);
}

TEST_CASE("quotient groups") {
  CHECK(quotient_group(primal_member(d3("zero"), 1)).to_string() == "Z_2 (+) Z_2");
  CHECK(quotient_group(primal_member(d3("good"), 1)).to_string() == "Z_7");
  CHECK(quotient_group(primal_member(catalog::dn(4).spec("good"), 1)).to_string() == "Z_3 (+) Z_6");
  const QuotientGroup t = quotient_group(primal_member(SequenceSpec::unperturbed(IntMatrix::identity(3)), 1));
  CHECK(t.factors.empty());
  CHECK(t.order == 1);
  CHECK(t.to_string() == "trivial");
}

TEST_CASE("classification") {
  CHECK(classify(d3("zero")).kind == ConvergenceKind::Exact);
  const ConvergenceClass g = classify(d3("good"));
  CHECK(g.kind == ConvergenceKind::QuadraticDual);
  CHECK(g.dual_residual.is_zero());
  const ConvergenceClass c = classify(d3("cyclic"));
  CHECK(c.kind == ConvergenceKind::Linear);
  CHECK_FALSE(c.dual_residual.is_zero());
  CHECK(c.describe() == "Linear");

  // P = B* S with S skew: B*^{-1} P = S, and P B*^T + B* P^T = B* (S + S^T) B*^T,
  // so for nonsingular B* the two skew conditions hold together.
  const IntMatrix b = IntMatrix::from_rows({{2, 1}, {0, 1}});
  const IntMatrix s = IntMatrix::from_rows({{0, 1}, {-1, 0}});
  const ConvergenceClass pr = classify(SequenceSpec(b, b * s));
  CHECK(pr.quadratic_primal);
  CHECK(pr.quadratic_dual);
  CHECK(pr.describe() == "QuadraticDual+QuadraticPrimal");
}

TEST_CASE("convergence error") {
  CHECK(convergence_error(d3("good"), 10) == mpq_class(1, 50));
  CHECK(convergence_error(d3("zero"), 7) == 0);
  const mpq_class r = convergence_error(d3("cyclic"), 200) / convergence_error(d3("cyclic"), 100);
  CHECK(lattice::to_double(r) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("density ratios") {
  const catalog::CatalogEntry d3e = catalog::dn(3);
  const lattice::LatticeBasis target(exact::dualadj(*d3e.dual_base));
  CHECK(density_ratio(d3e.spec("zero"), 4, target) == 1.0);
  CHECK(density_ratio(d3e.spec("good"), 1, target) == doctest::Approx(0.7559).epsilon(1e-4));
  CHECK(lattice::center_density(lattice::LatticeBasis(primal_member(d3e.spec("good"), 1).primal)) ==
        doctest::Approx(0.133631).epsilon(1e-5));
}

TEST_CASE("rounded path") {
  lattice::RealMatrix r(2, 2);
  r(0, 0) = 1.25;
  r(1, 0) = -0.25;
  r(1, 1) = 0.75;
  CHECK(rounded_dual_member(r, 2.0) == IntMatrix::from_rows({{3, 0}, {-1, 2}}));
  lattice::RealMatrix integral(2, 2);
  integral(0, 0) = 2;
  integral(0, 1) = 1;
  integral(1, 1) = 3;
  CHECK(rounded_dual_member(integral, 4.0) == IntMatrix::from_rows({{8, 4}, {0, 12}}));
  CHECK_THROWS_AS(rounded_dual_member(r, 0.0), DimensionError);
  CHECK_THROWS_AS(rounded_dual_member(r, 0.1), SingularMatrixError);
}
