#include <doctest.h>

#include <random>

#include "confalg/matrix_rep.hpp"
#include "confalg/realization.hpp"

using namespace confalg;

namespace {
bool same(const DiffOperator& a, const DiffOperator& b) { return (a - b).is_zero(); }
}  // namespace

TEST_CASE("matrix representation solves with rational coefficients") {
  const MatrixRep rep = build_matrix_rep();
  CHECK(rep.coefficients.alpha == Scalar(1));
  CHECK(rep.coefficients.beta == Scalar(1));
  CHECK(rep.coefficients.gamma == Scalar(-1));
  CHECK(rep.coefficients.delta == Scalar(1));
  CHECK(rep.coefficients.zeta == Scalar(1));
  for (const auto& r : verify_matrix_rep(rep)) {
    INFO(r.a.name(), " ", r.b.name());
    CHECK(is_zero(r.residual));
  }
  CHECK(verify_matrix_rep(rep).size() == 105);
  for (const auto& [gen, m] : metric_antisymmetry_residuals(rep)) CHECK(is_zero(m));
  CHECK(commutator(rep(Generator::P(0)), rep(Generator::C(0))) ==
        rep.image(CoefficientExpr(-2) * AlgebraElement(Generator::D())));
}

TEST_CASE("rotation generator entries") {
  const Matrix6 l01 = rotation_generator(0, 1);
  int nonzero = 0;
  for (const Scalar& x : l01) nonzero += x.is_zero() ? 0 : 1;
  CHECK(nonzero == 2);
  CHECK(at(l01, 0, 1) == Scalar(-1));
  CHECK(at(l01, 1, 0) == Scalar(-1));
  CHECK(rotation_generator(1, 0) == Scalar(-1) * l01);
}

TEST_CASE("a corrupted table has no matrix representation") {
  const StructureTable bad =
      conformal_table().with_entry(Generator::P(0), Generator::C(0), CoefficientExpr(-3) * AlgebraElement(Generator::D()));
  bool rejected = false;
  try {
    const MatrixRep rep = build_matrix_rep(bad);
    for (const auto& r : verify_matrix_rep(rep, bad)) rejected = rejected || !is_zero(r.residual);
  } catch (const std::runtime_error&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("one-particle ordering constants") {
  const OneParticleSolution& sol = one_particle_solution();
  CHECK(sol.constants.dilatation == Scalar(1));
  CHECK(sol.constants.boost == Scalar(0));
  CHECK(sol.constants.energy == Scalar(0));
  CHECK(sol.constants.momentum == Scalar(0));
  CHECK(sol.equations > 0);
  for (const auto& r : verify_realization_pairs(Realization(1))) {
    INFO(r.a.name(), " ", r.b.name());
    CHECK(r.residual.is_zero());
  }
}

TEST_CASE("a wrong ordering constant breaks closure") {
  OrderingConstants c = one_particle_solution().constants;
  c.dilatation = 2;
  std::size_t broken = 0;
  for (const auto& r : verify_realization_pairs(Realization(1, c))) broken += r.residual.is_zero() ? 0 : 1;
  CHECK(broken > 0);
}

TEST_CASE("two-particle realization") {
  Realization r(2);
  for (const auto& p : verify_realization_pairs(r)) CHECK(p.residual.is_zero());
  const auto& ring = r.ring();
  const DiffOperator d = r.generator(Generator::D());
  const DiffOperator p1 = r.generator(Generator::P(1));
  CHECK(same(normalized_commutator(d, p1), p1));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      CHECK(normalized_commutator(r.generator(Generator::P(mu)), r.generator(Generator::P(nu))).is_zero());
  std::mt19937_64 rng(31);
  const RingElement f = random_test_function(ring, rng);
  CHECK((normalized_commutator(d, p1).apply(f) - p1.apply(f)).is_zero());
}

TEST_CASE("two-photon mass at the counterpropagating point") {
  Realization r(2);
  OperatorCatalog cat(OperatorBackend{&r});
  const MomentumPoint pt = counterpropagating_point(1);
  const RingElement one(r.ring(), Scalar(1));
  CHECK(evaluate_at_point(cat.mass_squared_from_momenta(), one, pt) == Scalar(4));
  CHECK(evaluate_at_point(cat.mass_power(2), one, pt) == Scalar(4));
  CHECK(evaluate_at_point(cat.momentum(0), one, pt) == Scalar(2));
  for (int j = 1; j <= 3; ++j) CHECK(evaluate_at_point(cat.momentum(j), one, pt).is_zero());
  CHECK(same(cat.mass_squared_from_momenta(), cat.mass_power(2)));
}

TEST_CASE("realized spin tensor is nonzero and the map is multiplicative") {
  Realization r(2);
  OperatorCatalog cat(OperatorBackend{&r});
  CHECK_FALSE(cat.spin_tensor(1, 2).is_zero());
  std::mt19937_64 rng(32);
  WordAlgebra alg;
  for (int k = 0; k < 5; ++k) {
    const NCPolynomial p = random_polynomial(rng, 2, 2);
    const NCPolynomial q = random_polynomial(rng, 2, 2);
    CHECK(same(r.realize(alg.multiply(p, q)), r.realize(p) * r.realize(q)));
  }
  CHECK_THROWS_AS(Realization(1).mass_power(-1), std::invalid_argument);
}

TEST_CASE("canonical commutator at random points") {
  Realization r(2);
  OperatorCatalog cat(OperatorBackend{&r});
  std::mt19937_64 rng(33);
  const DiffOperator op = cat.bracket(cat.momentum(1), cat.position(1));
  for (int k = 0; k < 10; ++k) {
    const MomentumPoint pt = random_momentum_point(r.ring(), rng);
    const RingElement f = random_test_function(r.ring(), rng);
    CHECK(evaluate_at_point(op, f, pt) == f.evaluate(pt));
  }
}
