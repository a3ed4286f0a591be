#include <doctest.h>

#include <random>

#include "confalg/diffop.hpp"
#include "confalg/realization.hpp"

using namespace confalg;

namespace {

bool same(const RingElement& a, const RingElement& b) { return (a - b).is_zero(); }
bool same(const DiffOperator& a, const DiffOperator& b) { return (a - b).is_zero(); }

Polynomial x(int v) { return Polynomial::var(v); }

}  // namespace

TEST_CASE("polynomial arithmetic and calculus") {
  const Polynomial p = x(0) * x(0) + Scalar(3) * x(1) - Polynomial(2);
  CHECK(p.degree() == 2);
  CHECK(p.derivative(0) == Scalar(2) * x(0));
  CHECK(p.substitute(0, x(1) + Polynomial(1)) == x(1) * x(1) + Scalar(5) * x(1) - Polynomial(1));
  CHECK(p.evaluate({Scalar(2), Scalar::rational(1, 3)}) == Scalar(3));
  CHECK((p - p).is_zero());
  CHECK((x(0) + x(1)) * (x(0) - x(1)) == x(0) * x(0) - x(1) * x(1));
}

TEST_CASE("exact system solving") {
  SUBCASE("linear") {
    const auto r = solve_system({x(0) + x(1) - Polynomial(3), x(0) - x(1) - Polynomial(1)}, 2);
    REQUIRE(r);
    CHECK(r->values.at(0) == Scalar(2));
    CHECK(r->values.at(1) == Scalar(1));
    CHECK(r->free.empty());
  }
  SUBCASE("bilinear with a rational root") {
    const auto r = solve_system({x(0) * x(1) - Polynomial(6), x(0) - Polynomial(2)}, 2);
    REQUIRE(r);
    CHECK(r->values.at(1) == Scalar(3));
  }
  SUBCASE("quadratic") {
    const auto r = solve_system({x(0) * x(0) - Scalar(4) * x(0) + Polynomial(4)}, 1);
    REQUIRE(r);
    CHECK(r->values.at(0) == Scalar(2));
  }
  SUBCASE("inconsistent") { CHECK_FALSE(solve_system({x(0) - Polynomial(1), x(0) - Polynomial(2)}, 1)); }
  SUBCASE("underdetermined") {
    const auto r = solve_system({x(0) - x(1)}, 2);
    REQUIRE(r);
    CHECK(r->free.size() == 1);
  }
}

TEST_CASE("ring reductions") {
  const RingContext ctx(2);
  const RingElement w = RingElement::omega(ctx, 0);
  RingElement k2;
  for (int j = 1; j <= 3; ++j) k2 += RingElement::k(ctx, 0, j) * RingElement::k(ctx, 0, j);
  CHECK(same(w * w, k2));
  const RingElement sigma = RingElement::sigma_power(ctx, 1);
  CHECK(same(sigma * sigma, RingElement(ctx, ctx.s())));
  CHECK(same(RingElement::sigma_power(ctx, -1) * sigma, RingElement(ctx, Scalar(1))));
  CHECK(same(RingElement::sigma_power(ctx, -3) * RingElement::sigma_power(ctx, 2), RingElement::sigma_power(ctx, -1)));
  CHECK(same(RingElement::omega_power(ctx, 1, -2) * RingElement::omega(ctx, 1), RingElement::omega_power(ctx, 1, -1)));
}

TEST_CASE("ring derivatives follow from the defining relations") {
  const RingContext ctx(2);
  for (int a = 0; a < 2; ++a) {
    for (int j = 1; j <= 3; ++j) {
      const RingElement k = RingElement::k(ctx, a, j);
      // d w = k / w
      CHECK(same(RingElement::omega(ctx, a).derivative(a, j), k * RingElement::omega_power(ctx, a, -1)));
      // d(sigma^2) = d s, d(sigma^-1 sigma) = 0
      const RingElement sigma = RingElement::sigma_power(ctx, 1);
      CHECK(same((sigma * sigma).derivative(a, j), RingElement(ctx, ctx.s()).derivative(a, j)));
      CHECK(same(Scalar(2) * sigma * sigma.derivative(a, j), RingElement(ctx, ctx.s()).derivative(a, j)));
      CHECK((RingElement::sigma_power(ctx, -1) * sigma).derivative(a, j).is_zero());
    }
  }
}

TEST_CASE("evaluation at the counterpropagating point") {
  const RingContext ctx(2);
  const MomentumPoint pt = counterpropagating_point(1);
  CHECK(RingElement(ctx, ctx.s()).evaluate(pt) == Scalar(4));
  CHECK(RingElement::sigma_power(ctx, 1).evaluate(pt) == Scalar(2));
  CHECK(RingElement::sigma_power(ctx, -2).evaluate(pt) == Scalar::rational(1, 4));
  MomentumPoint collinear = pt;
  collinear.k[1] = {0, 0, 1};
  collinear.sigma.reset();
  CHECK_THROWS_AS(RingElement::sigma_power(ctx, -2).evaluate(collinear), EvaluationError);
}

TEST_CASE("differential operators compose like their actions") {
  const RingContext ctx(2);
  std::mt19937_64 rng(21);
  const DiffOperator d01 = DiffOperator::partial(ctx, 0, 1);
  const DiffOperator k01(RingElement::k(ctx, 0, 1));
  CHECK(same(d01 * k01 - k01 * d01, DiffOperator(ctx, 1)));
  CHECK(same(normalized_commutator(d01, k01), DiffOperator(ctx, -Scalar::i())));
  for (int n = 0; n < 20; ++n) {
    const DiffOperator a = DiffOperator(random_test_function(ctx, rng)) * DiffOperator::partial(ctx, 1, 2) +
                           DiffOperator(RingElement::omega_power(ctx, 0, -1));
    const DiffOperator b = DiffOperator(RingElement::sigma_power(ctx, 1)) * DiffOperator::partial(ctx, 0, 3) *
                           DiffOperator::partial(ctx, 1, 2);
    const RingElement f = random_test_function(ctx, rng);
    CHECK(same((a * b).apply(f), a.apply(b.apply(f))));
    CHECK(same((a + b).apply(f), a.apply(f) + b.apply(f)));
  }
}

TEST_CASE("random momentum points are on shell") {
  const RingContext ctx(3);
  std::mt19937_64 rng(22);
  for (int n = 0; n < 50; ++n) {
    const MomentumPoint pt = random_momentum_point(ctx, rng);
    for (int a = 0; a < 3; ++a) {
      Scalar k2 = 0;
      for (const Scalar& c : pt.k[static_cast<std::size_t>(a)]) k2 += c * c;
      CHECK(k2 == pt.omega[static_cast<std::size_t>(a)] * pt.omega[static_cast<std::size_t>(a)]);
    }
    CHECK_FALSE(RingElement(ctx, ctx.s()).evaluate(pt).is_zero());
  }
}
