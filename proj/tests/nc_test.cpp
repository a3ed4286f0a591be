#include <doctest.h>

#include <random>

#include "confalg/nc.hpp"
#include "confalg/tensor.hpp"

using namespace confalg;

namespace {

NCPolynomial g(Generator x) { return NCPolynomial(x); }
NCPolynomial word(std::initializer_list<Generator> gs) {
  Word w;
  for (Generator x : gs) w.push_back(Letter::gen(x));
  return NCPolynomial::word(w);
}
const Scalar i = Scalar::i();
const auto D = Generator::D();
const auto P0 = Generator::P(0);
const auto C0 = Generator::C(0);

}  // namespace

TEST_CASE("single reorder step") {
  const NCPolynomial expected = word({P0, C0}) + (Scalar(2) * i) * g(D);
  CHECK(normal_form(word({C0, P0})) == expected);
  CHECK(normal_form(word({P0, C0})) == word({P0, C0}));
  CHECK(normal_form(word({C0, P0})).to_string() == "2i D + P0 C0");
}

TEST_CASE("symmetrized product and brackets") {
  CHECK(sym_product(g(P0), g(C0)) == word({P0, C0}) + i * g(D));
  CHECK(nc_bracket(g(D), g(Generator::P(1))) == g(Generator::P(1)));
  CHECK(nc_bracket(g(P0), NCPolynomial::mass_power(2)).is_zero());
  CHECK(nc_bracket(g(D), NCPolynomial::mass_power(-2)) == Scalar(-2) * NCPolynomial::mass_power(-2));
  CHECK(nc_bracket(g(D), NCPolynomial::mass_power(1)) == NCPolynomial::mass_power(1));
  for (Generator x : Generator::basis()) {
    for (Generator y : Generator::basis()) {
      CHECK(nc_bracket(g(x), g(y)) == NCPolynomial(conformal_table()(x, y)));
    }
  }
}

TEST_CASE("mass powers merge and commute past Lorentz generators") {
  CHECK(multiply(NCPolynomial::mass_power(2), NCPolynomial::mass_power(-2)) == NCPolynomial(1));
  CHECK(multiply(NCPolynomial::mass_power(-1), NCPolynomial::mass_power(3)) == NCPolynomial::mass_power(2));
  const NCPolynomial jm = multiply(NCPolynomial::mass_power(-1), g(Generator::J(1, 2)));
  CHECK(jm == multiply(g(Generator::J(1, 2)), NCPolynomial::mass_power(-1)));
  // P0 P0 is traded for M^2 + P_j P_j.
  NCPolynomial expected = NCPolynomial::mass_power(2);
  for (int j = 1; j <= 3; ++j) expected += word({Generator::P(j), Generator::P(j)});
  CHECK(normal_form(word({P0, P0})) == expected);
}

TEST_CASE("normal forms are normal and idempotent") {
  std::mt19937_64 rng(11);
  WordAlgebra alg;
  for (int k = 0; k < 1000; ++k) {
    const NCPolynomial nf = alg.normal_form(random_polynomial(rng, 3, 4));
    for (const auto& [w, c] : nf.terms()) CHECK(alg.is_normal(w));
    CHECK(alg.normal_form(nf) == nf);
  }
}

TEST_CASE("random rewrite order reaches the same normal form") {
  std::mt19937_64 rng(12);
  WordAlgebra alg;
  for (int k = 0; k < 1000; ++k) {
    const NCPolynomial p = random_polynomial(rng, 3, 3);
    const RewriteOptions random_order{RewriteStrategy::Random, rng(), RewriteOptions{}.step_budget};
    CHECK(alg.normal_form(p, random_order) == alg.normal_form(p));
  }
}

TEST_CASE("bracket is a derivation and satisfies Jacobi") {
  std::mt19937_64 rng(13);
  WordAlgebra alg;
  for (int k = 0; k < 30; ++k) {
    const NCPolynomial a = alg.normal_form(random_polynomial(rng, 2, 2));
    const NCPolynomial b = alg.normal_form(random_polynomial(rng, 2, 2));
    const NCPolynomial c = alg.normal_form(random_polynomial(rng, 2, 2));
    CHECK((alg.bracket(a, alg.multiply(b, c)) - alg.multiply(alg.bracket(a, b), c) -
           alg.multiply(b, alg.bracket(a, c)))
              .is_zero());
    CHECK((alg.bracket(alg.bracket(a, b), c) + alg.bracket(alg.bracket(b, c), a) + alg.bracket(alg.bracket(c, a), b))
              .is_zero());
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(14);
  WordAlgebra alg;
  for (int k = 0; k < 50; ++k) {
    const NCPolynomial a = random_polynomial(rng, 2, 2);
    const NCPolynomial b = random_polynomial(rng, 2, 2);
    const NCPolynomial c = random_polynomial(rng, 2, 2);
    CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
  }
}

TEST_CASE("bracket with D multiplies a monomial by its weight") {
  std::mt19937_64 rng(15);
  WordAlgebra alg;
  for (int k = 0; k < 300; ++k) {
    const NCPolynomial p = random_polynomial(rng, 1, 4);
    if (p.is_zero()) continue;
    const int weight = conformal_weight(p.terms().begin()->first);
    const NCPolynomial nf = alg.normal_form(p);
    for (const auto& [w, c] : nf.terms()) CHECK(conformal_weight(w) == weight);
    CHECK(alg.bracket(g(D), nf) == Scalar(weight) * nf);
  }
}

TEST_CASE("a corrupted table makes overlapping reductions disagree") {
  const StructureTable bad = conformal_table()
                                 .with_entry(P0, C0, CoefficientExpr(-3) * AlgebraElement(D))
                                 .with_entry(C0, P0, CoefficientExpr(3) * AlgebraElement(D));
  WordAlgebra alg(bad);
  const NCPolynomial x = g(C0);
  const NCPolynomial y = g(Generator::P(1));
  const NCPolynomial z = g(P0);
  CHECK(alg.multiply(alg.multiply(x, y), z) - alg.multiply(x, alg.multiply(y, z)) == g(Generator::P(1)));
}

TEST_CASE("mass relation and symmetrized products") {
  NCPolynomial contraction;
  for (int r = 0; r < 4; ++r) contraction += metric_component(r, r) * word({Generator::P(r), Generator::P(r)});
  CHECK(multiply(NCPolynomial::mass_power(-2), contraction) == NCPolynomial(1));
  CHECK(sym_product(g(P0), g(Generator::P(1))) == word({P0, Generator::P(1)}));
  std::mt19937_64 rng(16);
  WordAlgebra alg;
  for (int k = 0; k < 30; ++k) {
    const NCPolynomial p = random_polynomial(rng, 2, 2);
    CHECK(alg.sym_product(p, p) == alg.multiply(p, p));
  }
}

TEST_CASE("bracket obeys Leibniz with the symmetrized dot") {
  std::mt19937_64 rng(17);
  WordAlgebra alg;
  for (int k = 0; k < 30; ++k) {
    const NCPolynomial a = alg.normal_form(random_polynomial(rng, 2, 2));
    const NCPolynomial b = alg.normal_form(random_polynomial(rng, 2, 2));
    const NCPolynomial c = alg.normal_form(random_polynomial(rng, 2, 2));
    CHECK(alg.bracket(a, alg.sym_product(b, c)) ==
          alg.sym_product(alg.bracket(a, b), c) + alg.sym_product(b, alg.bracket(a, c)));
  }
}
