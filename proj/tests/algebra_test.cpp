#include <doctest.h>

#include <set>

#include "confalg/algebra.hpp"

using namespace confalg;

namespace {
const auto D = Generator::D();
AlgebraElement scaled(long c, const AlgebraElement& a) { return CoefficientExpr(c) * a; }
}  // namespace

TEST_CASE("basis layout and parsing") {
  CHECK(Generator::basis().size() == 15);
  std::set<std::string> names;
  for (Generator g : Generator::basis()) names.insert(g.name());
  CHECK(names.size() == 15);
  CHECK(Generator::parse("J10")->first == -1);
  CHECK(Generator::parse("J10")->second == Generator::J(0, 1));
  CHECK_FALSE(Generator::parse("Q2").has_value());
  CHECK(AlgebraElement::J(2, 2).is_zero());
  CHECK(AlgebraElement::J(3, 1) == -AlgebraElement::J(1, 3));
}

TEST_CASE("sample brackets") {
  const auto& t = conformal_table();
  CHECK(t(D, Generator::P(1)) == AlgebraElement(Generator::P(1)));
  CHECK(t(Generator::P(0), Generator::C(0)) == scaled(-2, D));
  CHECK(t(Generator::J(0, 1), Generator::P(1)) == -AlgebraElement(Generator::P(0)));
  CHECK(t(Generator::C(2), Generator::C(3)).is_zero());
  CHECK(t(Generator::P(1), Generator::C(2)) == scaled(-2, AlgebraElement::J(1, 2)));
  // Bilinear extension to a non-basis element.
  const AlgebraElement lhs = AlgebraElement(Generator::P(0)) + AlgebraElement(Generator::P(1));
  CHECK(bracket(lhs, Generator::C(0)) == scaled(-2, D) + scaled(-2, AlgebraElement::J(1, 0)));
}

TEST_CASE("rule table agrees with the independent transcription on every ordered pair") {
  for (Generator a : Generator::basis()) {
    for (Generator b : Generator::basis()) {
      INFO(a.name(), " ", b.name());
      CHECK(conformal_table()(a, b) == reference_bracket(a, b));
    }
  }
}

TEST_CASE("antisymmetry and conformal weights") {
  const auto& t = conformal_table();
  for (Generator a : Generator::basis()) {
    CHECK(t(a, a).is_zero());
    for (Generator b : Generator::basis()) CHECK(t(a, b) == -t(b, a));
    CHECK(t(D, a) == scaled(a.conformal_weight(), a));
  }
}

TEST_CASE("Jacobi identity on every triple") {
  const auto entries = enumerate_jacobi();
  CHECK(entries.size() == 455 + 225);
  std::size_t distinct = 0;
  for (const auto& e : entries) {
    if (!e.degenerate) ++distinct;
    CHECK(e.residual.is_zero());
  }
  CHECK(distinct == 455);
  CHECK(jacobi_residual(Generator::P(0), Generator::C(1), D).is_zero());
  CHECK(jacobi_residual(Generator::P(0), Generator::P(1), Generator::C(2)).is_zero());
}

TEST_CASE("a corrupted table breaks Jacobi") {
  const auto& t = conformal_table();
  const StructureTable bad = t.with_entry(Generator::P(0), Generator::C(0), scaled(-3, D));
  CHECK(bad(Generator::P(0), Generator::C(0)) == scaled(-3, D));
  std::size_t nonzero = 0;
  for (const auto& e : enumerate_jacobi(bad)) nonzero += e.residual.is_zero() ? 0 : 1;
  CHECK(nonzero > 0);
}
