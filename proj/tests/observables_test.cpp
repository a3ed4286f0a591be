#include <doctest.h>

#include <limits>

#include "confalg/observables.hpp"

using namespace confalg;

namespace {

NCPolynomial g(Generator x) { return NCPolynomial(x); }

/// Generator letters count 1, M^k counts k.
int scaling_degree(const Word& w) {
  int d = 0;
  for (Letter l : w) d += l.is_generator() ? 1 : l.power();
  return d;
}

struct ClassicalPoint {
  std::array<Scalar, 4> p;          // lower P_mu
  std::array<std::array<Scalar, 4>, 4> j;  // lower J_{mu nu}
  Scalar mass;
};

Scalar power(const Scalar& x, int k) {
  Scalar out = 1;
  for (int n = 0; n < (k < 0 ? -k : k); ++n) out *= x;
  return k < 0 ? Scalar(1) / out : out;
}

/// Value of the top-degree part with every letter replaced by a number.
Scalar classical_value(const NCPolynomial& p, const ClassicalPoint& pt) {
  int top = std::numeric_limits<int>::min();
  for (const auto& [w, c] : p.terms()) top = std::max(top, scaling_degree(w));
  Scalar out = 0;
  for (const auto& [w, c] : p.terms()) {
    if (scaling_degree(w) != top) continue;
    Scalar v = c.scalar_value();
    for (Letter l : w) {
      if (!l.is_generator()) {
        v *= power(pt.mass, l.power());
        continue;
      }
      const Generator x = l.generator();
      switch (x.kind()) {
        case GenKind::P: v *= pt.p[static_cast<std::size_t>(x.index())]; break;
        case GenKind::J: v *= pt.j[static_cast<std::size_t>(x.index(0))][static_cast<std::size_t>(x.index(1))]; break;
        default: FAIL("unexpected generator in the classical limit"); break;
      }
    }
    out += v;
  }
  return out;
}

}  // namespace

TEST_CASE("position examples") {
  ObservableCatalog cat;
  CHECK(nc_bracket(g(Generator::P(0)), cat.position(0)) == NCPolynomial(-1));
  CHECK(nc_bracket(g(Generator::D()), cat.position(2)) == -cat.position(2));
  CHECK(nc_bracket(g(Generator::J(0, 1)), cat.position(1)) == -cat.position(0));
  CHECK(cat.bracket(cat.momentum(1), cat.mass_power(2)).is_zero());
}

TEST_CASE("mass-squared letter equals the momentum contraction") {
  ObservableCatalog cat;
  CHECK(cat.mass_squared_from_momenta() == cat.mass_power(2));
  const NCPolynomial d_shift = cat.bracket(g(Generator::D()), cat.mass_power(2)) - Scalar(2) * cat.mass_power(2);
  CHECK(d_shift.is_zero());
  NCPolynomial c_shift = cat.bracket(g(Generator::C(0)), cat.mass_power(2));
  for (int r = 0; r < 4; ++r) {
    c_shift -= Scalar(4) * cat.sym(cat.boost_dilatation(0, r), cat.momentum_upper(r));
  }
  CHECK(c_shift.is_zero());
}

TEST_CASE("identity families hold in the word algebra") {
  ObservableCatalog cat;
  CHECK(all_zero(check_mass_shifts(cat)));
  CHECK(all_zero(check_mpower_consistency(cat)));
  CHECK(all_zero(check_canonical_commutators(cat)));
  CHECK(check_canonical_commutators(cat).size() == 16);
  CHECK(all_zero(check_position_dilatation(cat)));
  CHECK(all_zero(check_position_lorentz(cat)));
  CHECK(check_position_lorentz(cat).size() == 24);
  CHECK(all_zero(check_pauli_lubanski_orthogonality(cat)));
  CHECK(all_zero(check_dilatation_decomposition(cat)));
  CHECK(all_zero(check_accel_mass_shift(cat)));
  CHECK(all_zero(check_redshift(cat)));
}

TEST_CASE("spin tensor is not identically zero") {
  ObservableCatalog cat;
  CHECK_FALSE(cat.spin_tensor(1, 2).is_zero());
  CHECK(cat.spin_tensor(2, 2).is_zero());
}

TEST_CASE("Pauli-Lubanski vector reduces to the brute-force classical sum") {
  ObservableCatalog cat;
  ClassicalPoint pt;
  pt.p = {Scalar(5), Scalar(-3), Scalar(0), Scalar(0)};  // P.P = 16
  pt.mass = 4;
  const std::array<std::array<long, 4>, 4> j{{{0, 2, -1, 3}, {-2, 0, 5, -4}, {1, -5, 0, 7}, {-3, 4, -7, 0}}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) pt.j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  for (int mu = 0; mu < 4; ++mu) {
    Scalar brute = 0;
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          const Scalar eps_up = -epsilon_component({mu, n, r, s});
          brute += Scalar::rational(-1, 2) * eps_up * pt.j[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] *
                   pt.p[static_cast<std::size_t>(s)] / pt.mass;
        }
    INFO("mu = ", mu);
    CHECK(classical_value(cat.pauli_lubanski(mu), pt) == brute);
  }
}

TEST_CASE("concrete acceleration specializes the formal result") {
  ObservableCatalog cat;
  const auto e3 = unit_direction(3);
  const NCPolynomial formal = cat.accel_generator().specialize_accel(e3);
  CHECK(formal == cat.with_accel(e3).accel_generator());
  CHECK(formal == Scalar::rational(1, 2) * g(Generator::C(3)));
}
