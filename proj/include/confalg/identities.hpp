#pragma once

// Identity checks over any Catalog backend. Each returns the residuals
// lhs - rhs with a readable label; an identity holds iff every residual is zero.

#include <string>

#include "confalg/observables.hpp"

namespace confalg {

namespace detail {
inline std::string idx(int a) { return std::to_string(a); }
inline std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

template <class V>
void append(std::vector<BasicResidual<V>>& out, std::vector<BasicResidual<V>>&& more) {
  for (auto& r : more) out.push_back(std::move(r));
}
}  // namespace detail

/// (P,M^2), (J,M^2), (D,M^2) - 2M^2, (C,M^2) - 4 (eta D - J).P^r with M^2
/// both as a letter and as P_r P^r, and the odd forms with M.
template <class B>
Residuals<B> check_mass_shifts(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto m = cat.mass_power(1);
  const auto m2 = cat.mass_power(2);
  const auto pp = cat.mass_squared_from_momenta();
  out.push_back({"M^2 - P_r P^r", m2 - pp});
  for (int mu = 0; mu < 4; ++mu) {
    out.push_back({"(P" + idx(mu) + ",M^2)", cat.bracket(cat.momentum(mu), m2)});
    out.push_back({"(P" + idx(mu) + ",M)", cat.bracket(cat.momentum(mu), m)});
  }
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      out.push_back({"(J" + idx(mu, nu) + ",M^2)", cat.bracket(cat.angular(mu, nu), m2)});
      out.push_back({"(J" + idx(mu, nu) + ",M)", cat.bracket(cat.angular(mu, nu), m)});
    }
  }
  const auto d = cat.generator(Generator::D());
  out.push_back({"(D,M^2) - 2M^2", cat.bracket(d, m2) - Scalar(2) * m2});
  out.push_back({"(D,M) - M", cat.bracket(d, m) - m});
  for (int mu = 0; mu < 4; ++mu) {
    auto rhs = cat.constant(0);
    for (int r = 0; r < 4; ++r) rhs += cat.sym(cat.boost_dilatation(mu, r), cat.momentum_upper(r));
    rhs = Scalar(4) * rhs;
    const auto c = cat.generator(Generator::C(mu));
    out.push_back({"(C" + idx(mu) + ",P_r P^r) - 4(eta D - J).P", cat.bracket(c, pp) - rhs});
    out.push_back({"(C" + idx(mu) + ",M^2) - 4(eta D - J).P", cat.bracket(c, m2) - rhs});
    out.push_back({"(C" + idx(mu) + ",M) - 2(eta D - J).P/M", cat.bracket(c, m) - cat.mass_shift_rhs(mu)});
  }
  return out;
}

/// (C,M) M + M (C,M) against (C,P_r P^r); (C,M^-1) against -M^-1 (C,M) M^-1;
/// (C,M^-2) against -M^-2 (C,P_r P^r) M^-2.
template <class B>
Residuals<B> check_mpower_consistency(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto m = cat.mass_power(1);
  const auto m_inv = cat.mass_power(-1);
  const auto m_inv2 = cat.mass_power(-2);
  const auto pp = cat.mass_squared_from_momenta();
  for (int mu = 0; mu < 4; ++mu) {
    const auto c = cat.generator(Generator::C(mu));
    const auto cm = cat.bracket(c, m);
    const auto cpp = cat.bracket(c, pp);
    const std::string cn = "C" + idx(mu);
    out.push_back({"(" + cn + ",M) M + M (" + cn + ",M) - (" + cn + ",P_r P^r)",
                   cat.multiply(cm, m) + cat.multiply(m, cm) - cpp});
    out.push_back({"(" + cn + ",M^-1) + M^-1 (" + cn + ",M) M^-1",
                   cat.bracket(c, m_inv) + cat.multiply(cat.multiply(m_inv, cm), m_inv)});
    out.push_back({"(" + cn + ",M^-2) + M^-2 (" + cn + ",P_r P^r) M^-2",
                   cat.bracket(c, m_inv2) + cat.multiply(cat.multiply(m_inv2, cpp), m_inv2)});
  }
  return out;
}

/// (P_mu, X_nu) + eta_{mu nu}, 16 relations.
template <class B>
Residuals<B> check_canonical_commutators(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      out.push_back({"(P" + idx(mu) + ",X" + idx(nu) + ") + eta" + idx(mu, nu),
                     cat.bracket(cat.momentum(mu), cat.position(nu)) + cat.constant(metric_component(mu, nu))});
    }
  }
  return out;
}

/// (D, X_mu) + X_mu, 4 relations.
template <class B>
Residuals<B> check_position_dilatation(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  for (int mu = 0; mu < 4; ++mu) {
    out.push_back({"(D,X" + idx(mu) + ") + X" + idx(mu),
                   cat.bracket(cat.generator(Generator::D()), cat.position(mu)) + cat.position(mu)});
  }
  return out;
}

/// (J_{mu nu}, X_rho) - eta_{nu rho} X_mu + eta_{mu rho} X_nu, 24 relations.
template <class B>
Residuals<B> check_position_lorentz(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      for (int rho = 0; rho < 4; ++rho) {
        auto r = cat.bracket(cat.angular(mu, nu), cat.position(rho));
        r -= metric_component(nu, rho) * cat.position(mu);
        r += metric_component(mu, rho) * cat.position(nu);
        out.push_back({"(J" + idx(mu, nu) + ",X" + idx(rho) + ") - eta" + idx(nu, rho) + " X" + idx(mu) + " + eta" +
                           idx(mu, rho) + " X" + idx(nu),
                       std::move(r)});
      }
    }
  }
  return out;
}

/// (Delta, M) - a^mu M . X_mu.
template <class B>
Residuals<B> check_accel_mass_shift(Catalog<B>& cat) {
  const auto m = cat.mass_power(1);
  auto rhs = cat.constant(0);
  for (int mu = 0; mu < 4; ++mu) {
    const auto a = cat.accel_upper(mu);
    if (a.is_zero()) continue;
    rhs += a * cat.sym(m, cat.position(mu));
  }
  Residuals<B> out;
  out.push_back({"(Delta,M) - a^mu M.X_mu", cat.bracket(cat.accel_generator(), m) - rhs});
  return out;
}

/// (M.X_mu, M.X_nu) - J_{mu nu}, all 16 ordered pairs.
template <class B>
Residuals<B> check_position_commutators_first(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto m = cat.mass_power(1);
  std::vector<typename B::Value> mx;
  for (int mu = 0; mu < 4; ++mu) mx.push_back(cat.sym(m, cat.position(mu)));
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      out.push_back({"(M.X" + idx(mu) + ",M.X" + idx(nu) + ") - J" + idx(mu, nu),
                     cat.bracket(mx[mu], mx[nu]) - cat.angular(mu, nu)});
    }
  }
  return out;
}

/// ((C_mu,M),(C_nu,M))/4 - J_{mu nu}, mu < nu.
template <class B>
Residuals<B> check_position_commutators_mass_shift(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto m = cat.mass_power(1);
  std::vector<typename B::Value> cm;
  for (int mu = 0; mu < 4; ++mu) cm.push_back(cat.bracket(cat.generator(Generator::C(mu)), m));
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      out.push_back({"((C" + idx(mu) + ",M),(C" + idx(nu) + ",M))/4 - J" + idx(mu, nu),
                     Scalar::rational(1, 4) * cat.bracket(cm[mu], cm[nu]) - cat.angular(mu, nu)});
    }
  }
  return out;
}

/// M^2 . (X_mu, X_nu) - S_{mu nu}, all 16 ordered pairs.
template <class B>
Residuals<B> check_position_commutators_second(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto m2 = cat.mass_power(2);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const auto xx = cat.bracket(cat.position(mu), cat.position(nu));
      out.push_back({"M^2.(X" + idx(mu) + ",X" + idx(nu) + ") - S" + idx(mu, nu),
                     cat.sym(m2, xx) - cat.spin_tensor(mu, nu)});
    }
  }
  return out;
}

/// S^mu . P_mu.
template <class B>
Residuals<B> check_pauli_lubanski_orthogonality(Catalog<B>& cat) {
  auto sp = cat.constant(0);
  for (int mu = 0; mu < 4; ++mu) sp += cat.sym(cat.pauli_lubanski(mu), cat.momentum(mu));
  Residuals<B> out;
  out.push_back({"S^mu.P_mu", std::move(sp)});
  return out;
}

/// S_{mu nu} - eps_{mu nu r s} S^r . (P^s M^-1) for mu < nu.
template <class B>
Residuals<B> check_pauli_lubanski_reconstruction(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto inv_m = cat.mass_power(-1);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      auto rec = cat.constant(0);
      for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
          const Scalar e = epsilon_component({mu, nu, r, s});
          if (e.is_zero()) continue;
          rec += e * cat.sym(cat.pauli_lubanski(r), cat.multiply(cat.momentum_upper(s), inv_m));
        }
      }
      out.push_back({"S" + idx(mu, nu) + " - eps" + idx(mu, nu) + "rs S^r.P^s/M", cat.spin_tensor(mu, nu) - rec});
    }
  }
  return out;
}

/// D - P_r . X^r.
template <class B>
Residuals<B> check_dilatation_decomposition(Catalog<B>& cat) {
  Residuals<B> out;
  out.push_back({"D - P_r.X^r", cat.generator(Generator::D()) - cat.dilatation_from_position()});
  return out;
}

/// (Delta, P_nu) - a^mu (eta_{mu nu} D - P_mu.X_nu + P_nu.X_mu - S_{mu nu}).
template <class B>
Residuals<B> check_redshift(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto delta = cat.accel_generator();
  const auto d = cat.generator(Generator::D());
  for (int nu = 0; nu < 4; ++nu) {
    auto rhs = cat.constant(0);
    for (int mu = 0; mu < 4; ++mu) {
      const auto a = cat.accel_upper(mu);
      if (a.is_zero()) continue;
      auto inner = metric_component(mu, nu) * d;
      inner -= cat.sym(cat.momentum(mu), cat.position(nu));
      inner += cat.sym(cat.momentum(nu), cat.position(mu));
      inner -= cat.spin_tensor(mu, nu);
      rhs += a * inner;
    }
    out.push_back({"(Delta,P" + idx(nu) + ") - a^mu(eta D - P.X + P.X - S)", cat.bracket(delta, cat.momentum(nu)) - rhs});
  }
  return out;
}

/// ((Delta,X_nu),P_mu) through the Jacobi identity from (Delta,P_mu) and the
/// constant (X_nu,P_mu), compared against ((Delta,P_mu),X_nu).
template <class B>
Residuals<B> check_double_commutators_jacobi(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto delta = cat.accel_generator();
  for (int mu = 0; mu < 4; ++mu) {
    const auto dp = cat.bracket(delta, cat.momentum(mu));
    for (int nu = 0; nu < 4; ++nu) {
      const auto xp = cat.bracket(cat.position(nu), cat.momentum(mu));
      const auto lhs = cat.bracket(delta, xp) - cat.bracket(cat.position(nu), dp);
      const auto rhs = cat.bracket(dp, cat.position(nu));
      out.push_back({"((Delta,X" + idx(nu) + "),P" + idx(mu) + ") - ((Delta,P" + idx(mu) + "),X" + idx(nu) + ") [Jacobi]",
                     lhs - rhs});
    }
  }
  return out;
}

/// ((Delta,X_nu),P_mu) computed directly, compared against ((Delta,P_mu),X_nu).
template <class B>
Residuals<B> check_double_commutators_direct(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto delta = cat.accel_generator();
  std::vector<typename B::Value> dp;
  for (int mu = 0; mu < 4; ++mu) dp.push_back(cat.bracket(delta, cat.momentum(mu)));
  for (int nu = 0; nu < 4; ++nu) {
    const auto dx = cat.bracket(delta, cat.position(nu));
    for (int mu = 0; mu < 4; ++mu) {
      out.push_back({"((Delta,X" + idx(nu) + "),P" + idx(mu) + ") - ((Delta,P" + idx(mu) + "),X" + idx(nu) + ")",
                     cat.bracket(dx, cat.momentum(mu)) - cat.bracket(dp[mu], cat.position(nu))});
    }
  }
  return out;
}

/// ((Delta,P_mu),X_nu) + eta_{mu nu} a^r X_r + a_mu X_nu - a_nu X_mu.
template <class B>
Residuals<B> check_covariance_rules(Catalog<B>& cat) {
  using detail::idx;
  Residuals<B> out;
  const auto delta = cat.accel_generator();
  auto ax = cat.constant(0);
  for (int r = 0; r < 4; ++r) {
    const auto a = cat.accel_upper(r);
    if (!a.is_zero()) ax += a * cat.position(r);
  }
  for (int mu = 0; mu < 4; ++mu) {
    const auto dp = cat.bracket(delta, cat.momentum(mu));
    for (int nu = 0; nu < 4; ++nu) {
      auto r = cat.bracket(dp, cat.position(nu));
      if (mu == nu) r += metric_component(mu, nu) * ax;
      if (const auto a = cat.accel_lower(mu); !a.is_zero()) r += a * cat.position(nu);
      if (const auto a = cat.accel_lower(nu); !a.is_zero()) r -= a * cat.position(mu);
      out.push_back({"((Delta,P" + idx(mu) + "),X" + idx(nu) + ") + eta a.X + a_mu X_nu - a_nu X_mu", std::move(r)});
    }
  }
  return out;
}

}  // namespace confalg
