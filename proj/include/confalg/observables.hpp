#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confalg/nc.hpp"

namespace confalg {

/// Formal acceleration component a^mu (upper index) as a coefficient.
CoefficientExpr accel_upper(int mu);
/// a_mu = eta_{mu mu} a^mu.
CoefficientExpr accel_lower(int mu);

/// Backend over the word algebra: values are normal-form polynomials and the
/// acceleration may stay formal.
struct WordBackend {
  using Value = NCPolynomial;
  using Coef = CoefficientExpr;

  WordAlgebra* algebra = &WordAlgebra::standard();

  Value constant(const Scalar& s) const { return NCPolynomial(s); }
  Value generator(Generator g) const { return NCPolynomial(g); }
  Value mass_power(int k) const { return NCPolynomial::mass_power(k); }
  Value multiply(const Value& p, const Value& q) const { return algebra->multiply(p, q); }
  Coef formal_accel(int mu) const { return accel_upper(mu); }
};

/// Builders for the derived observables over a backend. Chained dot products
/// are grouped exactly as written in the defining relations, with "." the
/// symmetrized product.
///
/// The acceleration a^mu is formal unless a concrete direction is given. Memo
/// tables are shared between catalogs made by with_accel() and are not
/// thread-safe.
template <class Backend>
class Catalog {
 public:
  using Value = typename Backend::Value;
  using Coef = typename Backend::Coef;

  explicit Catalog(Backend backend = Backend{}, std::optional<std::array<Scalar, 4>> accel = std::nullopt)
      : backend_(std::move(backend)), accel_(std::move(accel)), memo_(std::make_shared<Memo>()) {}

  const Backend& backend() const { return backend_; }
  const std::optional<std::array<Scalar, 4>>& accel_direction() const { return accel_; }

  /// Same backend and memo tables with a^mu fixed to `a_upper`.
  Catalog with_accel(const std::array<Scalar, 4>& a_upper) const {
    Catalog c(*this);
    c.accel_ = a_upper;
    return c;
  }

  Value constant(const Scalar& s) const { return backend_.constant(s); }
  Value generator(Generator g) const { return backend_.generator(g); }
  /// J_{mu nu} with the antisymmetric sign convention.
  Value angular(int mu, int nu) const {
    if (mu == nu) return constant(0);
    return mu < nu ? generator(Generator::J(mu, nu)) : Scalar(-1) * generator(Generator::J(nu, mu));
  }
  Value momentum(int mu) const { return generator(Generator::P(mu)); }
  /// P^mu = eta^{mu mu} P_mu.
  Value momentum_upper(int mu) const { return metric_component(mu, mu) * momentum(mu); }
  /// M^k.
  Value mass_power(int k) const { return backend_.mass_power(k); }
  /// M^2 as the contraction P_r P^r.
  Value mass_squared_from_momenta() const {
    Value out = constant(0);
    for (int r = 0; r < 4; ++r) out += multiply(momentum(r), momentum_upper(r));
    return out;
  }

  /// eta_{mu rho} D - J_{mu rho}.
  Value boost_dilatation(int mu, int rho) const {
    Value out = Scalar(-1) * angular(mu, rho);
    if (mu == rho) out += metric_component(mu, rho) * generator(Generator::D());
    return out;
  }

  /// X_mu = (eta_{mu r} D - J_{mu r}) . (P^r M^-2).
  const Value& position(int mu) {
    auto& memo = memo_->position;
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    Value x = constant(0);
    const Value inv_m2 = mass_power(-2);
    for (int r = 0; r < 4; ++r) x += sym(boost_dilatation(mu, r), multiply(momentum_upper(r), inv_m2));
    return memo.emplace(mu, std::move(x)).first->second;
  }
  /// X^mu = eta^{mu mu} X_mu.
  Value position_upper(int mu) { return metric_component(mu, mu) * position(mu); }

  /// S_{mu nu} = J_{mu nu} - (P_mu . X_nu - P_nu . X_mu).
  const Value& spin_tensor(int mu, int nu) {
    auto& memo = memo_->spin;
    const auto key = std::pair{mu, nu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Value s = angular(mu, nu) - (sym(momentum(mu), position(nu)) - sym(momentum(nu), position(mu)));
    return memo.emplace(key, std::move(s)).first->second;
  }

  /// S^mu = -1/2 eps^{mu n r s} J_{n r} . (P_s M^-1).
  const Value& pauli_lubanski(int mu) {
    auto& memo = memo_->pauli_lubanski;
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    Value s = constant(0);
    const Value inv_m = mass_power(-1);
    for (int n = 0; n < 4; ++n) {
      for (int r = 0; r < 4; ++r) {
        for (int t = 0; t < 4; ++t) {
          const Scalar e = epsilon_upper(mu, n, r, t);
          if (e.is_zero()) continue;
          s += (Scalar::rational(-1, 2) * e) * sym(angular(n, r), multiply(momentum(t), inv_m));
        }
      }
    }
    return memo.emplace(mu, std::move(s)).first->second;
  }

  /// P_r . X^r.
  Value dilatation_from_position() {
    Value out = constant(0);
    for (int r = 0; r < 4; ++r) out += sym(momentum(r), position_upper(r));
    return out;
  }

  /// a^mu, formal or from the fixed direction.
  Coef accel_upper(int mu) const {
    if (accel_) return Coef((*accel_)[static_cast<std::size_t>(mu)]);
    return backend_.formal_accel(mu);
  }
  /// a_mu.
  Coef accel_lower(int mu) const { return metric_component(mu, mu) * accel_upper(mu); }

  /// Delta = a^mu C_mu / 2.
  Value accel_generator() const {
    Value out = constant(0);
    for (int mu = 0; mu < 4; ++mu) {
      const Coef a = accel_upper(mu);
      if (a.is_zero()) continue;
      out += (Scalar::rational(1, 2) * a) * generator(Generator::C(mu));
    }
    return out;
  }

  /// 2 (eta_{mu r} D - J_{mu r}) . (P^r M^-1).
  Value mass_shift_rhs(int mu) const {
    Value out = constant(0);
    const Value inv_m = mass_power(-1);
    for (int r = 0; r < 4; ++r) out += sym(boost_dilatation(mu, r), multiply(momentum_upper(r), inv_m));
    return Scalar(2) * out;
  }

  Value multiply(const Value& p, const Value& q) const { return backend_.multiply(p, q); }
  /// (pq + qp) / 2.
  Value sym(const Value& p, const Value& q) const {
    return Scalar::rational(1, 2) * (multiply(p, q) + multiply(q, p));
  }
  /// -i (pq - qp).
  Value bracket(const Value& p, const Value& q) const { return -Scalar::i() * (multiply(p, q) - multiply(q, p)); }

  /// Upper-index Levi-Civita symbol, eps^{0123} = -1.
  static Scalar epsilon_upper(int a, int b, int c, int d) {
    return epsilon_component({a, b, c, d}) * metric_component(a, a) * metric_component(b, b) *
           metric_component(c, c) * metric_component(d, d);
  }

 private:
  struct Memo {
    std::map<int, Value> position;
    std::map<std::pair<int, int>, Value> spin;
    std::map<int, Value> pauli_lubanski;
  };

  Backend backend_;
  std::optional<std::array<Scalar, 4>> accel_;
  std::shared_ptr<Memo> memo_;
};

using ObservableCatalog = Catalog<WordBackend>;

/// One named residual; the identity holds iff `value` is zero.
template <class V>
struct BasicResidual {
  std::string label;
  V value;
};

template <class B>
using Residuals = std::vector<BasicResidual<typename B::Value>>;

using Residual = BasicResidual<NCPolynomial>;
using ResidualSet = std::vector<Residual>;

template <class V>
bool all_zero(const std::vector<BasicResidual<V>>& rs) {
  for (const auto& r : rs) {
    if (!r.value.is_zero()) return false;
  }
  return true;
}

/// Unit vector e_mu as an acceleration direction.
std::array<Scalar, 4> unit_direction(int mu);

}  // namespace confalg

#include "confalg/identities.hpp"
