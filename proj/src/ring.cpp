#include "confalg/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace confalg {

RingContext::RingContext(int particles, int params) : n_(particles), params_(params) {
  if (particles < 1 || particles > kMaxParticles) throw std::invalid_argument("particle count out of range");
  if (params < 0 || num_vars() > Monomial::kMaxVars) throw std::invalid_argument("too many ring variables");
  for (int a = 0; a < n_; ++a) {
    Polynomial k2;
    for (int j = 1; j <= 3; ++j) k2 += Polynomial::monomial(Monomial::var(k_var(a, j), 2));
    k_squared_.push_back(std::move(k2));
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      s_ += Polynomial::monomial(Monomial::var(omega_var(a)) * Monomial::var(omega_var(b)), 2);
      for (int j = 1; j <= 3; ++j) {
        s_ -= Polynomial::monomial(Monomial::var(k_var(a, j)) * Monomial::var(k_var(b, j)), 2);
      }
    }
  }
}

Polynomial RingContext::reduce(const Polynomial& p) const {
  const int sv = sigma_var();
  auto needs_rule = [&](const Monomial& m) {
    if (m[sv] >= 2) return true;
    for (int a = 0; a < n_; ++a) {
      if (m[omega_var(a)] >= 2) return true;
    }
    return false;
  };
  if (std::none_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return needs_rule(t.first); })) {
    return p;
  }
  std::vector<Polynomial::Term> work(p.terms().rbegin(), p.terms().rend());
  std::unordered_map<Monomial, Scalar, MonomialHash> done;
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    const Polynomial* rule = nullptr;
    Monomial lead;
    for (int a = 0; a < n_ && rule == nullptr; ++a) {
      if (m[omega_var(a)] >= 2) {
        rule = &k_squared_[static_cast<std::size_t>(a)];
        lead = Monomial::var(omega_var(a), 2);
      }
    }
    if (rule == nullptr && m[sv] >= 2) {
      rule = &s_;
      lead = Monomial::var(sv, 2);
    }
    if (rule == nullptr) {
      done[m] += c;
      continue;
    }
    const Monomial rest = m / lead;
    for (const auto& [rm, rc] : rule->terms()) work.emplace_back(rm * rest, rc * c);
  }
  std::vector<Polynomial::Term> terms(done.begin(), done.end());
  return Polynomial::from_terms(std::move(terms));
}

std::string RingContext::var_name(int v) const {
  if (v < 3 * n_) return "k" + std::to_string(v / 3 + 1) + "_" + std::to_string(v % 3 + 1);
  if (v < 4 * n_) return "w" + std::to_string(v - 3 * n_ + 1);
  if (v == sigma_var()) return "sigma";
  return "c" + std::to_string(v - sigma_var() - 1);
}

// ---------------------------------------------------------------------------

RingElement::RingElement(const RingContext& ctx, const Polynomial& numerator)
    : ctx_(&ctx), num_(ctx.reduce(numerator)) {}

RingElement::RingElement(const RingContext& ctx, Polynomial numerator, OmegaExponents omega_den, int s_den)
    : ctx_(&ctx), num_(ctx.reduce(numerator)), omega_den_(omega_den), s_den_(s_den) {
  normalize();
}

RingElement RingElement::k(const RingContext& ctx, int a, int j) {
  return RingElement(ctx, Polynomial::var(ctx.k_var(a, j)));
}

RingElement RingElement::omega(const RingContext& ctx, int a) {
  return RingElement(ctx, Polynomial::var(ctx.omega_var(a)));
}

RingElement RingElement::param(const RingContext& ctx, int p) {
  if (p < 0 || p >= ctx.params()) throw std::out_of_range("ring parameter index");
  return RingElement(ctx, Polynomial::var(ctx.param_var(p)));
}

RingElement RingElement::omega_power(const RingContext& ctx, int a, int e) {
  if (e >= 0) return RingElement(ctx, Polynomial::monomial(Monomial::var(ctx.omega_var(a), e)));
  OmegaExponents den{};
  den[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(-e);
  return RingElement(ctx, Polynomial(1), den, 0);
}

RingElement RingElement::sigma_power(const RingContext& ctx, int e) {
  if (e >= 0) return RingElement(ctx, Polynomial::monomial(Monomial::var(ctx.sigma_var(), e)));
  const int m = -e;
  const Polynomial num = (m % 2 == 1) ? Polynomial::var(ctx.sigma_var()) : Polynomial(1);
  return RingElement(ctx, num, OmegaExponents{}, (m + 1) / 2);
}

bool RingElement::is_constant() const {
  return num_.is_constant() && s_den_ == 0 && std::all_of(omega_den_.begin(), omega_den_.end(), [](auto e) {
           return e == 0;
         });
}

void RingElement::normalize() {
  if (num_.is_zero()) {
    omega_den_ = {};
    s_den_ = 0;
    return;
  }
  if (ctx_ == nullptr) return;
  for (int a = 0; a < ctx_->particles(); ++a) {
    auto& e = omega_den_[static_cast<std::size_t>(a)];
    if (e == 0) continue;
    const int v = ctx_->omega_var(a);
    const bool divisible =
        std::all_of(num_.terms().begin(), num_.terms().end(), [&](const auto& t) { return t.first[v] >= 1; });
    if (!divisible) continue;
    std::vector<Polynomial::Term> terms;
    terms.reserve(num_.size());
    for (const auto& [m, c] : num_.terms()) terms.emplace_back(m / Monomial::var(v), c);
    num_ = Polynomial::from_terms(std::move(terms));
    --e;
  }
}

void RingElement::align(RingElement& a, RingElement& b) {
  const RingContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (ctx == nullptr) return;
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw std::invalid_argument("ring elements from different contexts");
  a.ctx_ = b.ctx_ = ctx;
  for (auto* x : {&a, &b}) {
    Monomial scale;
    bool any = false;
    for (int p = 0; p < ctx->particles(); ++p) {
      const auto i = static_cast<std::size_t>(p);
      const int target = std::max(a.omega_den_[i], b.omega_den_[i]);
      if (target > x->omega_den_[i]) {
        scale = scale * Monomial::var(ctx->omega_var(p), target - x->omega_den_[i]);
        x->omega_den_[i] = static_cast<std::uint8_t>(target);
        any = true;
      }
    }
    const int s_target = std::max(a.s_den_, b.s_den_);
    if (!any && x->s_den_ == s_target) continue;
    Polynomial num = any ? x->num_.times_monomial(scale) : x->num_;
    for (; x->s_den_ < s_target; ++x->s_den_) num = num * ctx->s();
    x->num_ = ctx->reduce(num);
  }
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  r.num_ = -r.num_;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  RingElement b = o;
  align(*this, b);
  num_ += b.num_;
  normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement& RingElement::operator*=(const Scalar& s) {
  num_ *= s;
  if (num_.is_zero()) normalize();
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const RingContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw std::invalid_argument("ring elements from different contexts");
  RingElement r;
  r.ctx_ = ctx;
  r.num_ = ctx ? ctx->reduce(a.num_ * b.num_) : a.num_ * b.num_;
  for (std::size_t i = 0; i < r.omega_den_.size(); ++i) {
    r.omega_den_[i] = static_cast<std::uint8_t>(a.omega_den_[i] + b.omega_den_[i]);
  }
  r.s_den_ = a.s_den_ + b.s_den_;
  r.normalize();
  return r;
}

namespace {
/// d s / d k_{a,j}.
RingElement s_derivative(const RingContext& ctx, int a, int j) {
  const Polynomial& s = ctx.s();
  const int wv = ctx.omega_var(a);
  std::vector<Polynomial::Term> over_omega;
  for (const auto& [m, c] : s.terms()) {
    if (m[wv] == 0) continue;
    over_omega.emplace_back(m / Monomial::var(wv) * Monomial::var(ctx.k_var(a, j)), c);
  }
  RingElement::OmegaExponents den{};
  den[static_cast<std::size_t>(a)] = 1;
  return RingElement(ctx, s.derivative(ctx.k_var(a, j))) +
         RingElement(ctx, Polynomial::from_terms(std::move(over_omega)), den, 0);
}
}  // namespace

RingElement RingElement::derivative(int a, int j) const {
  if (is_zero() || ctx_ == nullptr) return {};
  const RingContext& ctx = *ctx_;
  const int kv = ctx.k_var(a, j);
  const int wv = ctx.omega_var(a);
  const int sv = ctx.sigma_var();

  // Numerator: plain k part, w_a part (dw = k/w) and sigma part (dsigma = ds sigma / 2s).
  std::vector<Polynomial::Term> omega_part;
  std::vector<Polynomial::Term> sigma_part;
  for (const auto& [m, c] : num_.terms()) {
    if (m[wv] > 0) omega_part.emplace_back(m / Monomial::var(wv) * Monomial::var(kv), c);
    if (m[sv] > 0) sigma_part.emplace_back(m, c * Scalar::rational(1, 2));
  }
  OmegaExponents w1{};
  w1[static_cast<std::size_t>(a)] = 1;
  OmegaExponents w2{};
  w2[static_cast<std::size_t>(a)] = 2;

  RingElement d(ctx, num_.derivative(kv));
  if (!omega_part.empty()) d += RingElement(ctx, Polynomial::from_terms(std::move(omega_part)), w1, 0);
  std::optional<RingElement> ds;
  if (!sigma_part.empty() || s_den_ > 0) ds = s_derivative(ctx, a, j);
  if (!sigma_part.empty()) d += RingElement(ctx, Polynomial::from_terms(std::move(sigma_part)), {}, 1) * *ds;

  // Denominator: d(w^-e) = -e k w^-e-2, d(s^-d) = -d ds s^-d-1.
  RingElement log_derivative;
  if (const int e = omega_den_[static_cast<std::size_t>(a)]; e > 0) {
    log_derivative += RingElement(ctx, Polynomial::monomial(Monomial::var(kv), e), w2, 0);
  }
  if (s_den_ > 0) log_derivative += RingElement(ctx, Polynomial(s_den_), {}, 1) * *ds;
  if (!log_derivative.is_zero()) d -= RingElement(ctx, num_) * log_derivative;

  if (d.is_zero()) return {};
  for (std::size_t i = 0; i < omega_den_.size(); ++i) {
    d.omega_den_[i] = static_cast<std::uint8_t>(d.omega_den_[i] + omega_den_[i]);
  }
  d.s_den_ += s_den_;
  d.normalize();
  return d;
}

Scalar RingElement::evaluate(const MomentumPoint& point) const {
  if (is_zero()) return 0;
  if (ctx_ == nullptr) return num_.constant_term();
  const RingContext& ctx = *ctx_;
  if (static_cast<int>(point.k.size()) != ctx.particles() || static_cast<int>(point.omega.size()) != ctx.particles()) {
    throw std::invalid_argument("evaluation point has the wrong particle count");
  }
  std::vector<Scalar> values(Monomial::kMaxVars);
  for (int a = 0; a < ctx.particles(); ++a) {
    for (int j = 1; j <= 3; ++j) values[static_cast<std::size_t>(ctx.k_var(a, j))] = point.k[a][j - 1];
    values[static_cast<std::size_t>(ctx.omega_var(a))] = point.omega[a];
  }
  if (num_.involves(ctx.sigma_var())) {
    if (!point.sigma) throw EvaluationError("sigma is irrational at this point");
    values[static_cast<std::size_t>(ctx.sigma_var())] = *point.sigma;
  }
  for (int p = 0; p < ctx.params(); ++p) {
    if (num_.involves(ctx.param_var(p))) throw std::invalid_argument("cannot evaluate with free parameters");
  }
  Scalar den = 1;
  for (int a = 0; a < ctx.particles(); ++a) {
    for (int e = 0; e < omega_den_[static_cast<std::size_t>(a)]; ++e) den *= point.omega[a];
  }
  const Scalar s = ctx.s().evaluate(values);
  for (int e = 0; e < s_den_; ++e) den *= s;
  if (den.is_zero()) throw EvaluationError("denominator vanishes at this point");
  return num_.evaluate(values) / den;
}

std::vector<Polynomial> RingElement::parameter_equations() const {
  std::vector<Polynomial> out;
  if (ctx_ == nullptr) {
    if (!num_.is_zero()) out.push_back(num_);
    return out;
  }
  const RingContext& ctx = *ctx_;
  for (auto& [m, p] : num_.split([&](int v) { return !ctx.is_param(v); })) out.push_back(std::move(p));
  return out;
}

RingElement RingElement::substitute_param(int p, const Scalar& value) const {
  if (ctx_ == nullptr) return *this;
  return RingElement(*ctx_, num_.substitute(ctx_->param_var(p), value), omega_den_, s_den_);
}

std::string RingElement::to_string() const {
  auto names = [this](int v) { return ctx_ ? ctx_->var_name(v) : "x" + std::to_string(v); };
  std::string den;
  for (std::size_t a = 0; a < omega_den_.size(); ++a) {
    if (omega_den_[a] == 0) continue;
    if (!den.empty()) den += ' ';
    den += "w" + std::to_string(a + 1);
    if (omega_den_[a] > 1) den += "^" + std::to_string(omega_den_[a]);
  }
  if (s_den_ > 0) {
    if (!den.empty()) den += ' ';
    den += s_den_ > 1 ? "s^" + std::to_string(s_den_) : "s";
  }
  const std::string num = num_.to_string(names);
  if (den.empty()) return num;
  return "(" + num + ")/(" + den + ")";
}

}  // namespace confalg
