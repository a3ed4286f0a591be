#include "confalg/diffop.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace confalg {

namespace {

const RingContext* common_context(const RingContext* a, const RingContext* b) {
  if (a && b && a != b) throw std::invalid_argument("operators from different ring contexts");
  return a ? a : b;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Memoized partial derivatives of one ring element.
class DerivativeTable {
 public:
  explicit DerivativeTable(const RingElement& base, int vars) : vars_(vars) { table_.emplace(DerivativeIndex{}, base); }

  const RingElement& get(const DerivativeIndex& gamma) {
    if (auto it = table_.find(gamma); it != table_.end()) return it->second;
    int v = 0;
    while (gamma[static_cast<std::size_t>(v)] == 0) ++v;
    DerivativeIndex lower = gamma;
    --lower[static_cast<std::size_t>(v)];
    RingElement d = get(lower).derivative(v / 3, v % 3 + 1);
    return table_.emplace(gamma, std::move(d)).first->second;
  }

  int vars() const { return vars_; }

 private:
  int vars_;
  std::map<DerivativeIndex, RingElement> table_;
};

/// Calls fn(gamma, multiplicity) for every gamma <= alpha.
void for_each_sub_index(const DerivativeIndex& alpha, int vars,
                        const std::function<void(const DerivativeIndex&, long)>& fn) {
  DerivativeIndex gamma{};
  for (;;) {
    long mult = 1;
    for (int v = 0; v < vars; ++v) {
      const auto i = static_cast<std::size_t>(v);
      mult *= binomial(alpha[i], gamma[i]);
    }
    fn(gamma, mult);
    int v = 0;
    for (; v < vars; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (gamma[i] < alpha[i]) {
        ++gamma[i];
        break;
      }
      gamma[i] = 0;
    }
    if (v == vars) return;
  }
}

}  // namespace

DiffOperator::DiffOperator(const RingElement& c) : ctx_(c.context()) {
  if (!c.is_zero()) terms_.emplace(DerivativeIndex{}, c);
}

DiffOperator DiffOperator::partial(const RingContext& ctx, int a, int j) {
  DiffOperator op;
  op.ctx_ = &ctx;
  DerivativeIndex alpha{};
  alpha[static_cast<std::size_t>(ctx.k_var(a, j))] = 1;
  op.terms_.emplace(alpha, RingElement(ctx, Scalar(1)));
  return op;
}

int DiffOperator::order() const {
  int order = 0;
  for (const auto& [alpha, c] : terms_) {
    int d = 0;
    for (auto e : alpha) d += e;
    order = std::max(order, d);
  }
  return order;
}

RingElement DiffOperator::coefficient(const DerivativeIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RingElement() : it->second;
}

void DiffOperator::add_term(const DerivativeIndex& alpha, const RingElement& c) {
  if (c.is_zero()) return;
  ctx_ = common_context(ctx_, c.context());
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r = *this;
  for (auto& [alpha, c] : r.terms_) c = -c;
  return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  ctx_ = common_context(ctx_, o.ctx_);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  ctx_ = common_context(ctx_, o.ctx_);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOperator operator*(const Scalar& s, const DiffOperator& p) {
  DiffOperator r;
  r.ctx_ = p.ctx_;
  if (s.is_zero()) return r;
  for (const auto& [alpha, c] : p.terms_) r.terms_.emplace(alpha, s * c);
  return r;
}

DiffOperator operator*(const RingElement& c, const DiffOperator& p) {
  DiffOperator r;
  r.ctx_ = common_context(p.ctx_, c.context());
  if (c.is_zero()) return r;
  for (const auto& [alpha, x] : p.terms_) r.add_term(alpha, c * x);
  return r;
}

DiffOperator operator*(const DiffOperator& p, const DiffOperator& q) {
  DiffOperator r;
  r.ctx_ = common_context(p.ctx_, q.ctx_);
  if (p.is_zero() || q.is_zero()) return r;
  const int vars = r.ctx_->derivative_vars();
  for (const auto& [beta, b] : q.terms_) {
    DerivativeTable table(b, vars);
    for (const auto& [alpha, a] : p.terms_) {
      std::map<DerivativeIndex, RingElement> inner;
      for_each_sub_index(alpha, vars, [&](const DerivativeIndex& gamma, long mult) {
        const RingElement& db = table.get(gamma);
        if (db.is_zero()) return;
        DerivativeIndex out{};
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] = static_cast<std::uint8_t>(alpha[i] - gamma[i] + beta[i]);
        }
        inner[out] += Scalar(mult) * db;
      });
      for (const auto& [idx, c] : inner) r.add_term(idx, a * c);
    }
  }
  return r;
}

DiffOperator normalized_commutator(const DiffOperator& p, const DiffOperator& q) {
  return -Scalar::i() * (p * q - q * p);
}

RingElement DiffOperator::apply(const RingElement& f) const {
  if (is_zero() || f.is_zero()) return {};
  const RingContext* ctx = common_context(ctx_, f.context());
  DerivativeTable table(f, ctx->derivative_vars());
  RingElement out;
  for (const auto& [alpha, c] : terms_) out += c * table.get(alpha);
  return out;
}

std::vector<Polynomial> DiffOperator::parameter_equations() const {
  std::vector<Polynomial> out;
  for (const auto& [alpha, c] : terms_) {
    for (auto& e : c.parameter_equations()) out.push_back(std::move(e));
  }
  return out;
}

DiffOperator DiffOperator::substitute_param(int p, const Scalar& value) const {
  DiffOperator r;
  r.ctx_ = ctx_;
  for (const auto& [alpha, c] : terms_) r.add_term(alpha, c.substitute_param(p, value));
  return r;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      for (int e = 0; e < alpha[v]; ++e) {
        out += " d/d" + (ctx_ ? ctx_->var_name(static_cast<int>(v)) : "x" + std::to_string(v));
      }
    }
  }
  return out;
}

}  // namespace confalg
