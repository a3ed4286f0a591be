#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "confalg/ring.hpp"

namespace confalg {

/// Multi-index of partial derivatives over the k_{a,j} variables.
using DerivativeIndex = std::array<std::uint8_t, 3 * RingContext::kMaxParticles>;

/// Finite sum of ring coefficients times derivative monomials, coefficients
/// written to the left: sum_alpha c_alpha d^alpha.
class DiffOperator {
 public:
  using TermMap = std::map<DerivativeIndex, RingElement>;

  DiffOperator() = default;
  /// Multiplication by a ring element.
  explicit DiffOperator(const RingElement& c);
  DiffOperator(const RingContext& ctx, const Scalar& c) : DiffOperator(RingElement(ctx, c)) {}

  /// d/dk_{a,j}.
  static DiffOperator partial(const RingContext& ctx, int a, int j);

  const RingContext* context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  /// Coefficient of d^alpha (zero if absent).
  RingElement coefficient(const DerivativeIndex& alpha) const;

  DiffOperator operator-() const;
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const Scalar& s, const DiffOperator& p);
  /// Left multiplication by a ring element.
  friend DiffOperator operator*(const RingElement& c, const DiffOperator& p);
  /// Composition (p after q applied first is p * q).
  friend DiffOperator operator*(const DiffOperator& p, const DiffOperator& q);

  /// (p q - q p) / i.
  friend DiffOperator normalized_commutator(const DiffOperator& p, const DiffOperator& q);

  RingElement apply(const RingElement& f) const;

  /// Parameter equations from every coefficient.
  std::vector<Polynomial> parameter_equations() const;
  DiffOperator substitute_param(int p, const Scalar& value) const;

  /// "(k1_1) d[k1_1] + ..." stable rendering.
  std::string to_string() const;

 private:
  void add_term(const DerivativeIndex& alpha, const RingElement& c);

  const RingContext* ctx_ = nullptr;
  TermMap terms_;
};

}  // namespace confalg
