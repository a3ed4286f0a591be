#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confalg/polynomial.hpp"

namespace confalg {

/// Variable layout and reduction rules for n massless particles.
///
/// Variables: k_{a,j} (lower spatial momentum components), w_a = |k_a|,
/// sigma = sqrt(s) with s = (sum_a p_a)^2, then free parameters that are
/// never differentiated. Numerators are kept reduced modulo w_a^2 = |k_a|^2
/// and sigma^2 = s; since the leading terms are coprime this is a Groebner
/// basis and reduced numerators are canonical.
class RingContext {
 public:
  static constexpr int kMaxParticles = 4;

  explicit RingContext(int particles, int params = 0);

  int particles() const { return n_; }
  int params() const { return params_; }
  /// a in [0, n), j in {1, 2, 3}.
  int k_var(int a, int j) const { return 3 * a + (j - 1); }
  int omega_var(int a) const { return 3 * n_ + a; }
  int sigma_var() const { return 4 * n_; }
  int param_var(int p) const { return 4 * n_ + 1 + p; }
  int num_vars() const { return 4 * n_ + 1 + params_; }
  /// Number of differentiable variables (the k_{a,j}).
  int derivative_vars() const { return 3 * n_; }
  bool is_param(int v) const { return v > sigma_var(); }

  /// s in reduced form: 2 sum_{a<b} (w_a w_b - k_a.k_b).
  const Polynomial& s() const { return s_; }
  const Polynomial& k_squared(int a) const { return k_squared_[static_cast<std::size_t>(a)]; }

  Polynomial reduce(const Polynomial& p) const;
  std::string var_name(int v) const;

 private:
  int n_;
  int params_;
  Polynomial s_;
  std::vector<Polynomial> k_squared_;
};

/// A point in momentum space: rational k_a with rational w_a = |k_a| and,
/// when s is a rational square, sigma = sqrt(s).
struct MomentumPoint {
  std::vector<std::array<Scalar, 3>> k;
  std::vector<Scalar> omega;
  std::optional<Scalar> sigma;
};

/// Thrown when an evaluation point makes a denominator vanish or needs an
/// irrational sigma.
class EvaluationError : public std::domain_error {
 public:
  explicit EvaluationError(const std::string& what) : std::domain_error(what) {}
};

/// Fraction num / (prod_a w_a^{e_a} s^d) over a RingContext, numerator
/// reduced. Odd sigma powers in denominators are moved up via 1/sigma = sigma/s.
class RingElement {
 public:
  using OmegaExponents = std::array<std::uint8_t, RingContext::kMaxParticles>;

  RingElement() = default;
  RingElement(const RingContext& ctx, const Polynomial& numerator);
  RingElement(const RingContext& ctx, Polynomial numerator, OmegaExponents omega_den, int s_den);
  RingElement(const RingContext& ctx, const Scalar& c) : RingElement(ctx, Polynomial(c)) {}

  static RingElement k(const RingContext& ctx, int a, int j);
  static RingElement omega(const RingContext& ctx, int a);
  static RingElement param(const RingContext& ctx, int p);
  /// w_a^e for any integer e.
  static RingElement omega_power(const RingContext& ctx, int a, int e);
  /// sigma^e for any integer e.
  static RingElement sigma_power(const RingContext& ctx, int e);

  const RingContext* context() const { return ctx_; }
  const Polynomial& numerator() const { return num_; }
  const OmegaExponents& omega_denominator() const { return omega_den_; }
  int s_denominator() const { return s_den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Scalar& s);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const Scalar& s) { return a *= s; }
  friend RingElement operator*(const Scalar& s, RingElement a) { return a *= s; }

  /// d/dk_{a,j}.
  RingElement derivative(int a, int j) const;

  /// Exact value at a point; parameters must be absent.
  Scalar evaluate(const MomentumPoint& point) const;

  /// Equations on the parameters: one per monomial in the ring variables.
  std::vector<Polynomial> parameter_equations() const;
  /// Substitutes parameter p by a value.
  RingElement substitute_param(int p, const Scalar& value) const;

  std::string to_string() const;

 private:
  void normalize();
  static void align(RingElement& a, RingElement& b);

  const RingContext* ctx_ = nullptr;
  Polynomial num_;
  OmegaExponents omega_den_{};
  int s_den_ = 0;
};

}  // namespace confalg
