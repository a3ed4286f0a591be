#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confalg/scalar.hpp"

namespace confalg {

/// Exponent vector over at most kMaxVars commuting variables.
struct Monomial {
  static constexpr int kMaxVars = 24;
  std::array<std::uint8_t, kMaxVars> exp{};

  static Monomial var(int v, int power = 1);
  int degree() const;
  int operator[](int v) const { return exp[static_cast<std::size_t>(v)]; }
  bool is_one() const { return degree() == 0; }
  Monomial operator*(const Monomial& o) const;
  /// Whether `o` divides this monomial.
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial over Q(i), terms sorted by monomial, zero terms dropped.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Polynomial() = default;
  Polynomial(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial var(int v);
  static Polynomial monomial(const Monomial& m, const Scalar& c = 1);
  /// Builds from arbitrary terms, merging duplicates.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Scalar constant_term() const;
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  int degree_in(int v) const;
  bool involves(int v) const { return degree_in(v) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  Polynomial times_monomial(const Monomial& m) const;

  /// Replaces variable v by `value` everywhere.
  Polynomial substitute(int v, const Polynomial& value) const;
  /// Evaluates every variable; `values[v]` must exist for each variable present.
  Scalar evaluate(const std::vector<Scalar>& values) const;
  /// Partial derivative in variable v.
  Polynomial derivative(int v) const;
  /// Splits into coefficients of the monomials in variables where `select(v)` is true.
  std::map<Monomial, Polynomial> split(const std::function<bool(int)>& select) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "3 x0^2 - i x1"; `names` maps variable indices to display names.
  std::string to_string(const std::function<std::string(int)>& names = {}) const;

 private:
  std::vector<Term> terms_;
};

/// Exact solution of a polynomial system by repeated linear elimination:
/// an equation c v + r with r free of v fixes v = -r/c; a univariate
/// quadratic with rational roots branches on each root. Variables left
/// without a determining equation are reported in `free`.
struct SolveResult {
  std::map<int, Scalar> values;
  std::vector<int> free;
};

/// Returns nullopt when the system is inconsistent or a branch needs an
/// irrational root.
std::optional<SolveResult> solve_system(std::vector<Polynomial> equations, int num_vars);

}  // namespace confalg
