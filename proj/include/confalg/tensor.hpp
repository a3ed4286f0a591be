#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "confalg/scalar.hpp"

namespace confalg {

enum class Variance : std::uint8_t { Lower = 0, Upper = 1 };

/// A spacetime index slot: either a concrete component 0..3 or a symbolic
/// name. Whether a symbolic index is free or summed is a property of the
/// monomial it sits in (see index_status).
class IndexLabel {
 public:
  static IndexLabel concrete(int value, Variance variance = Variance::Lower);
  static IndexLabel symbol(std::string name, Variance variance = Variance::Lower);
  static IndexLabel lower(std::string name) { return symbol(std::move(name), Variance::Lower); }
  static IndexLabel upper(std::string name) { return symbol(std::move(name), Variance::Upper); }

  bool is_concrete() const { return value_ >= 0; }
  int value() const { return value_; }
  const std::string& name() const { return name_; }
  Variance variance() const { return variance_; }
  bool is_upper() const { return variance_ == Variance::Upper; }

  IndexLabel with_variance(Variance v) const {
    IndexLabel copy = *this;
    copy.variance_ = v;
    return copy;
  }

  /// "^mu", "_0", ...
  std::string to_string() const;

  friend bool operator==(const IndexLabel&, const IndexLabel&) = default;
  friend std::strong_ordering operator<=>(const IndexLabel& a, const IndexLabel& b);

 private:
  std::string name_;
  int value_ = -1;
  Variance variance_ = Variance::Lower;
};

enum class IndexStatus : std::uint8_t { Free, Bound, Concrete };

enum class FactorKind : std::uint8_t { Metric = 0, Kronecker = 1, Epsilon = 2, Accel = 3 };

/// eta(a,b), delta(a,b), eps(a,b,c,d) or the acceleration vector a(x).
struct TensorFactor {
  FactorKind kind = FactorKind::Metric;
  std::vector<IndexLabel> slots;

  static TensorFactor eta(IndexLabel a, IndexLabel b);
  static TensorFactor delta(IndexLabel a, IndexLabel b);
  static TensorFactor epsilon(IndexLabel a, IndexLabel b, IndexLabel c, IndexLabel d);
  static TensorFactor accel(IndexLabel a);

  bool is_concrete() const;
  std::string to_string() const;

  friend bool operator==(const TensorFactor&, const TensorFactor&) = default;
  friend std::strong_ordering operator<=>(const TensorFactor& a, const TensorFactor& b);
};

struct TensorMonomial {
  Scalar coeff;
  std::vector<TensorFactor> factors;

  std::string to_string() const;
  friend bool operator==(const TensorMonomial&, const TensorMonomial&) = default;
};

/// Raised when a monomial's index structure is not well formed (a name used
/// more than twice, or a repeated name with equal variance).
class IndexError : public std::invalid_argument {
 public:
  explicit IndexError(const std::string& what) : std::invalid_argument(what) {}
};

/// Formal sum of scalar-weighted tensor monomials.
///
/// Values produced by the arithmetic operators and by canonicalize() are in
/// canonical form: metric contractions and Kronecker substitutions applied,
/// concrete components evaluated, epsilon pairs expanded into metric
/// determinants, summed names renamed to a canonical labelling, like terms
/// merged and zeros pruned. `unreduced` builds a raw (non-canonical) value.
class CoefficientExpr {
 public:
  CoefficientExpr() = default;
  CoefficientExpr(Scalar s);  // NOLINT(google-explicit-constructor)
  CoefficientExpr(long n) : CoefficientExpr(Scalar(n)) {}  // NOLINT(google-explicit-constructor)

  static CoefficientExpr monomial(Scalar coeff, std::vector<TensorFactor> factors);
  static CoefficientExpr factor(TensorFactor f) { return monomial(Scalar(1), {std::move(f)}); }
  static CoefficientExpr unreduced(std::vector<TensorMonomial> terms);

  const std::vector<TensorMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the value has no tensor factors (zero counts as scalar).
  bool is_scalar() const;
  /// Scalar value; throws std::logic_error unless is_scalar().
  Scalar scalar_value() const;

  CoefficientExpr operator-() const;
  CoefficientExpr& operator+=(const CoefficientExpr& o);
  CoefficientExpr& operator-=(const CoefficientExpr& o);
  CoefficientExpr& operator*=(const Scalar& s);
  friend CoefficientExpr operator+(CoefficientExpr a, const CoefficientExpr& b) { return a += b; }
  friend CoefficientExpr operator-(CoefficientExpr a, const CoefficientExpr& b) { return a -= b; }
  friend CoefficientExpr operator*(const CoefficientExpr& a, const CoefficientExpr& b);
  friend CoefficientExpr operator*(CoefficientExpr a, const Scalar& s) { return a *= s; }
  friend CoefficientExpr operator*(const Scalar& s, CoefficientExpr a) { return a *= s; }

  /// Replaces concrete acceleration components a^k by the given values.
  CoefficientExpr specialize_accel(const std::array<Scalar, 4>& a_upper) const;

  friend bool operator==(const CoefficientExpr&, const CoefficientExpr&) = default;

  std::string to_string() const;

 private:
  std::vector<TensorMonomial> terms_;
};

std::ostream& operator<<(std::ostream& os, const CoefficientExpr& e);

/// Minkowski metric component, signature (+,-,-,-). Indices must be 0..3.
Scalar metric_component(int mu, int nu);

/// Lower-index Levi-Civita symbol with eps_{0123} = +1.
Scalar epsilon_component(const std::array<int, 4>& indices);

/// Brings an expression to canonical form. Throws IndexError naming the
/// offending monomial when the index structure is malformed.
CoefficientExpr canonicalize(const CoefficientExpr& expr);

/// Status of `label` inside monomial `m` (concrete, free, or summed).
IndexStatus index_status(const TensorMonomial& m, const IndexLabel& label);

/// Names occurring exactly once in the monomial, sorted.
std::vector<std::string> free_indices(const TensorMonomial& m);

}  // namespace confalg
