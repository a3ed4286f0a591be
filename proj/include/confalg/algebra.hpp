#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confalg/tensor.hpp"

namespace confalg {

/// Generator families in basis order D < J < P < C.
enum class GenKind : std::uint8_t { D = 0, J = 1, P = 2, C = 3 };

/// One of the 15 basis generators of the conformal algebra, always with
/// concrete lower indices. J is stored with mu < nu.
class Generator {
 public:
  static constexpr int kCount = 15;

  static Generator D() { return Generator(0); }
  static Generator P(int mu);
  static Generator C(int mu);
  /// Requires mu < nu; use AlgebraElement::J for the signed general form.
  static Generator J(int mu, int nu);
  static Generator from_id(int id);
  static const std::array<Generator, kCount>& basis();
  /// Parses "D", "P0", "C3", "J01" (also "J10", returning the sign).
  static std::optional<std::pair<int, Generator>> parse(std::string_view name);

  int id() const { return id_; }
  GenKind kind() const;
  /// Index slot 0 or 1 (J only has slot 1).
  int index(int slot = 0) const;
  /// +1 for P, 0 for J and D, -1 for C.
  int conformal_weight() const;
  std::string name() const;

  friend bool operator==(Generator a, Generator b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Generator a, Generator b) { return a.id_ <=> b.id_; }

 private:
  explicit constexpr Generator(int id) : id_(static_cast<std::uint8_t>(id)) {}
  std::uint8_t id_ = 0;
};

/// Formal linear combination of basis generators, kept sorted with zero
/// coefficients pruned.
class AlgebraElement {
 public:
  using Term = std::pair<Generator, CoefficientExpr>;

  AlgebraElement() = default;
  AlgebraElement(Generator g);  // NOLINT(google-explicit-constructor)
  /// J_{mu nu} with J_{nu mu} = -J_{mu nu} and J_{mu mu} = 0.
  static AlgebraElement J(int mu, int nu);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of g (zero if absent).
  CoefficientExpr coefficient(Generator g) const;

  void add(Generator g, const CoefficientExpr& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const CoefficientExpr& c, const AlgebraElement& a);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Symbolic pattern for one generator slot in a bracket rule, e.g. J(mu,nu).
struct GeneratorPattern {
  GenKind kind;
  std::array<std::string, 2> indices;
};

/// One right-hand-side term: coeff * (metric factors) * generator.
struct RuleTerm {
  Scalar coeff;
  std::vector<TensorFactor> factors;
  GeneratorPattern generator;
};

/// (lhs, rhs) -> sum of terms, with symbolic lower indices.
struct BracketRule {
  GeneratorPattern lhs;
  GeneratorPattern rhs;
  std::vector<RuleTerm> value;
};

/// The conformal bracket relations as data, one rule per unordered family pair.
const std::vector<BracketRule>& conformal_rules();

/// Normalized brackets of all ordered basis pairs.
class StructureTable {
 public:
  /// Instantiates `rules` on every ordered basis pair; a pair whose kinds only
  /// match a rule in swapped order takes the negated value.
  static StructureTable from_rules(const std::vector<BracketRule>& rules);

  const AlgebraElement& operator()(Generator a, Generator b) const {
    return entries_[static_cast<std::size_t>(a.id() * Generator::kCount + b.id())];
  }

  /// Copy with a single ordered entry replaced (test fixture for corrupted tables).
  StructureTable with_entry(Generator a, Generator b, AlgebraElement value) const;

 private:
  std::array<AlgebraElement, Generator::kCount * Generator::kCount> entries_;
};

/// Shared immutable table built from conformal_rules().
const StructureTable& conformal_table();

AlgebraElement bracket_basis(Generator a, Generator b, const StructureTable& table = conformal_table());
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b,
                       const StructureTable& table = conformal_table());

/// ((a,b),c) - (a,(b,c)) + (b,(a,c)); zero for a Lie algebra.
AlgebraElement jacobi_residual(Generator a, Generator b, Generator c,
                               const StructureTable& table = conformal_table());

struct JacobiEntry {
  std::array<Generator, 3> triple;
  bool degenerate = false;
  AlgebraElement residual;
  std::chrono::nanoseconds duration{0};
};

/// All 455 triples of distinct basis generators (first, in lexicographic id
/// order) followed by the 225 triples with a repeated generator.
std::vector<JacobiEntry> enumerate_jacobi(const StructureTable& table = conformal_table());

/// The brackets written out case by case with concrete indices, sharing no
/// code with the rule table; used to cross-check it.
AlgebraElement reference_bracket(Generator a, Generator b);

}  // namespace confalg
