#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "confalg/algebra.hpp"

namespace confalg {

/// A letter of the word algebra: a basis generator or a formal mass power M^k.
class Letter {
 public:
  static Letter gen(Generator g) { return Letter(static_cast<std::int8_t>(g.id()), 0); }
  /// k must be nonzero.
  static Letter mpower(int k);

  bool is_generator() const { return gen_ >= 0; }
  Generator generator() const { return Generator::from_id(gen_); }
  int power() const { return power_; }
  /// Packed value, unique per letter.
  std::int32_t code() const { return gen_ >= 0 ? gen_ : 1000 + power_; }

  std::string to_string() const;

  friend bool operator==(Letter, Letter) = default;
  /// Generators by basis id, then mass powers by exponent.
  friend std::strong_ordering operator<=>(Letter a, Letter b) {
    if (a.is_generator() != b.is_generator()) {
      return a.is_generator() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.is_generator()) return a.gen_ <=> b.gen_;
    return a.power_ <=> b.power_;
  }

 private:
  Letter(std::int8_t gen, std::int16_t power) : gen_(gen), power_(power) {}
  std::int8_t gen_ = -1;
  std::int16_t power_ = 0;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

std::string word_to_string(const Word& w);

/// Sum of coefficient-weighted words. Values returned by WordAlgebra
/// operations are in normal form; `raw` terms are kept as written.
class NCPolynomial {
 public:
  using TermMap = std::map<Word, CoefficientExpr>;

  NCPolynomial() = default;
  NCPolynomial(const CoefficientExpr& c);  // NOLINT(google-explicit-constructor)
  NCPolynomial(const Scalar& s) : NCPolynomial(CoefficientExpr(s)) {}  // NOLINT(google-explicit-constructor)
  NCPolynomial(long n) : NCPolynomial(CoefficientExpr(n)) {}  // NOLINT(google-explicit-constructor)
  NCPolynomial(Generator g);  // NOLINT(google-explicit-constructor)
  NCPolynomial(const AlgebraElement& a);  // NOLINT(google-explicit-constructor)

  /// A single word, not reduced.
  static NCPolynomial word(Word w, const CoefficientExpr& c = 1);
  static NCPolynomial mass_power(int k);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const CoefficientExpr& c);

  NCPolynomial operator-() const;
  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  /// Coefficients commute with every letter, so scaling preserves normal form.
  friend NCPolynomial operator*(const CoefficientExpr& c, const NCPolynomial& p);
  friend NCPolynomial operator*(const Scalar& s, const NCPolynomial& p) { return CoefficientExpr(s) * p; }

  /// Applies CoefficientExpr::specialize_accel to every coefficient.
  NCPolynomial specialize_accel(const std::array<Scalar, 4>& a_upper) const;

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// Stable plain-text rendering, terms in word order: "P0 C0 + 2i D".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Thrown when rewriting exceeds its step budget or revisits a word it is
/// still reducing; either indicates an inconsistent rule set.
class RewriteError : public std::runtime_error {
 public:
  explicit RewriteError(const std::string& what) : std::runtime_error(what) {}
};

enum class RewriteStrategy : std::uint8_t { Leftmost, Random };

struct RewriteOptions {
  RewriteStrategy strategy = RewriteStrategy::Leftmost;
  std::uint64_t seed = 0;
  std::size_t step_budget = 50'000'000;
};

/// The associative word algebra over the 15 generators and M^k, with
/// normal ordering D < J < P < C, mass powers merged on the right, P0^2
/// eliminated through M^2 = P_r P^r, and reordering y x -> x y + i (y,x).
///
/// Normal forms of single words are memoized, so an instance is not safe to
/// share between threads; use one per thread (see standard()).
class WordAlgebra {
 public:
  explicit WordAlgebra(const StructureTable& table = conformal_table()) : table_(&table) {}

  /// Per-thread instance over the conformal table.
  static WordAlgebra& standard();

  const StructureTable& table() const { return *table_; }

  NCPolynomial normal_form(const NCPolynomial& p);
  NCPolynomial normal_form(const NCPolynomial& p, const RewriteOptions& options);
  bool is_normal(const Word& w) const;

  NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& q);
  /// (pq + qp) / 2.
  NCPolynomial sym_product(const NCPolynomial& p, const NCPolynomial& q);
  /// -i (pq - qp), the normalized bracket.
  NCPolynomial bracket(const NCPolynomial& p, const NCPolynomial& q);

  /// Rule applications performed since construction (cache hits excluded).
  std::size_t steps() const { return steps_; }
  void clear_cache() { cache_.clear(); }

 private:
  using Expansion = std::vector<std::pair<Word, Scalar>>;

  bool find_redex(const Word& w, std::size_t& pos) const;
  void rewrite_at(const Word& w, std::size_t pos, Expansion& out) const;
  const Expansion& reduce_word(const Word& w, std::size_t budget_end);
  NCPolynomial reduce_random(const NCPolynomial& p, const RewriteOptions& options);

  const StructureTable* table_;
  std::unordered_map<Word, Expansion, WordHash> cache_;
  std::unordered_set<Word, WordHash> in_progress_;
  std::size_t steps_ = 0;
};

// Convenience wrappers over WordAlgebra::standard().
NCPolynomial normal_form(const NCPolynomial& p);
NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial sym_product(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial nc_bracket(const NCPolynomial& p, const NCPolynomial& q);

/// Random polynomial of up to `max_terms` words of 1..`max_length` letters
/// with small Gaussian-integer coefficients; mass powers in [-2, 2] when
/// `mass_powers` is set. The words are not reduced.
NCPolynomial random_polynomial(std::mt19937_64& rng, int max_terms = 3, int max_length = 3, bool mass_powers = true);

/// Sum of conformal weights of the letters: +1 per P, -1 per C, k per M^k.
int conformal_weight(const Word& w);

}  // namespace confalg
