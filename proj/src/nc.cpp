#include "confalg/nc.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <random>

namespace confalg {

// ---------------------------------------------------------------------------
// Letters and words

Letter Letter::mpower(int k) {
  if (k == 0) throw std::invalid_argument("Letter::mpower: exponent must be nonzero");
  if (k > 30000 || k < -30000) throw std::out_of_range("Letter::mpower: exponent too large");
  return Letter(-1, static_cast<std::int16_t>(k));
}

std::string Letter::to_string() const {
  if (is_generator()) return generator().name();
  if (power_ == 1) return "M";
  return "M^" + std::to_string(power_);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(l.code() + 4096);
    h *= 1099511628211ull;
  }
  return h;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w[i].to_string();
  }
  return s;
}

NCPolynomial random_polynomial(std::mt19937_64& rng, int max_terms, int max_length, bool mass_powers) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> letter(0, Generator::kCount + (mass_powers ? 3 : -1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  NCPolynomial p;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    const int len = length(rng);
    for (int k = 0; k < len; ++k) {
      const int x = letter(rng);
      if (x < Generator::kCount) {
        w.push_back(Letter::gen(Generator::from_id(x)));
      } else {
        static constexpr std::array<int, 4> kPowers{-2, -1, 1, 2};
        w.push_back(Letter::mpower(kPowers[static_cast<std::size_t>(x - Generator::kCount)]));
      }
    }
    const int re = coeff(rng);
    const int im = coeff(rng);
    const Scalar c(mpq_class(re == 0 && im == 0 ? 1 : re), mpq_class(im));
    p.add_term(w, c);
  }
  return p;
}

int conformal_weight(const Word& w) {
  int weight = 0;
  for (Letter l : w) weight += l.is_generator() ? l.generator().conformal_weight() : l.power();
  return weight;
}

// ---------------------------------------------------------------------------
// NCPolynomial

NCPolynomial::NCPolynomial(const CoefficientExpr& c) { add_term({}, c); }

NCPolynomial::NCPolynomial(Generator g) { add_term({Letter::gen(g)}, 1); }

NCPolynomial::NCPolynomial(const AlgebraElement& a) {
  for (const auto& [g, c] : a.terms()) add_term({Letter::gen(g)}, c);
}

NCPolynomial NCPolynomial::word(Word w, const CoefficientExpr& c) {
  NCPolynomial p;
  p.add_term(w, c);
  return p;
}

NCPolynomial NCPolynomial::mass_power(int k) {
  if (k == 0) return NCPolynomial(1);
  return word({Letter::mpower(k)});
}

void NCPolynomial::add_term(const Word& w, const CoefficientExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial p = *this;
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  if (&o == this) {
    for (auto& [w, c] : terms_) c *= Scalar(2);
    return *this;
  }
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial operator*(const CoefficientExpr& c, const NCPolynomial& p) {
  NCPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : p.terms_) out.add_term(w, c * x);
  return out;
}

NCPolynomial NCPolynomial::specialize_accel(const std::array<Scalar, 4>& a_upper) const {
  NCPolynomial out;
  for (const auto& [w, c] : terms_) out.add_term(w, c.specialize_accel(a_upper));
  return out;
}

namespace {
std::string coefficient_prefix(const CoefficientExpr& c, bool has_letters) {
  if (!has_letters) return c.to_string();
  if (c.is_scalar()) {
    const Scalar s = c.scalar_value();
    if (s.is_one()) return "";
    if (s == Scalar(-1)) return "-";
    if (!s.is_real() && sgn(s.real()) != 0) return "(" + s.to_string() + ") ";
    return s.to_string() + " ";
  }
  if (c.terms().size() == 1) return c.to_string() + " ";
  return "(" + c.to_string() + ") ";
}
}  // namespace

std::string NCPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string term = coefficient_prefix(c, !w.empty()) + word_to_string(w);
    if (first) {
      s = term;
    } else if (term[0] == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

const Scalar kI = Scalar::i();

Letter P(int mu) { return Letter::gen(Generator::P(mu)); }

// Words and coefficients of the bracket (C_mu, M^s) for s = +1 / -1:
//   (C_mu, M)    = 2 (eta_{mu r} D - J_{mu r}) . P^r M^-1
//   (C_mu, M^-1) = -M^-1 (C_mu, M) M^-1
using WordList = std::vector<std::pair<Word, Scalar>>;

const WordList& c_mass_bracket(int mu, int s) {
  static const auto kTable = [] {
    std::array<std::array<WordList, 2>, 4> t;
    const Letter m_inv = Letter::mpower(-1);
    const Letter d = Letter::gen(Generator::D());
    for (int m = 0; m < 4; ++m) {
      WordList plus;
      for (int r = 0; r < 4; ++r) {
        const Scalar raise = metric_component(r, r);
        if (r == m) {
          const Scalar c = raise * metric_component(m, r);
          plus.push_back({{d, P(r), m_inv}, c});
          plus.push_back({{P(r), m_inv, d}, c});
          continue;
        }
        const auto j = AlgebraElement::J(m, r);
        const auto& [gen, coeff] = j.terms().front();
        const Scalar c = -raise * coeff.scalar_value();
        plus.push_back({{Letter::gen(gen), P(r), m_inv}, c});
        plus.push_back({{P(r), m_inv, Letter::gen(gen)}, c});
      }
      WordList minus;
      for (const auto& [w, c] : plus) {
        Word wrapped{m_inv};
        wrapped.insert(wrapped.end(), w.begin(), w.end());
        wrapped.push_back(m_inv);
        minus.push_back({std::move(wrapped), -c});
      }
      t[m][0] = std::move(plus);
      t[m][1] = std::move(minus);
    }
    return t;
  }();
  return kTable[mu][s > 0 ? 0 : 1];
}

bool reducible_pair(Letter x, Letter y) {
  if (!x.is_generator()) return true;
  if (!y.is_generator()) return false;
  if (y < x) return true;
  return x == y && x.generator() == Generator::P(0);
}

}  // namespace

WordAlgebra& WordAlgebra::standard() {
  thread_local WordAlgebra instance;
  return instance;
}

bool WordAlgebra::is_normal(const Word& w) const {
  std::size_t pos = 0;
  return !find_redex(w, pos);
}

bool WordAlgebra::find_redex(const Word& w, std::size_t& pos) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (reducible_pair(w[i], w[i + 1])) {
      pos = i;
      return true;
    }
  }
  return false;
}

void WordAlgebra::rewrite_at(const Word& w, std::size_t i, Expansion& out) const {
  const Letter x = w[i];
  const Letter y = w[i + 1];
  auto emit = [&](std::initializer_list<Word> middle, const Scalar& c) {
    Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& m : middle) v.insert(v.end(), m.begin(), m.end());
    v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    out.emplace_back(std::move(v), c);
  };
  auto power_word = [](int k) { return k == 0 ? Word{} : Word{Letter::mpower(k)}; };

  if (!x.is_generator() && !y.is_generator()) {
    emit({power_word(x.power() + y.power())}, 1);
    return;
  }

  if (!x.is_generator()) {
    const int k = x.power();
    const Generator g = y.generator();
    switch (g.kind()) {
      case GenKind::P:
      case GenKind::J:
        emit({{y, x}}, 1);
        return;
      case GenKind::D:
        // M^k D = D M^k - i (D, M^k) with (D, M^k) = k M^k.
        emit({{y, x}}, 1);
        emit({{x}}, Scalar(0) - kI * Scalar(k));
        return;
      case GenKind::C: {
        // M^k C = M^(k-s) (C M^s - i (C, M^s)), s = sign(k).
        const int s = k > 0 ? 1 : -1;
        const Word rest = power_word(k - s);
        emit({rest, {y, Letter::mpower(s)}}, 1);
        for (const auto& [cw, cc] : c_mass_bracket(g.index(), s)) emit({rest, cw}, -kI * cc);
        return;
      }
    }
  }

  if (x == y) {
    // P0 P0 = M^2 + P1 P1 + P2 P2 + P3 P3.
    emit({{Letter::mpower(2)}}, 1);
    for (int j = 1; j < 4; ++j) emit({{P(j), P(j)}}, 1);
    return;
  }

  // x y = y x + i (x, y)
  emit({{y, x}}, 1);
  for (const auto& [g, c] : (*table_)(x.generator(), y.generator()).terms()) {
    emit({{Letter::gen(g)}}, kI * c.scalar_value());
  }
}

const WordAlgebra::Expansion& WordAlgebra::reduce_word(const Word& w, std::size_t budget_end) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  std::size_t pos = 0;
  if (!find_redex(w, pos)) return cache_.emplace(w, Expansion{{w, Scalar(1)}}).first->second;
  if (!in_progress_.insert(w).second) throw RewriteError("rewriting revisits word " + word_to_string(w));
  if (++steps_ > budget_end) throw RewriteError("rewriting step budget exceeded at word " + word_to_string(w));

  Expansion children;
  rewrite_at(w, pos, children);
  std::map<Word, Scalar> acc;
  for (const auto& [cw, cc] : children) {
    const Expansion& sub = reduce_word(cw, budget_end);
    for (const auto& [v, d] : sub) {
      auto [it, inserted] = acc.try_emplace(v, cc * d);
      if (!inserted) it->second += cc * d;
    }
  }
  in_progress_.erase(w);
  Expansion result;
  result.reserve(acc.size());
  for (auto& [v, c] : acc) {
    if (!c.is_zero()) result.emplace_back(v, std::move(c));
  }
  return cache_.emplace(w, std::move(result)).first->second;
}

NCPolynomial WordAlgebra::reduce_random(const NCPolynomial& p, const RewriteOptions& options) {
  std::mt19937_64 rng(options.seed);
  NCPolynomial::TermMap pending = p.terms();
  NCPolynomial result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng)));
    const Word w = it->first;
    const CoefficientExpr c = it->second;
    pending.erase(it);

    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (reducible_pair(w[i], w[i + 1])) redexes.push_back(i);
    }
    if (redexes.empty()) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > options.step_budget) throw RewriteError("rewriting step budget exceeded at word " + word_to_string(w));
    const std::size_t pos = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    Expansion children;
    rewrite_at(w, pos, children);
    for (auto& [cw, cc] : children) {
      CoefficientExpr term = c * cc;
      auto [jt, inserted] = pending.try_emplace(cw, term);
      if (!inserted) {
        jt->second += term;
        if (jt->second.is_zero()) pending.erase(jt);
      }
    }
  }
  steps_ += steps;
  return result;
}

NCPolynomial WordAlgebra::normal_form(const NCPolynomial& p) { return normal_form(p, RewriteOptions{}); }

NCPolynomial WordAlgebra::normal_form(const NCPolynomial& p, const RewriteOptions& options) {
  if (options.strategy == RewriteStrategy::Random) return reduce_random(p, options);
  const std::size_t budget_end = steps_ + options.step_budget;
  NCPolynomial out;
  try {
    for (const auto& [w, c] : p.terms()) {
      const Expansion& e = reduce_word(w, budget_end);
      if (c.is_scalar()) {
        const Scalar s = c.scalar_value();
        for (const auto& [v, d] : e) out.add_term(v, s * d);
      } else {
        for (const auto& [v, d] : e) out.add_term(v, c * d);
      }
    }
  } catch (...) {
    in_progress_.clear();
    throw;
  }
  return out;
}

NCPolynomial WordAlgebra::multiply(const NCPolynomial& p, const NCPolynomial& q) {
  NCPolynomial raw;
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      raw.add_term(w, a * b);
    }
  }
  return normal_form(raw);
}

NCPolynomial WordAlgebra::sym_product(const NCPolynomial& p, const NCPolynomial& q) {
  return Scalar::rational(1, 2) * (multiply(p, q) + multiply(q, p));
}

NCPolynomial WordAlgebra::bracket(const NCPolynomial& p, const NCPolynomial& q) {
  return -kI * (multiply(p, q) - multiply(q, p));
}

NCPolynomial normal_form(const NCPolynomial& p) { return WordAlgebra::standard().normal_form(p); }
NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& q) { return WordAlgebra::standard().multiply(p, q); }
NCPolynomial sym_product(const NCPolynomial& p, const NCPolynomial& q) {
  return WordAlgebra::standard().sym_product(p, q);
}
NCPolynomial nc_bracket(const NCPolynomial& p, const NCPolynomial& q) { return WordAlgebra::standard().bracket(p, q); }

}  // namespace confalg
