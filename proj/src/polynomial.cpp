#include "confalg/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace confalg {

Monomial Monomial::var(int v, int power) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("monomial variable index");
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t v = 0; v < exp.size(); ++v) {
    const int e = exp[v] + o.exp[v];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp[v] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t v = 0; v < exp.size(); ++v) {
    if (exp[v] < o.exp[v]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t v = 0; v < exp.size(); ++v) m.exp[v] = static_cast<std::uint8_t>(exp[v] - o.exp[v]);
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::var(int v) { return monomial(Monomial::var(v)); }

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return 0;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {
template <class Combine>
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                    Combine sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign(b[j].second));
      ++j;
    } else {
      Scalar c = a[i].second + sign(b[j].second);
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, [](const Scalar& s) { return s; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, [](const Scalar& s) { return -s; });
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

Polynomial Polynomial::substitute(int v, const Polynomial& value) const {
  Polynomial out;
  std::vector<Polynomial> powers{Polynomial(1)};
  std::vector<Term> untouched;
  for (const auto& [m, c] : terms_) {
    const int e = m[v];
    if (e == 0) {
      untouched.emplace_back(m, c);
      continue;
    }
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.exp[static_cast<std::size_t>(v)] = 0;
    out += (powers[static_cast<std::size_t>(e)] * c).times_monomial(rest);
  }
  out += from_terms(std::move(untouched));
  return out;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& values) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int v = 0; v < Monomial::kMaxVars; ++v) {
      for (int k = 0; k < m[v]; ++k) t *= values.at(static_cast<std::size_t>(v));
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::derivative(int v) const {
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_) {
    const int e = m[v];
    if (e == 0) continue;
    Monomial d = m;
    d.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e - 1);
    terms.emplace_back(d, c * Scalar(e));
  }
  return from_terms(std::move(terms));
}

std::map<Monomial, Polynomial> Polynomial::split(const std::function<bool(int)>& select) const {
  std::map<Monomial, std::vector<Term>> parts;
  for (const auto& [m, c] : terms_) {
    Monomial key;
    Monomial rest;
    for (int v = 0; v < Monomial::kMaxVars; ++v) {
      (select(v) ? key : rest).exp[static_cast<std::size_t>(v)] = m.exp[static_cast<std::size_t>(v)];
    }
    parts[key].emplace_back(rest, c);
  }
  std::map<Monomial, Polynomial> out;
  for (auto& [k, ts] : parts) out.emplace(k, from_terms(std::move(ts)));
  return out;
}

std::string Polynomial::to_string(const std::function<std::string(int)>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int v = 0; v < Monomial::kMaxVars; ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += names ? names(v) : "x" + std::to_string(v);
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    Scalar coeff = c;
    bool negative = coeff.real() < 0 || (sgn(coeff.real()) == 0 && coeff.imag() < 0);
    if (!first) {
      os << (negative ? " - " : " + ");
      if (negative) coeff = -coeff;
    }
    first = false;
    if (mono.empty()) {
      os << coeff.to_string();
    } else if (coeff.is_one()) {
      os << mono;
    } else if (coeff == Scalar(-1)) {
      os << "-" << mono;
    } else {
      const std::string cs = coeff.to_string();
      const bool compound = !coeff.is_real() && sgn(coeff.real()) != 0;
      os << (compound ? "(" + cs + ")" : cs) << " " << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Solver

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

/// Variable that appears in `eq` only as a bare linear monomial.
std::optional<std::pair<int, Scalar>> linear_variable(const Polynomial& eq, int num_vars) {
  for (int v = 0; v < num_vars; ++v) {
    std::optional<Scalar> coeff;
    bool ok = true;
    for (const auto& [m, c] : eq.terms()) {
      if (m[v] == 0) continue;
      if (m == Monomial::var(v)) {
        coeff = c;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && coeff) return std::pair{v, *coeff};
  }
  return std::nullopt;
}

std::optional<int> sole_variable(const Polynomial& eq, int num_vars) {
  std::optional<int> found;
  for (int v = 0; v < num_vars; ++v) {
    if (!eq.involves(v)) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

/// Rational roots of a univariate polynomial of degree <= 2 in v, ascending.
std::optional<std::vector<Scalar>> rational_roots(const Polynomial& eq, int v) {
  Scalar a;
  Scalar b;
  Scalar c;
  for (const auto& [m, coeff] : eq.terms()) {
    switch (m[v]) {
      case 0: c = coeff; break;
      case 1: b = coeff; break;
      case 2: a = coeff; break;
      default: return std::nullopt;
    }
  }
  if (!a.is_real() || !b.is_real() || !c.is_real()) return std::nullopt;
  const mpq_class disc = b.real() * b.real() - 4 * a.real() * c.real();
  const auto root = rational_sqrt(disc);
  if (!root) return std::nullopt;
  const mpq_class two_a = 2 * a.real();
  std::set<mpq_class> roots{(-b.real() - *root) / two_a, (-b.real() + *root) / two_a};
  std::vector<Scalar> out;
  for (const auto& r : roots) out.emplace_back(r);
  return out;
}

struct Elimination {
  std::vector<std::pair<int, Polynomial>> steps;  // v = expr, in order
};

bool eliminate(std::vector<Polynomial> eqs, int num_vars, Elimination& elim) {
  for (;;) {
    std::erase_if(eqs, [](const Polynomial& p) { return p.is_zero(); });
    for (const auto& e : eqs) {
      if (e.is_constant()) return false;
    }
    if (eqs.empty()) return true;
    std::stable_sort(eqs.begin(), eqs.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });

    bool progressed = false;
    for (std::size_t k = 0; k < eqs.size() && !progressed; ++k) {
      const auto lin = linear_variable(eqs[k], num_vars);
      if (!lin) continue;
      const auto [v, c] = *lin;
      Polynomial expr = eqs[k] - Polynomial::monomial(Monomial::var(v), c);
      expr *= -(Scalar(1) / c);
      for (auto& e : eqs) e = e.substitute(v, expr);
      elim.steps.emplace_back(v, std::move(expr));
      progressed = true;
    }
    if (progressed) continue;

    for (const auto& eq : eqs) {
      const auto v = sole_variable(eq, num_vars);
      if (!v) continue;
      const auto roots = rational_roots(eq, *v);
      if (!roots) return false;
      for (const auto& r : *roots) {
        Elimination branch = elim;
        std::vector<Polynomial> sub;
        sub.reserve(eqs.size());
        for (const auto& e : eqs) sub.push_back(e.substitute(*v, r));
        branch.steps.emplace_back(*v, Polynomial(r));
        if (eliminate(std::move(sub), num_vars, branch)) {
          elim = std::move(branch);
          return true;
        }
      }
      return false;
    }
    return false;
  }
}

}  // namespace

std::optional<SolveResult> solve_system(std::vector<Polynomial> equations, int num_vars) {
  Elimination elim;
  if (!eliminate(std::move(equations), num_vars, elim)) return std::nullopt;

  SolveResult result;
  std::set<int> determined;
  for (const auto& [v, e] : elim.steps) determined.insert(v);
  for (int v = 0; v < num_vars; ++v) {
    if (!determined.contains(v)) result.free.push_back(v);
  }
  // Later steps never mention earlier variables, so resolve back to front.
  std::vector<Scalar> values(static_cast<std::size_t>(Monomial::kMaxVars));
  for (auto it = elim.steps.rbegin(); it != elim.steps.rend(); ++it) {
    const Scalar value = it->second.evaluate(values);
    values[static_cast<std::size_t>(it->first)] = value;
    result.values.emplace(it->first, value);
  }
  return result;
}

}  // namespace confalg
