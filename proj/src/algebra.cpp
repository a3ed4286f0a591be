#include "confalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace confalg {

namespace {
constexpr std::array<std::array<int, 2>, 6> kJPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr int kJBase = 1;
constexpr int kPBase = 7;
constexpr int kCBase = 11;

void check_index(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("generator index out of range 0..3: " + std::to_string(mu));
}
}  // namespace

// ---------------------------------------------------------------------------
// Generator

Generator Generator::P(int mu) {
  check_index(mu);
  return Generator(kPBase + mu);
}

Generator Generator::C(int mu) {
  check_index(mu);
  return Generator(kCBase + mu);
}

Generator Generator::J(int mu, int nu) {
  check_index(mu);
  check_index(nu);
  if (mu >= nu) throw std::invalid_argument("Generator::J requires mu < nu");
  for (int k = 0; k < 6; ++k) {
    if (kJPairs[k][0] == mu && kJPairs[k][1] == nu) return Generator(kJBase + k);
  }
  throw std::logic_error("unreachable");
}

Generator Generator::from_id(int id) {
  if (id < 0 || id >= kCount) throw std::out_of_range("generator id out of range");
  return Generator(id);
}

const std::array<Generator, Generator::kCount>& Generator::basis() {
  static const auto kBasis = [] {
    std::array<Generator, kCount> b{Generator(0), Generator(0), Generator(0), Generator(0), Generator(0),
                                    Generator(0), Generator(0), Generator(0), Generator(0), Generator(0),
                                    Generator(0), Generator(0), Generator(0), Generator(0), Generator(0)};
    for (int i = 0; i < kCount; ++i) b[i] = Generator(i);
    return b;
  }();
  return kBasis;
}

std::optional<std::pair<int, Generator>> Generator::parse(std::string_view name) {
  auto digit = [](char c) { return c >= '0' && c <= '3' ? c - '0' : -1; };
  if (name == "D") return std::pair{1, D()};
  if (name.size() == 2 && (name[0] == 'P' || name[0] == 'C')) {
    const int mu = digit(name[1]);
    if (mu < 0) return std::nullopt;
    return std::pair{1, name[0] == 'P' ? P(mu) : C(mu)};
  }
  if (name.size() == 3 && name[0] == 'J') {
    const int mu = digit(name[1]);
    const int nu = digit(name[2]);
    if (mu < 0 || nu < 0 || mu == nu) return std::nullopt;
    return mu < nu ? std::pair{1, J(mu, nu)} : std::pair{-1, J(nu, mu)};
  }
  return std::nullopt;
}

GenKind Generator::kind() const {
  if (id_ == 0) return GenKind::D;
  if (id_ < kPBase) return GenKind::J;
  if (id_ < kCBase) return GenKind::P;
  return GenKind::C;
}

int Generator::index(int slot) const {
  switch (kind()) {
    case GenKind::D:
      throw std::logic_error("D carries no index");
    case GenKind::J:
      return kJPairs[id_ - kJBase][slot];
    case GenKind::P:
      return id_ - kPBase;
    case GenKind::C:
      return id_ - kCBase;
  }
  return 0;
}

int Generator::conformal_weight() const {
  switch (kind()) {
    case GenKind::P:
      return 1;
    case GenKind::C:
      return -1;
    default:
      return 0;
  }
}

std::string Generator::name() const {
  switch (kind()) {
    case GenKind::D:
      return "D";
    case GenKind::J:
      return "J" + std::to_string(index(0)) + std::to_string(index(1));
    case GenKind::P:
      return "P" + std::to_string(index());
    case GenKind::C:
      return "C" + std::to_string(index());
  }
  return "?";
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(Generator g) { terms_.emplace_back(g, CoefficientExpr(1)); }

AlgebraElement AlgebraElement::J(int mu, int nu) {
  check_index(mu);
  check_index(nu);
  AlgebraElement e;
  if (mu < nu) e.add(Generator::J(mu, nu), 1);
  if (mu > nu) e.add(Generator::J(nu, mu), -1);
  return e;
}

CoefficientExpr AlgebraElement::coefficient(Generator g) const {
  for (const auto& [h, c] : terms_) {
    if (h == g) return c;
  }
  return {};
}

void AlgebraElement::add(Generator g, const CoefficientExpr& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g, [](const Term& t, Generator x) { return t.first < x; });
  if (it != terms_.end() && it->first == g) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {g, c});
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement operator*(const CoefficientExpr& c, const AlgebraElement& a) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [g, x] : a.terms_) out.add(g, c * x);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    std::string coeff;
    const bool single = c.terms().size() == 1;
    if (single && c.is_scalar() && c.scalar_value().is_one()) {
      coeff = "";
    } else if (single && c.is_scalar() && c.scalar_value() == Scalar(-1)) {
      coeff = "-";
    } else if (single) {
      coeff = c.to_string() + " ";
    } else {
      coeff = "(" + c.to_string() + ") ";
    }
    std::string term = coeff + g.name();
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
// Rules

namespace {
GeneratorPattern gD() { return {GenKind::D, {"", ""}}; }
GeneratorPattern gP(const char* m) { return {GenKind::P, {m, ""}}; }
GeneratorPattern gC(const char* m) { return {GenKind::C, {m, ""}}; }
GeneratorPattern gJ(const char* m, const char* n) { return {GenKind::J, {m, n}}; }
TensorFactor eta(const char* a, const char* b) { return TensorFactor::eta(IndexLabel::lower(a), IndexLabel::lower(b)); }
}  // namespace

const std::vector<BracketRule>& conformal_rules() {
  static const std::vector<BracketRule> kRules = {
      {gP("mu"), gP("nu"), {}},
      {gJ("mu", "nu"), gP("rho"), {{1, {eta("nu", "rho")}, gP("mu")}, {-1, {eta("mu", "rho")}, gP("nu")}}},
      {gJ("mu", "nu"),
       gJ("rho", "sigma"),
       {{1, {eta("nu", "rho")}, gJ("mu", "sigma")},
        {1, {eta("mu", "sigma")}, gJ("nu", "rho")},
        {-1, {eta("mu", "rho")}, gJ("nu", "sigma")},
        {-1, {eta("nu", "sigma")}, gJ("mu", "rho")}}},
      {gD(), gP("mu"), {{1, {}, gP("mu")}}},
      {gD(), gJ("mu", "nu"), {}},
      {gP("mu"), gC("nu"), {{-2, {eta("mu", "nu")}, gD()}, {-2, {}, gJ("mu", "nu")}}},
      {gJ("mu", "nu"), gC("rho"), {{1, {eta("nu", "rho")}, gC("mu")}, {-1, {eta("mu", "rho")}, gC("nu")}}},
      {gD(), gC("mu"), {{-1, {}, gC("mu")}}},
      {gC("mu"), gC("nu"), {}},
      {gD(), gD(), {}},
  };
  return kRules;
}

namespace {

using Binding = std::map<std::string, int>;

void bind(const GeneratorPattern& p, Generator g, Binding& b) {
  switch (p.kind) {
    case GenKind::D:
      return;
    case GenKind::J:
      b[p.indices[0]] = g.index(0);
      b[p.indices[1]] = g.index(1);
      return;
    default:
      b[p.indices[0]] = g.index();
  }
}

AlgebraElement instantiate(const GeneratorPattern& p, const Binding& b) {
  switch (p.kind) {
    case GenKind::D:
      return Generator::D();
    case GenKind::J:
      return AlgebraElement::J(b.at(p.indices[0]), b.at(p.indices[1]));
    case GenKind::P:
      return Generator::P(b.at(p.indices[0]));
    case GenKind::C:
      return Generator::C(b.at(p.indices[0]));
  }
  return {};
}

AlgebraElement apply_rule(const BracketRule& rule, Generator a, Generator b) {
  Binding binding;
  bind(rule.lhs, a, binding);
  bind(rule.rhs, b, binding);
  AlgebraElement out;
  for (const auto& term : rule.value) {
    std::vector<TensorFactor> factors = term.factors;
    for (auto& f : factors) {
      for (auto& slot : f.slots) {
        if (!slot.is_concrete()) slot = IndexLabel::concrete(binding.at(slot.name()), slot.variance());
      }
    }
    const CoefficientExpr coeff = CoefficientExpr::monomial(term.coeff, std::move(factors));
    out += coeff * instantiate(term.generator, binding);
  }
  return out;
}

}  // namespace

StructureTable StructureTable::from_rules(const std::vector<BracketRule>& rules) {
  StructureTable t;
  for (Generator a : Generator::basis()) {
    for (Generator b : Generator::basis()) {
      bool found = false;
      for (const auto& rule : rules) {
        if (rule.lhs.kind == a.kind() && rule.rhs.kind == b.kind()) {
          t.entries_[a.id() * Generator::kCount + b.id()] = apply_rule(rule, a, b);
          found = true;
          break;
        }
      }
      if (found) continue;
      for (const auto& rule : rules) {
        if (rule.lhs.kind == b.kind() && rule.rhs.kind == a.kind()) {
          t.entries_[a.id() * Generator::kCount + b.id()] = -apply_rule(rule, b, a);
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("no bracket rule for pair " + a.name() + ", " + b.name());
    }
  }
  return t;
}

StructureTable StructureTable::with_entry(Generator a, Generator b, AlgebraElement value) const {
  StructureTable t = *this;
  t.entries_[a.id() * Generator::kCount + b.id()] = std::move(value);
  return t;
}

const StructureTable& conformal_table() {
  static const StructureTable kTable = StructureTable::from_rules(conformal_rules());
  return kTable;
}

AlgebraElement bracket_basis(Generator a, Generator b, const StructureTable& table) { return table(a, b); }

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b, const StructureTable& table) {
  AlgebraElement out;
  for (const auto& [g, x] : a.terms()) {
    for (const auto& [h, y] : b.terms()) {
      out += (x * y) * table(g, h);
    }
  }
  return out;
}

AlgebraElement jacobi_residual(Generator a, Generator b, Generator c, const StructureTable& table) {
  const AlgebraElement A(a), B(b), C(c);
  return bracket(table(a, b), C, table) - bracket(A, table(b, c), table) + bracket(B, table(a, c), table);
}

std::vector<JacobiEntry> enumerate_jacobi(const StructureTable& table) {
  std::vector<JacobiEntry> out;
  out.reserve(680);
  auto run = [&](int i, int j, int k, bool degenerate) {
    const auto start = std::chrono::steady_clock::now();
    const auto a = Generator::from_id(i), b = Generator::from_id(j), c = Generator::from_id(k);
    AlgebraElement r = jacobi_residual(a, b, c, table);
    const auto stop = std::chrono::steady_clock::now();
    out.push_back({{a, b, c}, degenerate, std::move(r), std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)});
  };
  constexpr int n = Generator::kCount;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) run(i, j, k, false);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        if (i == j || j == k) run(i, j, k, true);
      }
    }
  }
  return out;
}

}  // namespace confalg

namespace confalg {

namespace {
AlgebraElement scaled(long c, const AlgebraElement& a) { return CoefficientExpr(c) * a; }

/// (a, b) for a listed before b in the case analysis below; nullopt when the
/// pair is handled with the arguments swapped.
std::optional<AlgebraElement> reference_ordered(Generator a, Generator b) {
  auto eta = [](int m, int n) { return m != n ? 0L : (m == 0 ? 1L : -1L); };
  const GenKind ka = a.kind();
  const GenKind kb = b.kind();
  if (ka == GenKind::D) {
    if (kb == GenKind::P) return AlgebraElement(b);
    if (kb == GenKind::C) return -AlgebraElement(b);
    return AlgebraElement();
  }
  if (ka == GenKind::P && kb == GenKind::P) return AlgebraElement();
  if (ka == GenKind::C && kb == GenKind::C) return AlgebraElement();
  if (ka == GenKind::J && (kb == GenKind::P || kb == GenKind::C)) {
    const int m = a.index(0);
    const int n = a.index(1);
    const int r = b.index();
    const Generator bm = kb == GenKind::P ? Generator::P(m) : Generator::C(m);
    const Generator bn = kb == GenKind::P ? Generator::P(n) : Generator::C(n);
    return scaled(eta(n, r), bm) - scaled(eta(m, r), bn);
  }
  if (ka == GenKind::J && kb == GenKind::J) {
    const int m = a.index(0);
    const int n = a.index(1);
    const int r = b.index(0);
    const int s = b.index(1);
    return scaled(eta(n, r), AlgebraElement::J(m, s)) + scaled(eta(m, s), AlgebraElement::J(n, r)) -
           scaled(eta(m, r), AlgebraElement::J(n, s)) - scaled(eta(n, s), AlgebraElement::J(m, r));
  }
  if (ka == GenKind::P && kb == GenKind::C) {
    const int m = a.index();
    const int n = b.index();
    return scaled(-2 * eta(m, n), AlgebraElement(Generator::D())) - scaled(2, AlgebraElement::J(m, n));
  }
  return std::nullopt;
}
}  // namespace

AlgebraElement reference_bracket(Generator a, Generator b) {
  if (auto r = reference_ordered(a, b)) return *r;
  if (auto r = reference_ordered(b, a)) return -*r;
  throw std::logic_error("reference bracket: unhandled pair " + a.name() + "," + b.name());
}

}  // namespace confalg
