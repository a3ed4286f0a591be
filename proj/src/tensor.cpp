#include "confalg/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace confalg {

// ---------------------------------------------------------------------------
// IndexLabel / TensorFactor

IndexLabel IndexLabel::concrete(int value, Variance variance) {
  if (value < 0 || value > 3) throw IndexError("concrete index out of range 0..3: " + std::to_string(value));
  IndexLabel l;
  l.value_ = value;
  l.variance_ = variance;
  return l;
}

IndexLabel IndexLabel::symbol(std::string name, Variance variance) {
  if (name.empty()) throw IndexError("symbolic index needs a name");
  IndexLabel l;
  l.name_ = std::move(name);
  l.variance_ = variance;
  return l;
}

std::string IndexLabel::to_string() const {
  std::string s = is_upper() ? "^" : "_";
  return s + (is_concrete() ? std::to_string(value_) : name_);
}

std::strong_ordering operator<=>(const IndexLabel& a, const IndexLabel& b) {
  // Concrete labels sort before symbolic ones.
  if (a.is_concrete() != b.is_concrete()) {
    return a.is_concrete() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_concrete()) {
    if (auto c = a.value_ <=> b.value_; c != 0) return c;
  } else {
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
  }
  return a.variance_ <=> b.variance_;
}

namespace {
FactorKind pair_kind(const IndexLabel& a, const IndexLabel& b) {
  return a.variance() == b.variance() ? FactorKind::Metric : FactorKind::Kronecker;
}
}  // namespace

TensorFactor TensorFactor::eta(IndexLabel a, IndexLabel b) {
  if (a.variance() != b.variance()) throw IndexError("eta needs two slots of equal variance");
  return {FactorKind::Metric, {std::move(a), std::move(b)}};
}

TensorFactor TensorFactor::delta(IndexLabel a, IndexLabel b) {
  if (a.variance() == b.variance()) throw IndexError("delta needs one upper and one lower slot");
  return {FactorKind::Kronecker, {std::move(a), std::move(b)}};
}

TensorFactor TensorFactor::epsilon(IndexLabel a, IndexLabel b, IndexLabel c, IndexLabel d) {
  return {FactorKind::Epsilon, {std::move(a), std::move(b), std::move(c), std::move(d)}};
}

TensorFactor TensorFactor::accel(IndexLabel a) { return {FactorKind::Accel, {std::move(a)}}; }

bool TensorFactor::is_concrete() const {
  return std::all_of(slots.begin(), slots.end(), [](const IndexLabel& l) { return l.is_concrete(); });
}

std::string TensorFactor::to_string() const {
  static constexpr const char* kNames[] = {"eta", "delta", "eps", "a"};
  std::string s = kNames[static_cast<int>(kind)];
  s += "(";
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) s += ",";
    s += slots[i].to_string();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const TensorFactor& a, const TensorFactor& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  return std::lexicographical_compare_three_way(a.slots.begin(), a.slots.end(), b.slots.begin(), b.slots.end());
}

std::string TensorMonomial::to_string() const {
  if (factors.empty()) return coeff.to_string();
  std::string s;
  if (coeff.is_one()) {
  } else if (coeff == Scalar(-1)) {
    s = "-";
  } else if (!coeff.is_real() && sgn(coeff.real()) != 0) {
    s = "(" + coeff.to_string() + ")*";
  } else {
    s = coeff.to_string() + "*";
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += factors[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Components

Scalar metric_component(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw IndexError("metric_component: index out of range");
  if (mu != nu) return Scalar(0);
  return Scalar(mu == 0 ? 1 : -1);
}

Scalar epsilon_component(const std::array<int, 4>& indices) {
  std::array<int, 4> p = indices;
  for (int v : p) {
    if (v < 0 || v > 3) throw IndexError("epsilon_component: index out of range");
  }
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return Scalar(0);
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return Scalar(sign);
}

// ---------------------------------------------------------------------------
// Canonicalization

namespace {

struct Slot {
  std::size_t factor;
  std::size_t slot;
  friend bool operator==(const Slot&, const Slot&) = default;
};

using Occurrences = std::map<std::string, std::vector<Slot>>;

Occurrences occurrences(const std::vector<TensorFactor>& fs) {
  Occurrences occ;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs[i].slots.size(); ++j) {
      const auto& l = fs[i].slots[j];
      if (!l.is_concrete()) occ[l.name()].push_back({i, j});
    }
  }
  return occ;
}

void validate(const TensorMonomial& m) {
  for (const auto& [name, where] : occurrences(m.factors)) {
    const bool too_many = where.size() > 2;
    const bool same_variance = where.size() == 2 &&
                               m.factors[where[0].factor].slots[where[0].slot].variance() ==
                                   m.factors[where[1].factor].slots[where[1].slot].variance();
    if (too_many || same_variance) {
      throw IndexError("malformed index pairing for '" + name + "' in monomial " + m.to_string());
    }
  }
}

bool has_symbolic(const TensorMonomial& m) {
  for (const auto& f : m.factors) {
    if (!f.is_concrete()) return true;
  }
  return false;
}

Scalar concrete_value(const TensorFactor& f) {
  switch (f.kind) {
    case FactorKind::Metric:
      return metric_component(f.slots[0].value(), f.slots[1].value());
    case FactorKind::Kronecker:
      return Scalar(f.slots[0].value() == f.slots[1].value() ? 1 : 0);
    case FactorKind::Epsilon: {
      Scalar v = epsilon_component({f.slots[0].value(), f.slots[1].value(), f.slots[2].value(), f.slots[3].value()});
      for (const auto& l : f.slots) {
        if (l.is_upper()) v *= metric_component(l.value(), l.value());
      }
      return v;
    }
    case FactorKind::Accel:
      break;
  }
  throw std::logic_error("concrete_value: acceleration has no numeric value");
}

bool epsilon_has_repeat(const TensorFactor& f) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto& a = f.slots[i];
      const auto& b = f.slots[j];
      if (a.is_concrete() != b.is_concrete()) continue;
      if (a.is_concrete() ? a.value() == b.value() : a.name() == b.name()) return true;
    }
  }
  return false;
}

constexpr std::array<std::array<int, 4>, 24> all_permutations() {
  std::array<std::array<int, 4>, 24> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  for (auto& slot : out) {
    slot = p;
    std::next_permutation(p.begin(), p.end());
  }
  return out;
}

int permutation_sign(const std::array<int, 4>& p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

TensorFactor pair_factor(IndexLabel a, IndexLabel b) {
  const FactorKind k = pair_kind(a, b);
  return {k, {std::move(a), std::move(b)}};
}

// Applies every value-changing rule; may split into several monomials when an
// epsilon pair is expanded.
void reduce(TensorMonomial m, std::vector<TensorMonomial>& out) {
  for (;;) {
    if (m.coeff.is_zero()) return;
    auto& fs = m.factors;

    for (std::size_t i = 0; i < fs.size();) {
      auto& f = fs[i];
      if (f.kind == FactorKind::Accel) {
        if (f.slots[0].is_concrete() && !f.slots[0].is_upper()) {
          const int k = f.slots[0].value();
          m.coeff *= metric_component(k, k);
          f.slots[0] = f.slots[0].with_variance(Variance::Upper);
        }
        ++i;
        continue;
      }
      if (f.kind != FactorKind::Epsilon) f.kind = pair_kind(f.slots[0], f.slots[1]);
      if (f.is_concrete()) {
        m.coeff *= concrete_value(f);
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
        if (m.coeff.is_zero()) return;
        continue;
      }
      if (f.kind == FactorKind::Epsilon && epsilon_has_repeat(f)) return;
      ++i;
    }

    bool changed = false;
    const auto occ = occurrences(fs);
    for (std::size_t i = 0; i < fs.size() && !changed; ++i) {
      if (fs[i].kind != FactorKind::Metric && fs[i].kind != FactorKind::Kronecker) continue;
      for (std::size_t s = 0; s < 2; ++s) {
        const auto& l = fs[i].slots[s];
        if (l.is_concrete()) continue;
        const auto& where = occ.at(l.name());
        if (where.size() != 2) continue;
        const Slot self{i, s};
        const Slot other = where[0] == self ? where[1] : where[0];
        if (other.factor == i) {
          m.coeff *= Scalar(4);
        } else {
          fs[other.factor].slots[other.slot] = fs[i].slots[1 - s];
        }
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;

    std::vector<std::size_t> eps;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].kind == FactorKind::Epsilon) eps.push_back(i);
    }
    if (eps.size() >= 2) {
      // eps_{a..} eps_{b..} = -det[g(a_i, b_j)] in Lorentzian signature.
      const TensorFactor e1 = fs[eps[0]];
      const TensorFactor e2 = fs[eps[1]];
      std::vector<TensorFactor> rest;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i != eps[0] && i != eps[1]) rest.push_back(fs[i]);
      }
      static constexpr auto kPerms = all_permutations();
      for (const auto& p : kPerms) {
        TensorMonomial t{m.coeff * Scalar(-permutation_sign(p)), rest};
        for (int i = 0; i < 4; ++i) t.factors.push_back(pair_factor(e1.slots[i], e2.slots[p[i]]));
        reduce(std::move(t), out);
      }
      return;
    }

    out.push_back(std::move(m));
    return;
  }
}

// Orders slots inside symmetric / antisymmetric factors. Returns the sign
// picked up, or 0 if the factor vanishes.
int normalize_slots(TensorFactor& f) {
  switch (f.kind) {
    case FactorKind::Metric:
      if (f.slots[1] < f.slots[0]) std::swap(f.slots[0], f.slots[1]);
      return 1;
    case FactorKind::Kronecker:
      if (!f.slots[0].is_upper()) std::swap(f.slots[0], f.slots[1]);
      return 1;
    case FactorKind::Epsilon: {
      int sign = 1;
      auto& s = f.slots;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j + 1 < 4 - i; ++j) {
          if (s[j + 1] < s[j]) {
            std::swap(s[j], s[j + 1]);
            sign = -sign;
          }
        }
      }
      return epsilon_has_repeat(f) ? 0 : sign;
    }
    case FactorKind::Accel:
      return 1;
  }
  return 1;
}

std::string bound_name(std::size_t k) { return "$" + std::to_string(k); }

// Canonical labelling of summed names: the lexicographically smallest
// normalized factor list over all renamings. nullopt if the monomial is zero.
std::optional<TensorMonomial> relabel(const TensorMonomial& m) {
  std::vector<std::string> bound;
  for (const auto& [name, where] : occurrences(m.factors)) {
    if (where.size() == 2) bound.push_back(name);
  }

  auto apply = [&](const std::vector<std::size_t>& perm, int& sign) {
    std::map<std::string, std::string> rename;
    for (std::size_t j = 0; j < bound.size(); ++j) rename[bound[j]] = bound_name(perm[j]);
    std::vector<TensorFactor> fs = m.factors;
    sign = 1;
    for (auto& f : fs) {
      for (auto& l : f.slots) {
        if (l.is_concrete()) continue;
        if (auto it = rename.find(l.name()); it != rename.end()) l = IndexLabel::symbol(it->second, l.variance());
      }
      sign *= normalize_slots(f);
    }
    std::sort(fs.begin(), fs.end());
    return fs;
  };

  std::vector<std::size_t> perm(bound.size());
  std::iota(perm.begin(), perm.end(), 0);
  int best_sign = 0;
  std::vector<TensorFactor> best = apply(perm, best_sign);
  if (best_sign == 0) return std::nullopt;

  // Beyond 8 summed pairs fall back to the identity labelling.
  if (bound.size() <= 8) {
    while (std::next_permutation(perm.begin(), perm.end())) {
      int sign = 0;
      auto fs = apply(perm, sign);
      if (sign == 0) return std::nullopt;
      if (fs < best) {
        best = std::move(fs);
        best_sign = sign;
      } else if (fs == best && sign != best_sign) {
        return std::nullopt;
      }
    }
  }
  TensorMonomial out{m.coeff, std::move(best)};
  if (best_sign < 0) out.coeff = -out.coeff;
  return out;
}

using TermMap = std::map<std::vector<TensorFactor>, Scalar>;

void accumulate(TermMap& acc, TensorMonomial&& t) {
  auto [it, inserted] = acc.try_emplace(std::move(t.factors), t.coeff);
  if (!inserted) {
    it->second += t.coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::vector<TensorMonomial> from_map(TermMap&& acc) {
  std::vector<TensorMonomial> out;
  out.reserve(acc.size());
  for (auto& [fs, c] : acc) {
    if (!c.is_zero()) out.push_back({c, fs});
  }
  return out;
}

void canonicalize_into(const TensorMonomial& m, TermMap& acc) {
  if (m.coeff.is_zero()) return;
  validate(m);
  std::vector<TensorMonomial> reduced;
  reduce(m, reduced);
  for (auto& r : reduced) {
    if (auto c = relabel(r)) accumulate(acc, std::move(*c));
  }
}

}  // namespace

IndexStatus index_status(const TensorMonomial& m, const IndexLabel& label) {
  if (label.is_concrete()) return IndexStatus::Concrete;
  std::size_t count = 0;
  for (const auto& f : m.factors) {
    for (const auto& l : f.slots) {
      if (!l.is_concrete() && l.name() == label.name()) ++count;
    }
  }
  return count >= 2 ? IndexStatus::Bound : IndexStatus::Free;
}

std::vector<std::string> free_indices(const TensorMonomial& m) {
  std::vector<std::string> out;
  for (const auto& [name, where] : occurrences(m.factors)) {
    if (where.size() == 1) out.push_back(name);
  }
  return out;
}

CoefficientExpr canonicalize(const CoefficientExpr& expr) {
  TermMap acc;
  for (const auto& t : expr.terms()) canonicalize_into(t, acc);
  return CoefficientExpr::unreduced(from_map(std::move(acc)));
}

// ---------------------------------------------------------------------------
// CoefficientExpr

CoefficientExpr::CoefficientExpr(Scalar s) {
  if (!s.is_zero()) terms_.push_back({std::move(s), {}});
}

CoefficientExpr CoefficientExpr::monomial(Scalar coeff, std::vector<TensorFactor> factors) {
  return canonicalize(unreduced({{std::move(coeff), std::move(factors)}}));
}

CoefficientExpr CoefficientExpr::unreduced(std::vector<TensorMonomial> terms) {
  CoefficientExpr e;
  e.terms_ = std::move(terms);
  return e;
}

bool CoefficientExpr::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].factors.empty()); }

Scalar CoefficientExpr::scalar_value() const {
  if (!is_scalar()) throw std::logic_error("CoefficientExpr::scalar_value: expression carries tensor factors: " + to_string());
  return terms_.empty() ? Scalar(0) : terms_[0].coeff;
}

CoefficientExpr CoefficientExpr::operator-() const {
  CoefficientExpr e = *this;
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

CoefficientExpr& CoefficientExpr::operator+=(const CoefficientExpr& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (&o == this) return *this *= Scalar(2);
  // Both sides canonical: merge the sorted term lists.
  std::vector<TensorMonomial> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->factors < b->factors)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->factors < a->factors) {
      out.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({std::move(c), std::move(a->factors)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

CoefficientExpr& CoefficientExpr::operator-=(const CoefficientExpr& o) { return *this += -o; }

CoefficientExpr& CoefficientExpr::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

namespace {
// Summed names of the right factor are moved out of the way of the left's.
TensorMonomial disjoint_bound(const TensorMonomial& m) {
  TensorMonomial out = m;
  std::map<std::string, int> counts;
  for (const auto& f : m.factors) {
    for (const auto& l : f.slots) {
      if (!l.is_concrete()) ++counts[l.name()];
    }
  }
  for (auto& f : out.factors) {
    for (auto& l : f.slots) {
      if (!l.is_concrete() && counts[l.name()] == 2) l = IndexLabel::symbol("$r" + l.name(), l.variance());
    }
  }
  return out;
}
}  // namespace

CoefficientExpr operator*(const CoefficientExpr& a, const CoefficientExpr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_scalar()) return b * a.terms_[0].coeff;
  if (b.is_scalar()) return a * b.terms_[0].coeff;
  TermMap acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      TensorMonomial t{x.coeff * y.coeff, x.factors};
      if (!has_symbolic(x) && !has_symbolic(y)) {
        t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
        std::sort(t.factors.begin(), t.factors.end());
        accumulate(acc, std::move(t));
        continue;
      }
      const TensorMonomial yr = disjoint_bound(y);
      t.factors.insert(t.factors.end(), yr.factors.begin(), yr.factors.end());
      canonicalize_into(t, acc);
    }
  }
  return CoefficientExpr::unreduced(from_map(std::move(acc)));
}

CoefficientExpr CoefficientExpr::specialize_accel(const std::array<Scalar, 4>& a_upper) const {
  CoefficientExpr out;
  for (const auto& t : terms_) {
    TensorMonomial r{t.coeff, {}};
    for (const auto& f : t.factors) {
      if (f.kind == FactorKind::Accel && f.slots[0].is_concrete()) {
        const int k = f.slots[0].value();
        r.coeff *= a_upper[static_cast<std::size_t>(k)];
        if (!f.slots[0].is_upper()) r.coeff *= metric_component(k, k);
      } else {
        r.factors.push_back(f);
      }
    }
    out += canonicalize(unreduced({std::move(r)}));
  }
  return out;
}

std::string CoefficientExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string t = terms_[i].to_string();
    if (i == 0) {
      s = t;
    } else if (!t.empty() && t[0] == '-') {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const CoefficientExpr& e) { return os << e.to_string(); }

}  // namespace confalg
