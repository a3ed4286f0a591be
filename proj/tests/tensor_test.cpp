#include <doctest.h>

#include <algorithm>
#include <random>

#include "confalg/tensor.hpp"

using namespace confalg;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

IndexLabel up(const char* n) { return IndexLabel::upper(n); }
IndexLabel lo(const char* n) { return IndexLabel::lower(n); }

// Upper-index epsilon from the lower one by raising all four slots.
Scalar epsilon_up(int a, int b, int c, int d) {
  return epsilon_component({a, b, c, d}) * metric_component(a, a) * metric_component(b, b) * metric_component(c, c) *
         metric_component(d, d);
}

}  // namespace

TEST_CASE("scalar field axioms on random Gaussian rationals") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("scalar canonical form and rendering") {
  CHECK(Scalar::rational(6, 4) == Scalar::rational(3, 2));
  CHECK(Scalar::rational(3, 2).to_string() == "3/2");
  CHECK((-Scalar::i()).to_string() == "-i");
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("metric and epsilon components") {
  CHECK(metric_component(0, 0) == Scalar(1));
  for (int j = 1; j < 4; ++j) CHECK(metric_component(j, j) == Scalar(-1));
  CHECK(metric_component(0, 1).is_zero());
  CHECK(epsilon_component({0, 1, 2, 3}) == Scalar(1));
  CHECK(epsilon_component({1, 0, 2, 3}) == Scalar(-1));
  CHECK(epsilon_component({0, 0, 2, 3}).is_zero());
  CHECK(epsilon_up(0, 1, 2, 3) == Scalar(-1));
}

TEST_CASE("full epsilon contraction matches the brute-force sum") {
  Scalar brute = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) brute += epsilon_up(a, b, c, d) * epsilon_component({a, b, c, d});
  CHECK(brute == Scalar(-24));

  const auto product = CoefficientExpr::factor(TensorFactor::epsilon(up("m"), up("n"), up("r"), up("s"))) *
                       CoefficientExpr::factor(TensorFactor::epsilon(lo("m"), lo("n"), lo("r"), lo("s")));
  CHECK(product == CoefficientExpr(brute));
}

TEST_CASE("partial epsilon contraction agrees with concrete components") {
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      Scalar brute = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) brute += epsilon_up(a, b, c, s) * epsilon_component({a, b, c, t});
      CHECK(brute == (s == t ? Scalar(-6) : Scalar(0)));
    }
  }
  const auto product = CoefficientExpr::factor(TensorFactor::epsilon(up("m"), up("n"), up("r"), up("s"))) *
                       CoefficientExpr::factor(TensorFactor::epsilon(lo("m"), lo("n"), lo("r"), lo("t")));
  CHECK(product == Scalar(-6) * canonicalize(CoefficientExpr::factor(TensorFactor::delta(up("s"), lo("t")))));
}

TEST_CASE("metric traces and Kronecker substitution") {
  CHECK(CoefficientExpr::factor(TensorFactor::eta(up("m"), up("n"))) *
            CoefficientExpr::factor(TensorFactor::eta(lo("m"), lo("n"))) ==
        CoefficientExpr(4));
  CHECK(canonicalize(CoefficientExpr::factor(TensorFactor::delta(up("m"), lo("m")))) == CoefficientExpr(4));
  const auto raised = CoefficientExpr::factor(TensorFactor::eta(up("m"), up("n"))) *
                      CoefficientExpr::factor(TensorFactor::accel(lo("n")));
  CHECK(raised == CoefficientExpr::factor(TensorFactor::accel(up("m"))));
}

TEST_CASE("concrete components evaluate and dummy names are canonical") {
  CHECK(canonicalize(CoefficientExpr::factor(TensorFactor::eta(IndexLabel::concrete(2), IndexLabel::concrete(2)))) ==
        CoefficientExpr(-1));
  const auto a = CoefficientExpr::factor(TensorFactor::accel(up("x"))) *
                 CoefficientExpr::factor(TensorFactor::accel(lo("x")));
  const auto b = CoefficientExpr::factor(TensorFactor::accel(up("y"))) *
                 CoefficientExpr::factor(TensorFactor::accel(lo("y")));
  CHECK(a == b);
  CHECK((a - b).is_zero());
}

TEST_CASE("malformed index structure is rejected") {
  const auto bad = CoefficientExpr::unreduced(
      {TensorMonomial{Scalar(1), {TensorFactor::accel(up("m")), TensorFactor::accel(lo("m")), TensorFactor::accel(up("m"))}}});
  CHECK_THROWS_AS(canonicalize(bad), IndexError);
}

namespace {

/// Component of a factor at concrete indices: the all-lower tensor (metric
/// or epsilon) times one metric sign per raised slot.
Scalar factor_component(const TensorFactor& f, const std::vector<int>& idx) {
  Scalar v = f.kind == FactorKind::Epsilon ? epsilon_component({idx[0], idx[1], idx[2], idx[3]})
                                           : metric_component(idx[0], idx[1]);
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (f.slots[s].is_upper()) v *= metric_component(idx[s], idx[s]);
  }
  return v;
}

struct RandomMonomial {
  TensorMonomial monomial;
  std::vector<std::string> bound;
};

/// Random product of metric, Kronecker and epsilon factors; slots are paired
/// into summed names (one upper, one lower) except `free_slots` left free.
RandomMonomial random_monomial(std::mt19937_64& rng, int free_slots) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<TensorFactor> factors;
  int slots = 0;
  for (;;) {
    factors.clear();
    slots = 0;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      const int kd = kind(rng);
      const int width = kd == 2 ? 4 : 2;
      TensorFactor f;
      f.kind = kd == 0 ? FactorKind::Metric : kd == 1 ? FactorKind::Kronecker : FactorKind::Epsilon;
      f.slots.assign(static_cast<std::size_t>(width), IndexLabel::concrete(0));
      factors.push_back(f);
      slots += width;
    }
    if ((slots - free_slots) % 2 == 0 && slots >= free_slots) break;
  }
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (std::size_t s = 0; s < factors[f].slots.size(); ++s) positions.emplace_back(f, s);
  std::shuffle(positions.begin(), positions.end(), rng);
  RandomMonomial out;
  std::bernoulli_distribution flip(0.5);
  std::size_t p = 0;
  for (int k = 0; k < free_slots; ++k, ++p) {
    const std::string name = "f" + std::to_string(k);
    factors[positions[p].first].slots[positions[p].second] =
        IndexLabel::symbol(name, flip(rng) ? Variance::Upper : Variance::Lower);
  }
  for (int k = 0; p < positions.size(); ++k, p += 2) {
    const std::string name = "b" + std::to_string(k);
    const bool upper_first = flip(rng);
    factors[positions[p].first].slots[positions[p].second] =
        IndexLabel::symbol(name, upper_first ? Variance::Upper : Variance::Lower);
    factors[positions[p + 1].first].slots[positions[p + 1].second] =
        IndexLabel::symbol(name, upper_first ? Variance::Lower : Variance::Upper);
    out.bound.push_back(name);
  }
  // Kronecker factors are mixed-variance by construction; keep the draw honest.
  for (auto& f : factors) {
    if (f.kind == FactorKind::Kronecker && f.slots[0].is_upper() == f.slots[1].is_upper()) f.kind = FactorKind::Metric;
  }
  std::uniform_int_distribution<long> coeff(-4, 4);
  const long c = coeff(rng);
  out.monomial = TensorMonomial{Scalar(c == 0 ? 1 : c), std::move(factors)};
  return out;
}

Scalar brute_force(const RandomMonomial& r) {
  const std::size_t n = r.bound.size();
  std::vector<int> values(n, 0);
  Scalar total = 0;
  for (;;) {
    Scalar term = r.monomial.coeff;
    for (const auto& f : r.monomial.factors) {
      std::vector<int> idx;
      for (const auto& slot : f.slots) {
        const auto it = std::find(r.bound.begin(), r.bound.end(), slot.name());
        idx.push_back(values[static_cast<std::size_t>(it - r.bound.begin())]);
      }
      term *= factor_component(f, idx);
    }
    total += term;
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (++values[k] < 4) break;
      values[k] = 0;
    }
    if (k == n) return total;
  }
}

}  // namespace

TEST_CASE("fully contracted random expressions agree with brute-force summation") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const RandomMonomial r = random_monomial(rng, 0);
    INFO(r.monomial.to_string());
    const CoefficientExpr c = canonicalize(CoefficientExpr::unreduced({r.monomial}));
    REQUIRE(c.is_scalar());
    CHECK(c.scalar_value() == brute_force(r));
  }
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    std::vector<TensorMonomial> terms;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < n; ++t) {
      RandomMonomial r = random_monomial(rng, 2);
      if (rng() % 2 == 0) r.monomial.factors.push_back(TensorFactor::accel(IndexLabel::concrete(static_cast<int>(rng() % 4), Variance::Upper)));
      terms.push_back(std::move(r.monomial));
    }
    const CoefficientExpr once = canonicalize(CoefficientExpr::unreduced(terms));
    CHECK(canonicalize(once) == once);
  }
}
