#include "confalg/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "confalg/identities.hpp"

namespace confalg {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

// ---------------------------------------------------------------------------
// Environment

struct CheckEnvironment::State {
  std::optional<WordAlgebra> algebra;
  std::optional<ObservableCatalog> observables;
  std::optional<MatrixRep> matrix;
  std::unique_ptr<Realization> realization;
  std::unique_ptr<Realization> one_particle;
  std::optional<OperatorCatalog> operators;
};

CheckEnvironment::CheckEnvironment(const RunOptions& options)
    : options_(options), state_(std::make_unique<State>()) {}

CheckEnvironment::~CheckEnvironment() = default;

const StructureTable& CheckEnvironment::table() const {
  return options_.table ? *options_.table : conformal_table();
}

WordAlgebra& CheckEnvironment::algebra() {
  if (!state_->algebra) state_->algebra.emplace(table());
  return *state_->algebra;
}

ObservableCatalog& CheckEnvironment::observables() {
  if (!state_->observables) state_->observables.emplace(WordBackend{&algebra()});
  return *state_->observables;
}

const MatrixRep& CheckEnvironment::matrix_rep() {
  if (!state_->matrix) state_->matrix = build_matrix_rep(table());
  return *state_->matrix;
}

Realization& CheckEnvironment::realization() {
  if (!state_->realization) state_->realization = std::make_unique<Realization>(options_.particles);
  return *state_->realization;
}

Realization& CheckEnvironment::one_particle() {
  if (!state_->one_particle) state_->one_particle = std::make_unique<Realization>(1);
  return *state_->one_particle;
}

OperatorCatalog& CheckEnvironment::operators() {
  if (!state_->operators) state_->operators.emplace(OperatorBackend{&realization()});
  return *state_->operators;
}

std::mt19937_64 CheckEnvironment::rng(std::string_view salt) const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : salt) h = (h ^ c) * 1099511628211ull;
  return std::mt19937_64(options_.seed ^ h);
}

// ---------------------------------------------------------------------------
// Outcome helpers

namespace {

constexpr std::size_t kMaxResidualText = 4000;
constexpr int kMaxRenderedResiduals = 3;

std::size_t term_count(const NCPolynomial& p) { return p.size(); }
std::size_t term_count(const DiffOperator& d) { return d.terms().size(); }
std::size_t term_count(const AlgebraElement& a) { return a.terms().size(); }
std::size_t term_count(const Matrix6& m) {
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](const Scalar& x) { return !x.is_zero(); }));
}

std::string render(const NCPolynomial& p) { return p.to_string(); }
std::string render(const DiffOperator& d) { return d.to_string(); }
std::string render(const AlgebraElement& a) { return a.to_string(); }
std::string render(const Matrix6& m) { return to_string(m); }

class OutcomeBuilder {
 public:
  template <class V>
  void add(const std::string& label, const V& value) {
    const std::size_t n = term_count(value);
    if (n == 0) return;
    note(label, n, render(value));
  }

  void note(const std::string& label, std::size_t terms, const std::string& text) {
    out_.residual_terms += terms;
    ++rendered_;
    if (rendered_ > kMaxRenderedResiduals) return;
    if (!out_.residual_text.empty()) out_.residual_text += "; ";
    out_.residual_text += label + " = " + text;
  }

  template <class V>
  void add_all(const std::vector<BasicResidual<V>>& rs, const std::string& suffix = "") {
    for (const auto& r : rs) add(r.label + suffix, r.value);
  }

  CheckOutcome finish() {
    if (rendered_ > kMaxRenderedResiduals) {
      out_.residual_text +=
          "; (" + std::to_string(rendered_ - kMaxRenderedResiduals) + " more nonzero residuals)";
    }
    if (out_.residual_text.size() > kMaxResidualText) {
      out_.residual_text.resize(kMaxResidualText);
      out_.residual_text += " ...";
    }
    return std::move(out_);
  }

 private:
  CheckOutcome out_;
  int rendered_ = 0;
};

template <class V>
CheckOutcome outcome(const std::vector<BasicResidual<V>>& rs) {
  OutcomeBuilder b;
  b.add_all(rs);
  return b.finish();
}

template <class F>
CheckOutcome per_direction(CheckEnvironment& env, F check) {
  OutcomeBuilder b;
  for (int d = 0; d < 4; ++d) {
    auto cat = env.operators().with_accel(unit_direction(d));
    b.add_all(check(cat), " [a = e" + std::to_string(d) + "]");
  }
  return b.finish();
}

std::string pair_name(Generator a, Generator b) { return a.name() + "." + b.name(); }

// ---------------------------------------------------------------------------
// Catalog construction

struct Tags {
  static constexpr const char* kAlgebra = "conformal-algebra";
  static constexpr const char* kCalculus = "nc-calculus";
  static constexpr const char* kRealizations = "realizations";
};

const std::string kRefEq3 = "Eq. (3): \"we will often use the Jacobi identity\"";
const std::string kRefEq4 = "Eq. (4): \"the generators obey the following commutation relations\"";
const std::string kRefEq5 = "Eq. (5): \"we write its shifts under different frame transformations\"";
const std::string kRefEq6 = "Eq. (6): \"(Delta,M) = a^mu M.X_mu\"";
const std::string kRefEq7Canonical = "Eq. (7): \"(P_mu,X_nu) = -eta_{mu nu}\"";
const std::string kRefEq7Dilatation = "Eq. (7): \"(D,X_mu) = -X_mu\"";
const std::string kRefEq7Lorentz = "Eq. (7): \"(J_{mu nu},X_rho) = eta_{nu rho} X_mu - eta_{mu rho} X_nu\"";
const std::string kRefEq9Line1 = "Eq. (9): \"(M.X_mu, M.X_nu) = J_{mu nu}\"";
const std::string kRefEq9Line1Mass = "Eq. (9): \"1/4 ((C_mu,M),(C_nu,M)) = J_{mu nu}\"";
const std::string kRefEq9Line2 = "Eq. (9): \"M^2.(X_mu,X_nu) = ... = S_{mu nu}\"";
const std::string kRefEq10Orth = "Eq. (10): \"contributions are orthogonal to energy-momentum\"";
const std::string kRefEq10Rec = "Eq. (10): \"S_{mu nu} = eps_{mu nu rho sigma} S^rho P^sigma/M\"";
const std::string kRefEq11D = "Eq. (11): \"D = P_rho.X^rho\"";
const std::string kRefEq11 = "Eq. (11): \"redshift of energy-momentum under the frame transformation\"";
const std::string kRefEq12 = "Eq. (12): \"Jacobi identity leads to the following relation\"";
const std::string kRefEq13 = "Eq. (13): \"a classical form which is not affected by spin\"";
const std::string kRefEq1 = "Eq. (1): \"mass equal to its energy\"";

void add_algebra_checks(std::vector<CheckDescriptor>& out) {
  const auto& basis = Generator::basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Generator a = basis[i];
      const Generator b = basis[j];
      out.push_back({"eq4.pair." + pair_name(a, b), kRefEq4, Tags::kAlgebra, "algebra", "concrete indices",
                     [a, b](CheckEnvironment& env) {
                       OutcomeBuilder o;
                       o.add("(" + a.name() + "," + b.name() + ") - reference",
                             env.table()(a, b) - reference_bracket(a, b));
                       return o.finish();
                     }});
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      for (std::size_t k = j + 1; k < basis.size(); ++k) {
        const Generator a = basis[i];
        const Generator b = basis[j];
        const Generator c = basis[k];
        out.push_back({"eq3.jacobi." + pair_name(a, b) + "." + c.name(), kRefEq3, Tags::kAlgebra, "algebra",
                       "distinct triple", [a, b, c](CheckEnvironment& env) {
                         OutcomeBuilder o;
                         o.add("jacobi(" + a.name() + "," + b.name() + "," + c.name() + ")",
                               jacobi_residual(a, b, c, env.table()));
                         return o.finish();
                       }});
      }
    }
  }
  out.push_back({"algebra.jacobi-degenerate", kRefEq3, Tags::kAlgebra, "algebra", "225 triples with a repeat",
                 [](CheckEnvironment& env) {
                   OutcomeBuilder o;
                   for (const auto& e : enumerate_jacobi(env.table())) {
                     if (!e.degenerate) continue;
                     o.add("jacobi(" + e.triple[0].name() + "," + e.triple[1].name() + "," + e.triple[2].name() + ")",
                           e.residual);
                   }
                   return o.finish();
                 }});
  out.push_back({"algebra.antisymmetry", kRefEq4, Tags::kAlgebra, "algebra", "all ordered pairs",
                 [](CheckEnvironment& env) {
                   OutcomeBuilder o;
                   for (Generator a : Generator::basis()) {
                     for (Generator b : Generator::basis()) {
                       o.add("(" + a.name() + "," + b.name() + ") + (" + b.name() + "," + a.name() + ")",
                             env.table()(a, b) + env.table()(b, a));
                     }
                   }
                   return o.finish();
                 }});
  out.push_back({"algebra.weights", kRefEq4, Tags::kAlgebra, "algebra", "all generators", [](CheckEnvironment& env) {
                   OutcomeBuilder o;
                   for (Generator g : Generator::basis()) {
                     o.add("(D," + g.name() + ") - w " + g.name(),
                           env.table()(Generator::D(), g) -
                               CoefficientExpr(static_cast<long>(g.conformal_weight())) * AlgebraElement(g));
                   }
                   return o.finish();
                 }});
}

template <class F>
void add_identity(std::vector<CheckDescriptor>& out, const std::string& id, const std::string& ref,
                  const std::string& params, F check) {
  out.push_back({id, ref, Tags::kCalculus, "identities", params,
                 [check](CheckEnvironment& env) { return outcome(check(env.observables())); }});
}

/// Random-input property check over the word algebra.
template <class F>
void add_property(std::vector<CheckDescriptor>& out, const std::string& id, const std::string& ref,
                  const std::string& params, F check) {
  out.push_back({id, ref, Tags::kCalculus, "identities", params + "; seeded",
                 [id, check](CheckEnvironment& env) {
                   auto rng = env.rng(id);
                   OutcomeBuilder o;
                   check(env.algebra(), rng, o);
                   return o.finish();
                 }});
}

void add_identity_checks(std::vector<CheckDescriptor>& out) {
  const std::string all = "mu,nu,rho in 0..3";
  add_identity(out, "eq5.mass-shifts", kRefEq5, all, [](auto& c) { return check_mass_shifts(c); });
  add_identity(out, "eq5.mpower-consistency", kRefEq5, all, [](auto& c) { return check_mpower_consistency(c); });
  add_identity(out, "eq6.accel-mass-shift", kRefEq6, "formal a^mu", [](auto& c) { return check_accel_mass_shift(c); });
  add_identity(out, "eq7.canonical-commutator", kRefEq7Canonical, all,
               [](auto& c) { return check_canonical_commutators(c); });
  add_identity(out, "eq7.dilatation", kRefEq7Dilatation, all, [](auto& c) { return check_position_dilatation(c); });
  add_identity(out, "eq7.lorentz", kRefEq7Lorentz, all, [](auto& c) { return check_position_lorentz(c); });
  add_identity(out, "eq9.line1", kRefEq9Line1, all, [](auto& c) { return check_position_commutators_first(c); });
  add_identity(out, "eq9.line1-mass-shift", kRefEq9Line1Mass, all,
               [](auto& c) { return check_position_commutators_mass_shift(c); });
  add_identity(out, "eq9.line2", kRefEq9Line2, all, [](auto& c) { return check_position_commutators_second(c); });
  add_identity(out, "eq10.orthogonality", kRefEq10Orth, all,
               [](auto& c) { return check_pauli_lubanski_orthogonality(c); });
  add_identity(out, "eq10.reconstruction", kRefEq10Rec, all,
               [](auto& c) { return check_pauli_lubanski_reconstruction(c); });
  add_identity(out, "eq11.dilatation-decomposition", kRefEq11D, all,
               [](auto& c) { return check_dilatation_decomposition(c); });
  add_identity(out, "eq11.redshift", kRefEq11, "formal a^mu", [](auto& c) { return check_redshift(c); });
  add_identity(out, "eq11.redshift-e3", kRefEq11, "a = e3", [](auto& c) {
    auto d = c.with_accel(unit_direction(3));
    return check_redshift(d);
  });
  add_identity(out, "eq12.jacobi-route", kRefEq12, "formal a^mu",
               [](auto& c) { return check_double_commutators_jacobi(c); });
  add_identity(out, "eq12.direct", kRefEq12, "formal a^mu", [](auto& c) { return check_double_commutators_direct(c); });
  add_identity(out, "eq13.covariance", kRefEq13, "formal a^mu", [](auto& c) { return check_covariance_rules(c); });

  add_property(out, "nc.idempotence", kRefEq4, "200 random polynomials",
               [](WordAlgebra& alg, std::mt19937_64& rng, OutcomeBuilder& o) {
                 for (int k = 0; k < 200; ++k) {
                   const NCPolynomial nf = alg.normal_form(random_polynomial(rng, 3, 4));
                   o.add("sample " + std::to_string(k), alg.normal_form(nf) - nf);
                 }
               });
  add_property(out, "nc.confluence", kRefEq4, "1000 random polynomials, random rewrite order",
               [](WordAlgebra& alg, std::mt19937_64& rng, OutcomeBuilder& o) {
                 for (int k = 0; k < 1000; ++k) {
                   const NCPolynomial p = random_polynomial(rng, 3, 3);
                   RewriteOptions random_order{RewriteStrategy::Random, rng(), RewriteOptions{}.step_budget};
                   o.add("sample " + std::to_string(k), alg.normal_form(p, random_order) - alg.normal_form(p));
                 }
               });
  add_property(out, "nc.leibniz", kRefEq3, "40 random triples",
               [](WordAlgebra& alg, std::mt19937_64& rng, OutcomeBuilder& o) {
                 for (int k = 0; k < 40; ++k) {
                   const NCPolynomial a = alg.normal_form(random_polynomial(rng, 2, 2));
                   const NCPolynomial b = alg.normal_form(random_polynomial(rng, 2, 2));
                   const NCPolynomial c = alg.normal_form(random_polynomial(rng, 2, 2));
                   o.add("sample " + std::to_string(k), alg.bracket(a, alg.multiply(b, c)) -
                                                            alg.multiply(alg.bracket(a, b), c) -
                                                            alg.multiply(b, alg.bracket(a, c)));
                 }
               });
  add_property(out, "nc.jacobi", kRefEq3, "40 random triples",
               [](WordAlgebra& alg, std::mt19937_64& rng, OutcomeBuilder& o) {
                 for (int k = 0; k < 40; ++k) {
                   const NCPolynomial a = alg.normal_form(random_polynomial(rng, 2, 2));
                   const NCPolynomial b = alg.normal_form(random_polynomial(rng, 2, 2));
                   const NCPolynomial c = alg.normal_form(random_polynomial(rng, 2, 2));
                   o.add("sample " + std::to_string(k), alg.bracket(alg.bracket(a, b), c) -
                                                            alg.bracket(a, alg.bracket(b, c)) +
                                                            alg.bracket(b, alg.bracket(a, c)));
                 }
               });
  add_property(out, "nc.grading", kRefEq4, "300 random words",
               [](WordAlgebra& alg, std::mt19937_64& rng, OutcomeBuilder& o) {
                 const NCPolynomial d(Generator::D());
                 for (int k = 0; k < 300; ++k) {
                   const NCPolynomial p = random_polynomial(rng, 1, 4);
                   if (p.size() == 0) continue;
                   const int weight = conformal_weight(p.terms().begin()->first);
                   const NCPolynomial nf = alg.normal_form(p);
                   NCPolynomial off;
                   for (const auto& [w, c] : nf.terms()) {
                     if (conformal_weight(w) != weight) off.add_term(w, c);
                   }
                   const std::string label = "sample " + std::to_string(k) + " weight " + std::to_string(weight);
                   o.add(label + " off-weight terms", off);
                   o.add(label + " (D,w) - weight w",
                         alg.bracket(d, nf) - alg.multiply(NCPolynomial(CoefficientExpr(static_cast<long>(weight))), nf));
                 }
               });
}

void add_matrix_checks(std::vector<CheckDescriptor>& out) {
  out.push_back({"matrix.solve", kRefEq4, Tags::kRealizations, "matrix", "alpha = beta = 1",
                 [](CheckEnvironment& env) {
                   env.matrix_rep();
                   return CheckOutcome{};
                 }});
  const auto& basis = Generator::basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Generator a = basis[i];
      const Generator b = basis[j];
      out.push_back({"matrix.pair." + pair_name(a, b), kRefEq4, Tags::kRealizations, "matrix", "6x6 exact",
                     [a, b](CheckEnvironment& env) {
                       const MatrixRep& rep = env.matrix_rep();
                       OutcomeBuilder o;
                       o.add("[" + a.name() + "," + b.name() + "] - image",
                             commutator(rep(a), rep(b)) - rep.image(env.table()(a, b)));
                       return o.finish();
                     }});
    }
  }
  out.push_back({"matrix.g-antisymmetry", kRefEq4, Tags::kRealizations, "matrix", "all generators",
                 [](CheckEnvironment& env) {
                   OutcomeBuilder o;
                   for (const auto& [g, m] : metric_antisymmetry_residuals(env.matrix_rep())) {
                     o.add(g.name() + "^T G + G " + g.name(), m);
                   }
                   return o.finish();
                 }});
}

template <class F>
void add_realized(std::vector<CheckDescriptor>& out, const std::string& id, const std::string& ref, F check) {
  out.push_back({id, ref, Tags::kRealizations, "realization", "particles = N",
                 [check](CheckEnvironment& env) { return outcome(check(env.operators())); }});
}

template <class F>
void add_realized_directions(std::vector<CheckDescriptor>& out, const std::string& id, const std::string& ref,
                             F check) {
  out.push_back({id, ref, Tags::kRealizations, "realization", "particles = N; a = e0..e3",
                 [check](CheckEnvironment& env) { return per_direction(env, check); }});
}

CheckOutcome closure_outcome(const Realization& r, const StructureTable& table) {
  OutcomeBuilder o;
  for (const auto& p : verify_realization_pairs(r, table)) {
    o.add("(" + p.a.name() + "," + p.b.name() + ") - image", p.residual);
  }
  return o.finish();
}

void add_realization_checks(std::vector<CheckDescriptor>& out) {
  out.push_back({"realization.one-particle-solve", kRefEq4, Tags::kRealizations, "realization",
                 "scalar ansatz, boost constant 0", [](CheckEnvironment&) {
                   one_particle_solution();
                   return CheckOutcome{};
                 }});
  out.push_back({"realization.closure.n1", kRefEq4, Tags::kRealizations, "realization", "particles = 1",
                 [](CheckEnvironment& env) { return closure_outcome(env.one_particle(), env.table()); }});
  out.push_back({"realization.closure", kRefEq4, Tags::kRealizations, "realization", "particles = N",
                 [](CheckEnvironment& env) { return closure_outcome(env.realization(), env.table()); }});

  add_realized(out, "realization.eq5.mass-shifts", kRefEq5, [](auto& c) { return check_mass_shifts(c); });
  add_realized(out, "realization.eq5.mpower-consistency", kRefEq5,
               [](auto& c) { return check_mpower_consistency(c); });
  add_realized_directions(out, "realization.eq6.accel-mass-shift", kRefEq6,
                          [](auto& c) { return check_accel_mass_shift(c); });
  add_realized(out, "realization.eq7.canonical-commutator", kRefEq7Canonical,
               [](auto& c) { return check_canonical_commutators(c); });
  add_realized(out, "realization.eq7.dilatation", kRefEq7Dilatation,
               [](auto& c) { return check_position_dilatation(c); });
  add_realized(out, "realization.eq7.lorentz", kRefEq7Lorentz, [](auto& c) { return check_position_lorentz(c); });
  add_realized(out, "realization.eq9.line1", kRefEq9Line1,
               [](auto& c) { return check_position_commutators_first(c); });
  add_realized(out, "realization.eq9.line1-mass-shift", kRefEq9Line1Mass,
               [](auto& c) { return check_position_commutators_mass_shift(c); });
  add_realized(out, "realization.eq9.line2", kRefEq9Line2,
               [](auto& c) { return check_position_commutators_second(c); });
  add_realized(out, "realization.eq10.orthogonality", kRefEq10Orth,
               [](auto& c) { return check_pauli_lubanski_orthogonality(c); });
  add_realized(out, "realization.eq10.reconstruction", kRefEq10Rec,
               [](auto& c) { return check_pauli_lubanski_reconstruction(c); });
  add_realized(out, "realization.eq11.dilatation-decomposition", kRefEq11D,
               [](auto& c) { return check_dilatation_decomposition(c); });
  add_realized_directions(out, "realization.eq11.redshift", kRefEq11, [](auto& c) { return check_redshift(c); });
  add_realized_directions(out, "realization.eq12.jacobi-route", kRefEq12,
                          [](auto& c) { return check_double_commutators_jacobi(c); });
  add_realized_directions(out, "realization.eq12.direct", kRefEq12,
                          [](auto& c) { return check_double_commutators_direct(c); });
  add_realized_directions(out, "realization.eq13.covariance", kRefEq13,
                          [](auto& c) { return check_covariance_rules(c); });

  out.push_back({"realization.spin-nonzero", kRefEq9Line2, Tags::kRealizations, "realization", "particles = N",
                 [](CheckEnvironment& env) {
                   CheckOutcome o;
                   if (env.operators().spin_tensor(1, 2).is_zero()) {
                     o.residual_terms = 1;
                     o.residual_text = "S12 realizes to the zero operator";
                   }
                   return o;
                 }});

  out.push_back({"realization.points.eq7", kRefEq7Canonical, Tags::kRealizations, "realization",
                 "particles = N; 100 random points; seeded", [](CheckEnvironment& env) {
                   auto& cat = env.operators();
                   const RingContext& ring = env.realization().ring();
                   std::vector<DiffOperator> ops;
                   for (int mu = 0; mu < 4; ++mu) {
                     for (int nu = 0; nu < 4; ++nu) ops.push_back(cat.bracket(cat.momentum(mu), cat.position(nu)));
                   }
                   auto rng = env.rng("realization.points.eq7");
                   OutcomeBuilder o;
                   for (int k = 0; k < 100; ++k) {
                     const MomentumPoint pt = random_momentum_point(ring, rng);
                     RingElement f = random_test_function(ring, rng);
                     while (f.evaluate(pt).is_zero()) f = random_test_function(ring, rng);
                     const Scalar fv = f.evaluate(pt);
                     for (int mu = 0; mu < 4; ++mu) {
                       for (int nu = 0; nu < 4; ++nu) {
                         const Scalar bracket_value = evaluate_at_point(ops[static_cast<std::size_t>(mu * 4 + nu)], f, pt) / fv;
                         const Scalar expected = -metric_component(mu, nu);
                         if (bracket_value != expected) {
                           o.note("point " + std::to_string(k) + " (P" + std::to_string(mu) + ",X" + std::to_string(nu) + ")",
                                  1, bracket_value.to_string() + " expected " + expected.to_string());
                         }
                       }
                     }
                   }
                   return o.finish();
                 }});

  out.push_back({"realization.two-photon-mass", kRefEq1, Tags::kRealizations, "realization",
                 "particles = 2; k1 = (0,0,1), k2 = (0,0,-1)", [](CheckEnvironment&) {
                   Realization two(2);
                   OperatorCatalog cat(OperatorBackend{&two});
                   const MomentumPoint pt = counterpropagating_point(1);
                   const RingElement one(two.ring(), Scalar(1));
                   OutcomeBuilder o;
                   auto expect = [&](const std::string& label, const DiffOperator& op, const Scalar& want) {
                     const Scalar got = evaluate_at_point(op, one, pt);
                     if (got != want) o.note(label, 1, got.to_string() + " expected " + want.to_string());
                   };
                   expect("M^2", cat.mass_squared_from_momenta(), 4);
                   expect("M^2 letter", cat.mass_power(2), 4);
                   expect("M", cat.mass_power(1), 2);
                   expect("P0", cat.momentum(0), 2);
                   for (int j = 1; j <= 3; ++j) expect("P" + std::to_string(j), cat.momentum(j), 0);
                   return o.finish();
                 }});

  out.push_back({"realization.homomorphism", kRefEq4, Tags::kRealizations, "realization",
                 "particles = N; 10 random pairs; seeded", [](CheckEnvironment& env) {
                   auto rng = env.rng("realization.homomorphism");
                   WordAlgebra& alg = env.algebra();
                   Realization& r = env.realization();
                   OutcomeBuilder o;
                   for (int k = 0; k < 10; ++k) {
                     const NCPolynomial p = random_polynomial(rng, 2, 2);
                     const NCPolynomial q = random_polynomial(rng, 2, 2);
                     o.add("sample " + std::to_string(k), r.realize(alg.multiply(p, q)) - r.realize(p) * r.realize(q));
                   }
                   return o.finish();
                 }});

  out.push_back({"realization.abstract-agreement", kRefEq7Canonical, Tags::kRealizations, "realization",
                 "particles = N", [](CheckEnvironment& env) {
                   auto& nc = env.observables();
                   auto& op = env.operators();
                   Realization& r = env.realization();
                   OutcomeBuilder o;
                   for (int mu = 0; mu < 4; ++mu) {
                     o.add("realize(X" + std::to_string(mu) + ") - X" + std::to_string(mu),
                           r.realize(nc.position(mu)) - op.position(mu));
                   }
                   o.add("realize(S12) - S12", r.realize(nc.spin_tensor(1, 2)) - op.spin_tensor(1, 2));
                   o.add("realize((P0,X0)) + 1",
                         r.realize(nc.bracket(nc.momentum(0), nc.position(0))) + r.constant(1));
                   o.add("realize(D - P_r.X^r)",
                         r.realize(nc.generator(Generator::D()) - nc.dilatation_from_position()));
                   o.add("realize(M^-2) - 1/s",
                         r.realize(nc.mass_power(-2)) -
                             DiffOperator(RingElement(r.ring(), Polynomial(1), RingElement::OmegaExponents{}, 1)));
                   return o.finish();
                 }});
}

std::vector<CheckDescriptor> build_catalog() {
  std::vector<CheckDescriptor> out;
  add_algebra_checks(out);
  add_identity_checks(out);
  add_matrix_checks(out);
  add_realization_checks(out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<CheckDescriptor>& check_catalog() {
  static const std::vector<CheckDescriptor> catalog = build_catalog();
  return catalog;
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{"all", "algebra", "identities", "matrix", "realization"};
  return groups;
}

std::vector<const CheckDescriptor*> select_checks(const std::vector<std::string>& selection) {
  const auto& catalog = check_catalog();
  if (selection.empty()) throw UsageError("no checks selected");
  std::set<std::string> chosen;
  for (const std::string& raw : selection) {
    const std::string token = raw == "jacobi" ? "eq3.jacobi" : raw;
    bool matched = false;
    for (const auto& c : catalog) {
      const bool hit = token == "all" || c.group == token || c.id == token ||
                       (c.id.size() > token.size() && c.id.compare(0, token.size(), token) == 0 &&
                        c.id[token.size()] == '.');
      if (hit) {
        chosen.insert(c.id);
        matched = true;
      }
    }
    if (!matched) throw UsageError("unknown check or group: " + raw);
  }
  std::vector<const CheckDescriptor*> out;
  for (const auto& c : catalog) {
    if (chosen.contains(c.id)) out.push_back(&c);
  }
  return out;
}

Report run_checks(const std::vector<const CheckDescriptor*>& checks, const RunOptions& options) {
  if (options.particles < 2 || options.particles > RingContext::kMaxParticles) {
    throw UsageError("particle count must be between 2 and " + std::to_string(RingContext::kMaxParticles));
  }
  if (options.jobs < 1) throw UsageError("jobs must be at least 1");

  Report report;
  report.options = options;
  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    CheckEnvironment env(options);
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const CheckDescriptor& d = *checks[i];
      CheckResult& r = report.checks[i];
      r.id = d.id;
      r.paper_ref = d.paper_ref;
      const auto start = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = d.run(env);
        r.residual_terms = o.residual_terms;
        r.residual_text = std::move(o.residual_text);
        r.status = o.residual_terms == 0 ? CheckStatus::Pass : CheckStatus::Fail;
      } catch (const std::exception& e) {
        r.status = CheckStatus::Error;
        r.residual_text = e.what();
      }
      r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(options.jobs), checks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& r : report.checks) {
    switch (r.status) {
      case CheckStatus::Pass: ++report.pass; break;
      case CheckStatus::Fail: ++report.fail; break;
      case CheckStatus::Error: ++report.error; break;
    }
  }
  return report;
}

Report run(const std::vector<std::string>& selection, const RunOptions& options) {
  return run_checks(select_checks(selection), options);
}

}  // namespace confalg
