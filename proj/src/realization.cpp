#include "confalg/realization.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace confalg {

namespace {

Scalar scalar_coefficient(const CoefficientExpr& c) {
  if (!c.is_scalar()) throw std::invalid_argument("realization needs scalar coefficients: " + c.to_string());
  return c.scalar_value();
}

DiffOperator image_of(const GeneratorImages& images, const AlgebraElement& a, const DiffOperator& zero) {
  DiffOperator out = zero;
  for (const auto& [g, c] : a.terms()) out += scalar_coefficient(c) * images[static_cast<std::size_t>(g.id())];
  return out;
}

enum Constant { kDilatation = 0, kBoost = 1, kEnergy = 2, kMomentum = 3 };

}  // namespace

GeneratorImages particle_images(const RingContext& ctx, int a, const std::array<RingElement, 4>& constants) {
  const Scalar i = Scalar::i();
  const RingElement w = RingElement::omega(ctx, a);
  const RingElement inv_w = RingElement::omega_power(ctx, a, -1);
  const RingElement inv_w2 = RingElement::omega_power(ctx, a, -2);
  std::array<RingElement, 4> k;
  std::array<DiffOperator, 4> d;
  for (int j = 1; j <= 3; ++j) {
    k[j] = RingElement::k(ctx, a, j);
    d[j] = DiffOperator::partial(ctx, a, j);
  }
  DiffOperator k_dot_d(ctx, 0);
  DiffOperator laplacian(ctx, 0);
  for (int j = 1; j <= 3; ++j) {
    k_dot_d += k[j] * d[j];
    laplacian += d[j] * d[j];
  }
  const RingElement& c_dil = constants[kDilatation];
  const RingElement& c_boost = constants[kBoost];

  GeneratorImages g;
  auto set = [&](Generator gen, DiffOperator op) { g[static_cast<std::size_t>(gen.id())] = std::move(op); };
  set(Generator::D(), i * (k_dot_d + DiffOperator(c_dil)));
  set(Generator::P(0), DiffOperator(w));
  for (int j = 1; j <= 3; ++j) {
    set(Generator::P(j), DiffOperator(k[j]));
    set(Generator::J(0, j), -i * (w * d[j] + DiffOperator(c_boost * k[j] * inv_w)));
    for (int l = j + 1; l <= 3; ++l) set(Generator::J(j, l), i * (k[l] * d[j] - k[j] * d[l]));
  }
  DiffOperator c0 = -(w * laplacian) + DiffOperator(constants[kEnergy] * inv_w);
  for (int j = 1; j <= 3; ++j) c0 -= Scalar(2) * ((c_boost * k[j] * inv_w) * d[j]);
  set(Generator::C(0), std::move(c0));
  for (int l = 1; l <= 3; ++l) {
    DiffOperator cl = Scalar(2) * (k_dot_d * d[l]) - k[l] * laplacian;
    cl += Scalar(2) * (c_dil * d[l]);
    cl += DiffOperator(constants[kMomentum] * k[l] * inv_w2);
    set(Generator::C(l), std::move(cl));
  }
  return g;
}

OneParticleSolution solve_one_particle() {
  const RingContext ctx(1, 4);
  std::array<RingElement, 4> params;
  for (int p = 0; p < 4; ++p) params[static_cast<std::size_t>(p)] = RingElement::param(ctx, p);
  const GeneratorImages images = particle_images(ctx, 0, params);
  const DiffOperator zero(ctx, 0);

  std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> unique(
      [](const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); });
  const auto& basis = Generator::basis();
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      const DiffOperator residual = normalized_commutator(images[x], images[y]) -
                                    image_of(images, conformal_table()(basis[x], basis[y]), zero);
      for (auto& e : residual.parameter_equations()) {
        // Scale so equations that differ by a constant factor collapse.
        e *= Scalar(1) / e.terms().front().second;
        unique.insert(std::move(e));
      }
    }
  }
  OneParticleSolution result;
  result.equations = unique.size();
  std::vector<Polynomial> equations(unique.begin(), unique.end());
  equations.push_back(Polynomial::var(ctx.param_var(kBoost)));  // gauge choice
  const auto solution = solve_system(std::move(equations), ctx.num_vars());
  if (!solution) throw std::runtime_error("one-particle realization: closure constraints have no rational solution");
  if (!solution->free.empty()) {
    for (int v : solution->free) {
      if (ctx.is_param(v)) throw std::runtime_error("one-particle realization: closure constraints underdetermined");
    }
  }
  auto value = [&](int p) {
    auto it = solution->values.find(ctx.param_var(p));
    return it == solution->values.end() ? Scalar(0) : it->second;
  };
  result.constants = {value(kDilatation), value(kBoost), value(kEnergy), value(kMomentum)};
  return result;
}

const OneParticleSolution& one_particle_solution() {
  static const OneParticleSolution solution = solve_one_particle();
  return solution;
}

// ---------------------------------------------------------------------------

Realization::Realization(int particles) : Realization(particles, one_particle_solution().constants) {}

Realization::Realization(int particles, const OrderingConstants& constants)
    : ctx_(std::make_unique<RingContext>(particles)), constants_(constants) {
  const std::array<RingElement, 4> c{RingElement(*ctx_, constants.dilatation), RingElement(*ctx_, constants.boost),
                                     RingElement(*ctx_, constants.energy), RingElement(*ctx_, constants.momentum)};
  for (auto& img : images_) img = DiffOperator(*ctx_, 0);
  for (int a = 0; a < particles; ++a) {
    const GeneratorImages one = particle_images(*ctx_, a, c);
    for (std::size_t g = 0; g < images_.size(); ++g) images_[g] += one[g];
  }
}

DiffOperator Realization::mass_power(int k) const {
  if (k < 0 && particles() < 2) throw std::invalid_argument("negative mass powers need at least two particles");
  return DiffOperator(RingElement::sigma_power(*ctx_, k));
}

DiffOperator Realization::image(const AlgebraElement& a) const { return image_of(images_, a, constant(0)); }

const DiffOperator& Realization::realize_word(const Word& w) {
  if (auto it = words_.find(w); it != words_.end()) return it->second;
  DiffOperator op;
  if (w.empty()) {
    op = constant(1);
  } else {
    const Word prefix(w.begin(), w.end() - 1);
    const Letter last = w.back();
    const DiffOperator letter = last.is_generator() ? generator(last.generator()) : mass_power(last.power());
    op = realize_word(prefix) * letter;
  }
  return words_.emplace(w, std::move(op)).first->second;
}

DiffOperator Realization::realize(const NCPolynomial& p) {
  DiffOperator out = constant(0);
  for (const auto& [w, c] : p.terms()) out += scalar_coefficient(c) * realize_word(w);
  return out;
}

std::vector<OperatorPairResidual> verify_realization_pairs(const Realization& r, const StructureTable& table) {
  std::vector<OperatorPairResidual> out;
  const auto& basis = Generator::basis();
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      DiffOperator residual = normalized_commutator(r.generator(basis[x]), r.generator(basis[y])) -
                              r.image(table(basis[x], basis[y]));
      out.push_back({basis[x], basis[y], std::move(residual)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Points

MomentumPoint counterpropagating_point(const Scalar& omega) {
  MomentumPoint p;
  p.k = {{0, 0, omega}, {0, 0, -omega}};
  p.omega = {omega, omega};
  p.sigma = Scalar(2) * omega;
  return p;
}

namespace {

mpq_class random_fraction(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
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

}  // namespace

MomentumPoint random_momentum_point(const RingContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    MomentumPoint p;
    for (int a = 0; a < ctx.particles(); ++a) {
      const mpq_class u = random_fraction(rng, 9, 5);
      const mpq_class v = random_fraction(rng, 9, 5);
      const mpq_class norm = u * u + v * v + 1;
      mpq_class r = random_fraction(rng, 20, 7);
      if (sgn(r) == 0) r = 1;
      r = abs(r);
      p.k.push_back({Scalar(mpq_class(r * 2 * u / norm)), Scalar(mpq_class(r * 2 * v / norm)),
                     Scalar(mpq_class(r * (u * u + v * v - 1) / norm))});
      p.omega.emplace_back(r);
    }
    std::vector<Scalar> values(Monomial::kMaxVars);
    for (int a = 0; a < ctx.particles(); ++a) {
      for (int j = 1; j <= 3; ++j) values[static_cast<std::size_t>(ctx.k_var(a, j))] = p.k[a][j - 1];
      values[static_cast<std::size_t>(ctx.omega_var(a))] = p.omega[a];
    }
    const Scalar s = ctx.s().evaluate(values);
    if (ctx.particles() >= 2 && s.is_zero()) continue;
    if (auto root = exact_sqrt(s.real())) p.sigma = Scalar(*root);
    return p;
  }
}

RingElement random_test_function(const RingContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(0, ctx.derivative_vars() - 1);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<Polynomial::Term> terms;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    const int deg = degree(rng);
    for (int e = 0; e < deg; ++e) m = m * Monomial::var(var(rng));
    const int c = coeff(rng);
    terms.emplace_back(m, Scalar(c == 0 ? 1 : c));
  }
  return RingElement(ctx, Polynomial::from_terms(std::move(terms)));
}

Scalar evaluate_at_point(const DiffOperator& op, const RingElement& f, const MomentumPoint& point) {
  return op.apply(f).evaluate(point);
}

}  // namespace confalg
