#pragma once

#include <array>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "confalg/diffop.hpp"
#include "confalg/nc.hpp"
#include "confalg/observables.hpp"

namespace confalg {

/// Free constants of the scalar one-particle ansatz:
///   D    = i (k.d + dilatation)
///   J_ij = i (k_j d_i - k_i d_j)
///   J_0j = -i (w d_j + boost k_j / w)
///   C_0  = -w lap - 2 boost (k/w).d + energy / w
///   C_l  = 2 (k.d) d_l - k_l lap + 2 dilatation d_l + momentum k_l / w^2
/// with P_0 = w and P_j = k_j, k the lower spatial components.
struct OrderingConstants {
  Scalar dilatation;
  Scalar boost;
  Scalar energy;
  Scalar momentum;
};

using GeneratorImages = std::array<DiffOperator, Generator::kCount>;

/// Ansatz images acting on particle a; constants may be ring parameters.
GeneratorImages particle_images(const RingContext& ctx, int a, const std::array<RingElement, 4>& constants);

struct OneParticleSolution {
  OrderingConstants constants;
  /// Distinct parameter equations produced by the 105 closure brackets.
  std::size_t equations = 0;
};

/// Solves the closure of the one-particle ansatz. The constants form a
/// one-parameter family (conjugation by a power of w); the boost constant is
/// fixed to zero to pick one member. Throws std::runtime_error if unsolvable.
OneParticleSolution solve_one_particle();

/// n-particle realization: each generator is the sum of its one-particle
/// images, M^k is multiplication by sigma^k. Holds a word cache, so one
/// instance per thread.
class Realization {
 public:
  Realization(int particles, const OrderingConstants& constants);
  /// Uses solve_one_particle() (computed once per process).
  explicit Realization(int particles);

  const RingContext& ring() const { return *ctx_; }
  int particles() const { return ctx_->particles(); }
  const OrderingConstants& constants() const { return constants_; }

  const DiffOperator& generator(Generator g) const { return images_[static_cast<std::size_t>(g.id())]; }
  /// Multiplication by sigma^k; negative k needs two or more particles.
  DiffOperator mass_power(int k) const;
  DiffOperator constant(const Scalar& c) const { return DiffOperator(*ctx_, c); }
  /// Image of a linear combination with scalar coefficients.
  DiffOperator image(const AlgebraElement& a) const;
  /// Homomorphic image of a polynomial with scalar coefficients.
  DiffOperator realize(const NCPolynomial& p);

 private:
  const DiffOperator& realize_word(const Word& w);

  std::unique_ptr<RingContext> ctx_;
  OrderingConstants constants_;
  GeneratorImages images_;
  std::unordered_map<Word, DiffOperator, WordHash> words_;
};

const OneParticleSolution& one_particle_solution();

/// Catalog backend over a realization; the acceleration must be a concrete
/// direction.
struct OperatorBackend {
  using Value = DiffOperator;
  using Coef = Scalar;

  Realization* realization = nullptr;

  Value constant(const Scalar& s) const { return realization->constant(s); }
  Value generator(Generator g) const { return realization->generator(g); }
  Value mass_power(int k) const { return realization->mass_power(k); }
  Value multiply(const Value& p, const Value& q) const { return p * q; }
  Coef formal_accel(int) const {
    throw std::logic_error("operator catalog needs a concrete acceleration direction");
  }
};

using OperatorCatalog = Catalog<OperatorBackend>;

struct OperatorPairResidual {
  Generator a;
  Generator b;
  DiffOperator residual;
};

/// (rho(A), rho(B)) - rho((A,B)) for the 105 pairs A < B.
std::vector<OperatorPairResidual> verify_realization_pairs(const Realization& r,
                                                           const StructureTable& table = conformal_table());

/// k_1 = (0,0,w), k_2 = (0,0,-w).
MomentumPoint counterpropagating_point(const Scalar& omega);
/// Random point with rational unit directions from inverse stereographic
/// projection and random rational magnitudes; s != 0 for n >= 2.
MomentumPoint random_momentum_point(const RingContext& ctx, std::mt19937_64& rng);
/// Random polynomial in the k variables with small integer coefficients.
RingElement random_test_function(const RingContext& ctx, std::mt19937_64& rng);
/// (op f)(point).
Scalar evaluate_at_point(const DiffOperator& op, const RingElement& f, const MomentumPoint& point);

}  // namespace confalg
