#pragma once

#include <array>
#include <string>
#include <vector>

#include "confalg/algebra.hpp"

namespace confalg {

/// 6x6 matrix, row-major, indices 0..5 (0..3 spacetime, 4 and 5 the extra
/// ambient directions).
using Matrix6 = std::array<Scalar, 36>;

inline Scalar& at(Matrix6& m, int r, int c) { return m[static_cast<std::size_t>(r * 6 + c)]; }
inline const Scalar& at(const Matrix6& m, int r, int c) { return m[static_cast<std::size_t>(r * 6 + c)]; }

Matrix6 operator*(const Matrix6& a, const Matrix6& b);
Matrix6 operator+(const Matrix6& a, const Matrix6& b);
Matrix6 operator-(const Matrix6& a, const Matrix6& b);
Matrix6 operator*(const Scalar& s, const Matrix6& a);
Matrix6 transpose(const Matrix6& a);
Matrix6 commutator(const Matrix6& a, const Matrix6& b);
bool is_zero(const Matrix6& m);
std::string to_string(const Matrix6& m);

/// Ambient metric diag(+1,-1,-1,-1,-1,+1).
const Matrix6& ambient_metric();
/// (L_ab)^c_d = delta^c_a G_bd - delta^c_b G_ad.
Matrix6 rotation_generator(int a, int b);

/// Coefficients of the embedding P = alpha L_{mu4} + beta L_{mu5},
/// C = gamma L_{mu4} + delta L_{mu5}, D = zeta L_45.
struct EmbeddingCoefficients {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;
  Scalar delta;
  Scalar zeta;
};

struct MatrixRep {
  std::array<Matrix6, Generator::kCount> images;
  EmbeddingCoefficients coefficients;

  const Matrix6& operator()(Generator g) const { return images[static_cast<std::size_t>(g.id())]; }
  /// Image of a linear combination; coefficients must be scalars.
  Matrix6 image(const AlgebraElement& a) const;
};

/// Solves the closure constraints for gamma, delta, zeta with alpha = beta = 1.
/// Throws std::runtime_error when no rational solution exists.
MatrixRep build_matrix_rep(const StructureTable& table = conformal_table());

struct MatrixPairResidual {
  Generator a;
  Generator b;
  Matrix6 residual;
};

/// [rho(A), rho(B)] - rho((A,B)) for the 105 pairs A < B in basis order.
std::vector<MatrixPairResidual> verify_matrix_rep(const MatrixRep& rep, const StructureTable& table = conformal_table());

/// rho(g)^T G + G rho(g) for each basis generator.
std::vector<std::pair<Generator, Matrix6>> metric_antisymmetry_residuals(const MatrixRep& rep);

}  // namespace confalg
