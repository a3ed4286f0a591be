#include "confalg/observables.hpp"

namespace confalg {

CoefficientExpr accel_upper(int mu) {
  return CoefficientExpr::factor(TensorFactor::accel(IndexLabel::concrete(mu, Variance::Upper)));
}

CoefficientExpr accel_lower(int mu) {
  return CoefficientExpr::factor(TensorFactor::accel(IndexLabel::concrete(mu, Variance::Lower)));
}

std::array<Scalar, 4> unit_direction(int mu) {
  std::array<Scalar, 4> a{0, 0, 0, 0};
  a.at(static_cast<std::size_t>(mu)) = 1;
  return a;
}

}  // namespace confalg
