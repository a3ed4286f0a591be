#include "confalg/matrix_rep.hpp"

#include <sstream>
#include <stdexcept>

#include "confalg/polynomial.hpp"

namespace confalg {

namespace {

template <class T>
using Grid = std::array<T, 36>;

template <class T>
Grid<T> product(const Grid<T>& a, const Grid<T>& b) {
  Grid<T> out{};
  for (int r = 0; r < 6; ++r) {
    for (int k = 0; k < 6; ++k) {
      const T& x = a[static_cast<std::size_t>(r * 6 + k)];
      if (x.is_zero()) continue;
      for (int c = 0; c < 6; ++c) {
        const T& y = b[static_cast<std::size_t>(k * 6 + c)];
        if (!y.is_zero()) out[static_cast<std::size_t>(r * 6 + c)] += x * y;
      }
    }
  }
  return out;
}

template <class T>
Grid<T> combine(const Grid<T>& a, const Grid<T>& b, const Scalar& sign) {
  Grid<T> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * b[i];
  return out;
}

template <class T>
Grid<T> scaled(const T& s, const Grid<T>& a) {
  Grid<T> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
  return out;
}

Grid<Polynomial> lift(const Matrix6& m) {
  Grid<Polynomial> out{};
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = Polynomial(m[i]);
  return out;
}

Matrix6 evaluate(const Grid<Polynomial>& m, const std::vector<Scalar>& values) {
  Matrix6 out{};
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i].evaluate(values);
  return out;
}

Scalar scalar_coefficient(const CoefficientExpr& c) {
  if (!c.is_scalar()) throw std::invalid_argument("matrix image needs scalar coefficients: " + c.to_string());
  return c.scalar_value();
}

enum Unknown : int { kGamma = 0, kDelta = 1, kZeta = 2, kUnknowns = 3 };

/// Images with gamma, delta, zeta symbolic and alpha = beta = 1.
std::array<Grid<Polynomial>, Generator::kCount> symbolic_images() {
  std::array<Grid<Polynomial>, Generator::kCount> images{};
  const Polynomial gamma = Polynomial::var(kGamma);
  const Polynomial delta = Polynomial::var(kDelta);
  const Polynomial zeta = Polynomial::var(kZeta);
  for (Generator g : Generator::basis()) {
    auto& img = images[static_cast<std::size_t>(g.id())];
    switch (g.kind()) {
      case GenKind::D:
        img = scaled(zeta, lift(rotation_generator(4, 5)));
        break;
      case GenKind::J:
        img = lift(rotation_generator(g.index(0), g.index(1)));
        break;
      case GenKind::P:
        img = lift(rotation_generator(g.index(), 4) + rotation_generator(g.index(), 5));
        break;
      case GenKind::C:
        img = combine(scaled(gamma, lift(rotation_generator(g.index(), 4))),
                      scaled(delta, lift(rotation_generator(g.index(), 5))), 1);
        break;
    }
  }
  return images;
}

}  // namespace

Matrix6 operator*(const Matrix6& a, const Matrix6& b) { return product(a, b); }
Matrix6 operator+(const Matrix6& a, const Matrix6& b) { return combine(a, b, 1); }
Matrix6 operator-(const Matrix6& a, const Matrix6& b) { return combine(a, b, -1); }
Matrix6 operator*(const Scalar& s, const Matrix6& a) { return scaled(s, a); }

Matrix6 transpose(const Matrix6& a) {
  Matrix6 out{};
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) at(out, r, c) = at(a, c, r);
  }
  return out;
}

Matrix6 commutator(const Matrix6& a, const Matrix6& b) { return a * b - b * a; }

bool is_zero(const Matrix6& m) {
  for (const auto& x : m) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string to_string(const Matrix6& m) {
  std::ostringstream os;
  for (int r = 0; r < 6; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < 6; ++c) os << (c ? ", " : "[") << at(m, r, c).to_string();
    os << (r == 5 ? "]]" : "]\n");
  }
  return os.str();
}

const Matrix6& ambient_metric() {
  static const Matrix6 g = [] {
    Matrix6 m{};
    const int diag[6] = {1, -1, -1, -1, -1, 1};
    for (int i = 0; i < 6; ++i) at(m, i, i) = diag[i];
    return m;
  }();
  return g;
}

Matrix6 rotation_generator(int a, int b) {
  const Matrix6& g = ambient_metric();
  Matrix6 m{};
  for (int d = 0; d < 6; ++d) {
    at(m, a, d) += at(g, b, d);
    at(m, b, d) -= at(g, a, d);
  }
  return m;
}

Matrix6 MatrixRep::image(const AlgebraElement& a) const {
  Matrix6 out{};
  for (const auto& [g, c] : a.terms()) out = out + scalar_coefficient(c) * (*this)(g);
  return out;
}

MatrixRep build_matrix_rep(const StructureTable& table) {
  const auto images = symbolic_images();
  const auto& basis = Generator::basis();
  std::vector<Polynomial> equations;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = images[i];
      const auto& b = images[j];
      Grid<Polynomial> residual = combine(product(a, b), product(b, a), -1);
      for (const auto& [g, c] : table(basis[i], basis[j]).terms()) {
        residual = combine(residual, images[static_cast<std::size_t>(g.id())], -scalar_coefficient(c));
      }
      for (auto& e : residual) {
        if (!e.is_zero()) equations.push_back(std::move(e));
      }
    }
  }
  const auto solution = solve_system(std::move(equations), kUnknowns);
  if (!solution) throw std::runtime_error("matrix representation: closure constraints have no rational solution");
  if (!solution->free.empty()) throw std::runtime_error("matrix representation: closure constraints underdetermined");

  std::vector<Scalar> values(Monomial::kMaxVars);
  for (const auto& [v, x] : solution->values) values[static_cast<std::size_t>(v)] = x;
  MatrixRep rep;
  for (std::size_t i = 0; i < images.size(); ++i) rep.images[i] = evaluate(images[i], values);
  rep.coefficients = {1, 1, values[kGamma], values[kDelta], values[kZeta]};
  return rep;
}

std::vector<MatrixPairResidual> verify_matrix_rep(const MatrixRep& rep, const StructureTable& table) {
  std::vector<MatrixPairResidual> out;
  const auto& basis = Generator::basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Matrix6 lhs = commutator(rep(basis[i]), rep(basis[j]));
      out.push_back({basis[i], basis[j], lhs - rep.image(table(basis[i], basis[j]))});
    }
  }
  return out;
}

std::vector<std::pair<Generator, Matrix6>> metric_antisymmetry_residuals(const MatrixRep& rep) {
  std::vector<std::pair<Generator, Matrix6>> out;
  const Matrix6& g = ambient_metric();
  for (Generator gen : Generator::basis()) out.emplace_back(gen, transpose(rep(gen)) * g + g * rep(gen));
  return out;
}

}  // namespace confalg
