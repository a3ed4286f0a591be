#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "confalg/checks.hpp"
#include "confalg/matrix_rep.hpp"
#include "confalg/nc.hpp"
#include "confalg/realization.hpp"
#include "confalg/report.hpp"

namespace py = pybind11;
using namespace confalg;

namespace {

Generator parse_generator(const std::string& name, int* sign = nullptr) {
  const auto parsed = Generator::parse(name);
  if (!parsed) throw py::value_error("unknown generator: " + name);
  if (sign) *sign = parsed->first;
  return parsed->second;
}

/// A word such as ["C0", "P0", "M^-2"]; a reversed J (e.g. "J10") flips the sign.
NCPolynomial parse_word(const std::vector<std::string>& letters) {
  Word w;
  int sign = 1;
  for (const std::string& l : letters) {
    if (l.rfind("M^", 0) == 0) {
      const int k = std::stoi(l.substr(2));
      if (k == 0) continue;
      w.push_back(Letter::mpower(k));
    } else if (l == "M") {
      w.push_back(Letter::mpower(1));
    } else {
      int s = 1;
      w.push_back(Letter::gen(parse_generator(l, &s)));
      sign *= s;
    }
  }
  return NCPolynomial::word(w, CoefficientExpr(sign));
}

std::string generator_bracket(const std::string& a, const std::string& b) {
  int sa = 1;
  int sb = 1;
  const Generator ga = parse_generator(a, &sa);
  const Generator gb = parse_generator(b, &sb);
  return (CoefficientExpr(sa * sb) * conformal_table()(ga, gb)).to_string();
}

std::string jacobi(const std::string& a, const std::string& b, const std::string& c) {
  return jacobi_residual(parse_generator(a), parse_generator(b), parse_generator(c)).to_string();
}

RunOptions run_options(int particles, std::uint64_t seed, int jobs) {
  RunOptions o;
  o.particles = particles;
  o.seed = seed;
  o.jobs = jobs;
  return o;
}

std::string verify(const std::vector<std::string>& selection, int particles, std::uint64_t seed, int jobs,
                   const std::string& format, bool timestamp) {
  const Report report = run(selection, run_options(particles, seed, jobs));
  RenderOptions render;
  if (timestamp) render.timestamp = utc_timestamp();
  return render_report(report, parse_format(format), render);
}

std::vector<py::dict> list_checks(const std::vector<std::string>& selection) {
  std::vector<const CheckDescriptor*> checks;
  if (selection.empty()) {
    for (const auto& c : check_catalog()) checks.push_back(&c);
  } else {
    checks = select_checks(selection);
  }
  std::vector<py::dict> out;
  for (const auto* c : checks) {
    py::dict d;
    d["id"] = c->id;
    d["paper_ref"] = c->paper_ref;
    d["module"] = c->module;
    d["group"] = c->group;
    d["parameters"] = c->parameters;
    out.push_back(std::move(d));
  }
  return out;
}

py::dict matrix_coefficients() {
  const MatrixRep rep = build_matrix_rep();
  py::dict d;
  const auto& c = rep.coefficients;
  for (const auto& [name, value] :
       std::vector<std::pair<const char*, Scalar>>{{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma},
                                                  {"delta", c.delta}, {"zeta", c.zeta}}) {
    d[name] = value.to_string();
  }
  return d;
}

py::dict ordering_constants() {
  const auto& c = one_particle_solution().constants;
  py::dict d;
  d["dilatation"] = c.dilatation.to_string();
  d["boost"] = c.boost.to_string();
  d["energy"] = c.energy.to_string();
  d["momentum"] = c.momentum.to_string();
  return d;
}

/// Realized M^2 and P_mu applied to 1 at k1 = (0,0,w), k2 = (0,0,-w).
py::dict two_photon(long omega) {
  Realization r(2);
  OperatorCatalog cat(OperatorBackend{&r});
  const MomentumPoint pt = counterpropagating_point(omega);
  const RingElement one(r.ring(), Scalar(1));
  py::dict d;
  d["mass_squared"] = evaluate_at_point(cat.mass_power(2), one, pt).to_string();
  std::vector<std::string> p;
  for (int mu = 0; mu < 4; ++mu) p.push_back(evaluate_at_point(cat.momentum(mu), one, pt).to_string());
  d["momentum"] = p;
  return d;
}

}  // namespace

PYBIND11_MODULE(_confalg, m) {
  m.doc() = "Exact verification of conformal-algebra operator identities";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("bracket", &generator_bracket, py::arg("a"), py::arg("b"),
        "Normalized bracket (a, b) of two generators, e.g. bracket('P0', 'C0') -> '-2 D'.");
  m.def("jacobi_residual", &jacobi, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "normal_form", [](const std::vector<std::string>& word) { return normal_form(parse_word(word)).to_string(); },
      py::arg("word"), "Normal form of a word given as letters such as ['C0', 'P0', 'M^-2'].");
  m.def(
      "commutator",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return nc_bracket(parse_word(a), parse_word(b)).to_string();
      },
      py::arg("a"), py::arg("b"), "Normalized bracket of two words in the word algebra.");
  m.def("matrix_coefficients", &matrix_coefficients);
  m.def("ordering_constants", &ordering_constants);
  m.def("two_photon", &two_photon, py::arg("omega") = 1);
  m.def("list_checks", &list_checks, py::arg("selection") = std::vector<std::string>{});
  m.def("verify", &verify, py::arg("selection"), py::arg("particles") = 2, py::arg("seed") = 0, py::arg("jobs") = 1,
        py::arg("format") = "json", py::arg("timestamp") = false, py::call_guard<py::gil_scoped_release>(),
        "Runs the selected checks and returns the rendered report.");
}
