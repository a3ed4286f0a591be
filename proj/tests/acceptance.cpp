// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "confalg/checks.hpp"

using namespace confalg;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> selection;
  std::size_t expected_checks;
  double limit_seconds;  // 0 means no limit
};

bool evaluate(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    const Report r = run(c.selection, {});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = r.exit_code() == 0 && r.checks.size() == c.expected_checks &&
         (c.limit_seconds == 0 || seconds < c.limit_seconds);
    detail = std::to_string(r.pass) + "/" + std::to_string(r.checks.size()) + " checks pass";
    if (r.checks.size() != c.expected_checks) detail += ", expected " + std::to_string(c.expected_checks) + " checks";
    char timing[64];
    std::snprintf(timing, sizeof timing, ", %.2f s", seconds);
    detail += timing;
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, " (limit %.0f s)", c.limit_seconds);
      detail += timing;
    }
    for (const auto& check : r.checks) {
      if (check.status != CheckStatus::Pass) detail += "; " + std::string(to_string(check.status)) + " " + check.id;
    }
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("criterion %2d: %s  %s: %s\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), detail.c_str());
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "structure constants", {"eq4", "algebra.antisymmetry", "algebra.weights"}, 107, 1},
      {2, "Jacobi identity", {"eq3.jacobi", "algebra.jacobi-degenerate"}, 456, 10},
      {3, "mass shifts", {"eq5", "eq6"}, 3, 0},
      {4, "canonical structure", {"eq7"}, 3, 0},
      {5, "position commutators", {"eq9"}, 3, 0},
      {6, "Pauli-Lubanski vector", {"eq10"}, 2, 0},
      {7, "redshift and covariance", {"eq11", "eq12", "eq13"}, 6, 0},
      {8, "matrix oracle", {"matrix"}, 107, 1},
      {9, "realization oracle", {"realization"}, 24, 120},
      {10, "two-photon mass", {"realization.two-photon-mass"}, 1, 0},
      {11, "property suites", {"nc"}, 5, 0},
  };
  bool all = true;
  for (const auto& c : criteria) all = evaluate(c) && all;
  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
