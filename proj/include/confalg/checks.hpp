#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/algebra.hpp"
#include "confalg/matrix_rep.hpp"
#include "confalg/observables.hpp"
#include "confalg/realization.hpp"

namespace confalg {

inline constexpr std::string_view kVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Error };
std::string_view to_string(CheckStatus s);

struct RunOptions {
  int particles = 2;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Structure table under test; nullptr means the conformal table.
  const StructureTable* table = nullptr;
};

/// Lazily built state shared by the checks of one worker thread.
class CheckEnvironment {
 public:
  explicit CheckEnvironment(const RunOptions& options);
  ~CheckEnvironment();
  CheckEnvironment(const CheckEnvironment&) = delete;
  CheckEnvironment& operator=(const CheckEnvironment&) = delete;

  const RunOptions& options() const { return options_; }
  const StructureTable& table() const;
  WordAlgebra& algebra();
  ObservableCatalog& observables();
  const MatrixRep& matrix_rep();
  /// Realization at the configured particle count.
  Realization& realization();
  Realization& one_particle();
  OperatorCatalog& operators();
  /// Generator seeded from the run seed and a per-check salt.
  std::mt19937_64 rng(std::string_view salt) const;

 private:
  struct State;
  RunOptions options_;
  std::unique_ptr<State> state_;
};

/// What a check found: zero residual terms means pass.
struct CheckOutcome {
  std::size_t residual_terms = 0;
  std::string residual_text;
};

struct CheckDescriptor {
  std::string id;
  std::string paper_ref;
  /// conformal-algebra, nc-calculus or realizations.
  std::string module;
  /// algebra, identities, matrix or realization.
  std::string group;
  /// Index ranges and whether the seed or particle count matter.
  std::string parameters;
  std::function<CheckOutcome(CheckEnvironment&)> run;
};

struct CheckResult {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::Pass;
  std::size_t residual_terms = 0;
  std::string residual_text;
  double duration_ms = 0;
};

struct Report {
  std::string version{kVersion};
  RunOptions options;
  std::vector<CheckResult> checks;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t error = 0;

  int exit_code() const { return fail == 0 && error == 0 ? 0 : 1; }
};

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Every check, sorted by identifier.
const std::vector<CheckDescriptor>& check_catalog();
const std::vector<std::string>& check_groups();

/// Resolves group names, exact identifiers and dotted prefixes ("eq7",
/// "realization.eq9"); "jacobi" names the distinct-triple Jacobi checks.
/// Throws UsageError for tokens that match nothing.
std::vector<const CheckDescriptor*> select_checks(const std::vector<std::string>& selection);

/// Runs the checks on up to options.jobs threads; entries come back sorted
/// by identifier.
Report run_checks(const std::vector<const CheckDescriptor*>& checks, const RunOptions& options);
Report run(const std::vector<std::string>& selection, const RunOptions& options);

}  // namespace confalg
