#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octarep/bases.hpp"
#include "octarep/reference.hpp"
#include "octarep/repcount.hpp"

namespace octarep {

struct CoefficientVector {
  std::string space;
  std::vector<Rational> entries;       // aligned with basis indices 1..dim
  std::vector<std::size_t> rows_used;  // q-exponents of the square system
  std::size_t rows_checked = 0;        // every n < this satisfies the system
};

// Shared, immutable basis for (space, prec, variant); built once per process.
std::shared_ptr<const Basis> cached_basis(const std::string& space, std::size_t prec,
                                          BasisVariant variant = BasisVariant::Remediated);

// Solve on the first dim independent rows n = 0, 1, ..., then check every
// row n < basis.prec. Throws InconsistentSystem on any residual and
// RankDeficient if the basis has too few independent rows.
CoefficientVector solve_coefficients(const QuadraticForm& form, const Basis& basis);
CoefficientVector solve_coefficients(const QuadraticForm& form, std::size_t prec = kDefaultPrecision);

// sum_i v_i * (coefficient of q^n in basis element i).
Rational eval_formula(const CoefficientVector& v, const Basis& basis, std::size_t n);

struct TableDiff {
  int table;
  std::string row_label;
  std::string form;
  std::size_t column;  // 1-based
  Rational printed;  // reference table value
  Rational computed;
  bool match;
  // Only for mismatches: which vector reproduces lattice counts for n <= 40.
  std::optional<bool> printed_reproduces_counts;
  std::optional<bool> computed_reproduces_counts;
};

struct TableAudit {
  std::vector<TableDiff> diffs;     // every entry of every audited row
  std::vector<std::string> errors;  // tables that could not be solved (e.g. rank deficient basis)
};

// Compares solved vectors with the reference tables (all of them, or one id).
TableAudit diff_tables(std::size_t prec = kDefaultPrecision, BasisVariant variant = BasisVariant::Remediated,
                       std::optional<int> table = std::nullopt);

struct Violation {
  std::int64_t n;
  Rational formula;
  std::int64_t count;
};

struct VerifyReport {
  std::string form;
  std::string space;
  std::int64_t n_max = 0;
  std::vector<Violation> violations;
  std::string error;  // set when the solve itself failed
  bool ok() const { return violations.empty() && error.empty(); }
};

// eval_formula(solve_coefficients(form), n) against count_representations(form, n)
// for 0 <= n <= n_max. Violations are data, not exceptions.
VerifyReport verify_form(const QuadraticForm& form, std::int64_t n_max, std::size_t prec = kDefaultPrecision);

}  // namespace octarep
