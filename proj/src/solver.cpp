#include "octarep/solver.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "octarep/errors.hpp"

namespace octarep {

std::shared_ptr<const Basis> cached_basis(const std::string& space, std::size_t prec, BasisVariant variant) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::size_t, BasisVariant>, std::shared_ptr<const Basis>> cache;
  const auto key = std::make_tuple(space, prec, variant);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto b = std::make_shared<const Basis>(build_basis(space_id(space), prec, variant));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(b)).first->second;
}

CoefficientVector solve_coefficients(const QuadraticForm& form, const Basis& basis) {
  if (basis.space.character_label != form.space())
    throw std::invalid_argument("form " + form.label() + " lives in " + form.space() + ", not " +
                                basis.space.character_label);
  const std::size_t dim = basis.dimension();
  const std::size_t prec = basis.prec;
  if (prec < 2 * dim + 8) throw std::invalid_argument("solve_coefficients: precision must be >= 2*dim + 8");
  const QSeries target = theta_product(form, prec);
  const RationalMatrix m = coefficient_matrix(basis, prec - 1);

  CoefficientVector v;
  v.space = basis.space.character_label;
  v.rows_used = select_independent_rows(m, dim);
  if (v.rows_used.size() < dim) {
    std::vector<std::size_t> cols;
    for (const auto& d : column_dependencies(m)) cols.push_back(d.column + 1);
    throw RankDeficient(v.space, v.rows_used.size(), dim, std::move(cols));
  }
  RationalMatrix a(dim, dim);
  std::vector<Rational> b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = m(v.rows_used[i], j);
    b[i] = target[v.rows_used[i]];
  }
  auto x = bareiss_solve(a, b);
  if (!x) throw std::logic_error("selected rows are singular");
  v.entries = std::move(*x);

  for (std::size_t n = 0; n < prec; ++n) {
    Rational s = 0;
    for (std::size_t j = 0; j < dim; ++j)
      if (v.entries[j] != 0) s += m(n, j) * v.entries[j];
    if (s != target[n]) throw InconsistentSystem(form.label(), n);
  }
  v.rows_checked = prec;
  return v;
}

CoefficientVector solve_coefficients(const QuadraticForm& form, std::size_t prec) {
  return solve_coefficients(form, *cached_basis(form.space(), prec));
}

Rational eval_formula(const CoefficientVector& v, const Basis& basis, std::size_t n) {
  if (v.entries.size() != basis.dimension()) throw std::invalid_argument("eval_formula: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.entries.size(); ++i)
    if (v.entries[i] != 0) s += v.entries[i] * basis.elements[i].series[n];
  return s;
}

namespace {

bool reproduces(const std::vector<Rational>& vec, const Basis& basis, const std::vector<std::int64_t>& counts) {
  CoefficientVector v{basis.space.character_label, vec, {}, 0};
  for (std::size_t n = 0; n < counts.size(); ++n)
    if (eval_formula(v, basis, n) != counts[n]) return false;
  return true;
}

}  // namespace

TableAudit diff_tables(std::size_t prec, BasisVariant variant, std::optional<int> table) {
  constexpr std::int64_t kVerdictNmax = 40;
  TableAudit audit;
  for (const auto& t : reference_tables()) {
    if (table && t.id != *table) continue;
    std::shared_ptr<const Basis> basis;
    try {
      basis = cached_basis(t.space, prec, variant);
    } catch (const RankDeficient& e) {
      audit.errors.push_back("table " + std::to_string(t.id) + ": " + e.what());
      continue;
    }
    for (const auto& row : t.rows) {
      CoefficientVector v;
      try {
        v = solve_coefficients(row.form, *basis);
      } catch (const Error& e) {
        audit.errors.push_back("table " + std::to_string(t.id) + " row " + row.row_label + ": " + e.what());
        continue;
      }
      std::optional<bool> printed_ok, computed_ok;
      if (v.entries != row.entries) {
        const auto counts = count_representations_upto(row.form, kVerdictNmax);
        printed_ok = reproduces(row.entries, *basis, counts);
        computed_ok = reproduces(v.entries, *basis, counts);
      }
      for (std::size_t j = 0; j < t.dimension; ++j) {
        const bool match = v.entries[j] == row.entries[j];
        audit.diffs.push_back({t.id, row.row_label, row.form.label(), j + 1, row.entries[j], v.entries[j], match,
                               match ? std::nullopt : printed_ok, match ? std::nullopt : computed_ok});
      }
    }
  }
  return audit;
}

VerifyReport verify_form(const QuadraticForm& form, std::int64_t n_max, std::size_t prec) {
  VerifyReport rep;
  rep.form = form.label();
  rep.space = form.space();
  rep.n_max = n_max;
  prec = std::max<std::size_t>(prec, static_cast<std::size_t>(n_max) + 1);
  try {
    auto basis = cached_basis(rep.space, prec);
    const CoefficientVector v = solve_coefficients(form, *basis);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const Rational f = eval_formula(v, *basis, static_cast<std::size_t>(n));
      const std::int64_t c = count_representations(form, n);
      if (f != c) rep.violations.push_back({n, f, c});
    }
  } catch (const Error& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace octarep
