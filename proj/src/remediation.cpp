#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "octarep/bases.hpp"
#include "octarep/errors.hpp"
#include "octarep/eta_search.hpp"
#include "octarep/reference.hpp"
#include "octarep/repcount.hpp"

namespace octarep {

namespace {

// Well past the weight-4 level-24 identification bound (16).
constexpr std::size_t kRecoveryPrec = 80;
constexpr std::size_t kMaxRecoveredColumns = 3;
constexpr std::int64_t kBruteForceNmax = 40;

const std::vector<EtaQuotientSpec>& eta_pool() {
  static const std::vector<EtaQuotientSpec> pool = holomorphic_eta_quotients(EtaPoolBounds{});
  return pool;
}

std::vector<const ReferenceRow*> rows_for(const std::string& space) {
  std::vector<const ReferenceRow*> rows;
  for (const auto& t : reference_tables())
    if (t.space == space)
      for (const auto& r : t.rows) rows.push_back(&r);
  return rows;
}

// theta(n) - sum_i entries[i] * basis_i(n) for every row.
std::vector<std::vector<Rational>> residuals(const Basis& basis, const std::vector<const ReferenceRow*>& rows,
                                             const std::vector<QSeries>& thetas) {
  const std::size_t p = basis.prec;
  std::vector<std::vector<Rational>> res(rows.size(), std::vector<Rational>(p));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t n = 0; n < p; ++n) {
      Rational v = thetas[r][n];
      for (std::size_t i = 0; i < basis.dimension(); ++i)
        if (rows[r]->entries[i] != 0) v -= rows[r]->entries[i] * basis.elements[i].series[n];
      res[r][n] = v;
    }
  return res;
}

std::size_t nonzero_rows(const std::vector<std::vector<Rational>>& res) {
  std::size_t k = 0;
  for (const auto& row : res)
    for (const auto& x : row)
      if (x != 0) {
        ++k;
        break;
      }
  return k;
}

void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    for_each_subset(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

bool equal_mod64(const std::vector<std::uint64_t>& a, const QSeries& s) {
  for (std::size_t n = 0; n < s.prec(); ++n)
    if (a[n] != static_cast<std::uint64_t>(to_i64(s[n].get_num()))) return false;
  return true;
}

}  // namespace

RemediationReport run_remediation(const SpaceId& space, std::size_t prec) {
  RemediationReport rep;
  rep.space = space.character_label;
  rep.recovery_prec = prec;
  std::vector<FormDescriptor> layout = printed_layout(space);
  const Basis printed = assemble_basis(space, BasisVariant::Printed, layout, prec);
  const RankReport rr = rank_report(printed, prec - 1);
  rep.printed_rank = rr.rank;
  rep.printed_dependencies = rr.dependencies;

  const auto rows = rows_for(space.character_label);
  rep.reference_rows = rows.size();
  std::vector<QSeries> thetas;
  for (const auto* r : rows) thetas.push_back(theta_product(r->form, prec));
  const auto base_res = residuals(printed, rows, thetas);
  rep.printed_mismatched_rows = nonzero_rows(base_res);
  rep.needed = rr.rank < space.dimension || rep.printed_mismatched_rows > 0;

  if (rep.needed) {
    // Columns U are "unknown"; each row then says D_U x(n) = residual(n) + D_U printed_U(n).
    const std::size_t dim = space.dimension;
    std::map<std::vector<std::size_t>, std::vector<QSeries>> found;
    for (std::size_t k = 1; k <= kMaxRecoveredColumns && found.empty(); ++k) {
      std::vector<std::size_t> cur;
      for_each_subset(dim, k, cur, 0, [&](const std::vector<std::size_t>& u) {
        RationalMatrix a(rows.size(), u.size());
        RationalMatrix rhs(rows.size(), prec);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          for (std::size_t i = 0; i < u.size(); ++i) a(r, i) = rows[r]->entries[u[i]];
          for (std::size_t n = 0; n < prec; ++n) {
            Rational v = base_res[r][n];
            for (std::size_t i = 0; i < u.size(); ++i)
              if (rows[r]->entries[u[i]] != 0) v += rows[r]->entries[u[i]] * printed.elements[u[i]].series[n];
            rhs(r, n) = v;
          }
        }
        auto sol = solve_all(a, rhs);
        if (!sol) return;
        std::vector<QSeries> cols;
        for (std::size_t i = 0; i < u.size(); ++i) {
          std::vector<Rational> c(prec);
          for (std::size_t n = 0; n < prec; ++n) c[n] = (*sol)[n][i];
          cols.emplace_back(std::move(c));
        }
        found.emplace(u, std::move(cols));
      });
    }
    for (const auto& [u, cols] : found) {
      std::vector<std::size_t> one_based;
      for (auto c : u) one_based.push_back(c + 1);
      rep.minimal_column_sets.push_back(one_based);
    }
    if (found.empty()) {
      rep.failure = "no set of at most " + std::to_string(kMaxRecoveredColumns) +
                    " columns makes the reference rows consistent";
      return rep;
    }
    if (found.size() > 1) {
      rep.failure = "several minimal column sets fit the reference rows; refusing to choose";
      return rep;
    }

    const auto& [u, implied] = *found.begin();
    for (std::size_t i = 0; i < u.size(); ++i) {
      const std::size_t col = u[i];
      const QSeries& s = implied[i];
      Substitution sub{col + 1, layout[col], {}, {}, 0};
      bool done = false;
      for (std::size_t k = 0; k < dim && !done; ++k)
        if (k != col && printed.elements[k].series == s) {
          sub.chosen = printed.elements[k].descriptor;
          sub.method = "relabel";
          done = true;
        }
      for (std::size_t j = 0; j < rep.substitutions.size() && !done; ++j)
        for (std::size_t t : {2, 3, 4, 6, 8, 12, 24}) {
          FormDescriptor cand = dilated(rep.substitutions[j].chosen, t);
          if (expand(cand, prec) == s) {
            sub.chosen = cand;
            sub.method = "dilation";
            done = true;
            break;
          }
        }
      if (!done && s.is_integral() && std::all_of(s.coefficients().begin(), s.coefficients().end(),
                                                  [](const Rational& x) { return fits_i64(x); })) {
        const auto& pool = eta_pool();
        rep.eta_pool_size = pool.size();
        const auto target_order = static_cast<std::int64_t>(s.order());
        std::vector<EtaQuotientSpec> matches;
        for (const auto& spec : pool) {
          if (square_class(spec) != space.square_class) continue;
          if (spec.twenty_four_times_order() != 24 * target_order) continue;
          ++sub.candidates_tested;
          if (equal_mod64(eta_quotient_mod64(spec, prec), s) && eta_quotient(spec, prec) == s)
            matches.push_back(spec);
        }
        if (matches.size() == 1) {
          sub.chosen = single_eta(matches.front());
          sub.method = "eta-search";
          done = true;
        } else if (matches.size() > 1) {
          rep.failure = "column " + std::to_string(col + 1) + " matches several eta quotients";
          return rep;
        }
      }
      if (!done) {
        rep.failure = "column " + std::to_string(col + 1) + " could not be identified";
        return rep;
      }
      layout[col] = sub.chosen;
      rep.substitutions.push_back(std::move(sub));
    }
  }

  const Basis fixed = assemble_basis(space, BasisVariant::Remediated, layout, prec);
  rep.remediated_rank = rank(coefficient_matrix(fixed, prec - 1));
  rep.remediated_mismatched_rows = nonzero_rows(residuals(fixed, rows, thetas));
  rep.brute_force_nmax = static_cast<std::size_t>(kBruteForceNmax);
  for (const auto* r : rows) {
    const auto counts = count_representations_upto(r->form, kBruteForceNmax);
    for (std::int64_t n = 0; n <= kBruteForceNmax; ++n) {
      Rational v = 0;
      for (std::size_t i = 0; i < fixed.dimension(); ++i)
        v += r->entries[i] * fixed.elements[i].series[static_cast<std::size_t>(n)];
      if (v != counts[static_cast<std::size_t>(n)]) {
        ++rep.brute_force_failed_rows;
        break;
      }
    }
  }
  rep.layout = std::move(layout);
  rep.succeeded = rep.remediated_rank == space.dimension && rep.remediated_mismatched_rows == 0 &&
                  rep.brute_force_failed_rows == 0;
  if (!rep.succeeded && rep.failure.empty()) rep.failure = "remediated basis fails verification";
  return rep;
}

const RemediationReport& remediation(std::string_view space) {
  static std::mutex mu;
  static std::map<std::string, RemediationReport, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(space); it != cache.end()) return it->second;
  auto rep = run_remediation(space_id(space), kRecoveryPrec);
  return cache.emplace(std::string(space), std::move(rep)).first->second;
}

}  // namespace octarep
