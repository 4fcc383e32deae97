#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octarep/catalog.hpp"
#include "octarep/linalg.hpp"

namespace octarep {

struct SpaceId {
  std::string character_label;  // "trivial", "chi8", "chi12", "chi24"
  std::size_t dimension;
  std::size_t eisenstein_dim;
  std::size_t cusp_dim;
  std::int64_t square_class;    // 1, 2, 3, 6: the character is kronecker(4*class, .)
};

std::span<const SpaceId> all_spaces();
const SpaceId& space_id(std::string_view label);

struct BasisElement {
  std::size_t index;  // 1-based, aligned with the reference table columns
  FormDescriptor descriptor;
  QSeries series;
};

enum class BasisVariant {
  Printed,     // catalog exactly as transcribed
  Remediated,  // printed, with table-implied repairs applied (see remediation())
};

struct Basis {
  SpaceId space;
  BasisVariant variant;
  std::size_t prec;
  std::vector<BasisElement> elements;
  std::size_t dimension() const { return elements.size(); }
};

// Ordered descriptors of the transcribed spanning set.
std::vector<FormDescriptor> printed_layout(const SpaceId& space);

// Expands descriptors in order without any rank check.
Basis assemble_basis(const SpaceId& space, BasisVariant variant, std::vector<FormDescriptor> layout,
                     std::size_t prec);

// Throws RankDeficient when the coefficient matrix over n < prec has rank
// below the dimension. Requires prec >= dimension + 8.
Basis build_basis(const SpaceId& space, std::size_t prec, BasisVariant variant = BasisVariant::Remediated);

// Rows n = 0..n_max, one column per element.
RationalMatrix coefficient_matrix(const Basis& basis, std::size_t n_max);

struct RankReport {
  std::size_t rank;
  std::vector<ColumnDependency> dependencies;  // 0-based columns
};
RankReport rank_report(const Basis& basis, std::size_t n_max);

// ---- remediation -------------------------------------------------------

struct Substitution {
  std::size_t column;  // 1-based
  FormDescriptor printed;
  FormDescriptor chosen;
  std::string method;  // "relabel", "dilation" or "eta-search"
  std::size_t candidates_tested = 0;
};

struct RemediationReport {
  std::string space;
  std::size_t recovery_prec = 0;
  std::size_t printed_rank = 0;
  std::vector<ColumnDependency> printed_dependencies;
  std::size_t reference_rows = 0;
  // Rows whose transcribed vector fails to reproduce the theta product in the
  // printed basis.
  std::size_t printed_mismatched_rows = 0;
  bool needed = false;
  // Minimal sets of columns whose replacement makes every row consistent (1-based).
  std::vector<std::vector<std::size_t>> minimal_column_sets;
  std::vector<Substitution> substitutions;
  std::size_t eta_pool_size = 0;
  std::size_t remediated_rank = 0;
  std::size_t remediated_mismatched_rows = 0;
  // Rows whose transcribed vector, contracted with the remediated basis,
  // disagrees with lattice counts for n <= brute_force_nmax.
  std::size_t brute_force_nmax = 0;
  std::size_t brute_force_failed_rows = 0;
  bool succeeded = false;
  std::string failure;
  std::vector<FormDescriptor> layout;  // layout used by BasisVariant::Remediated
};

// Runs the protocol once per space and caches it (thread-safe):
//   1. build the printed basis, report rank and dependent columns;
//   2. check every reference row against the theta product;
//   3. if anything fails, find the minimal column sets whose values the
//      table rows determine consistently and recover those columns;
//   4. identify each recovered column as a relabelled printed column, a
//      dilation of an earlier substitute, or a unique holomorphic eta
//      quotient from the exhaustive pool;
//   5. confirm full rank, exact table agreement and lattice counts.
const RemediationReport& remediation(std::string_view space);
RemediationReport run_remediation(const SpaceId& space, std::size_t recovery_prec);

}  // namespace octarep
