#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "octarep/rational.hpp"

namespace octarep {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& m);

// A column that is a combination of earlier independent columns.
struct ColumnDependency {
  std::size_t column;                 // 0-based
  std::vector<std::size_t> support;   // earlier independent columns used
  std::vector<Rational> coefficients; // column = sum coefficients[i] * support[i]
};
std::vector<ColumnDependency> column_dependencies(const RationalMatrix& m);

// Greedy scan of rows 0, 1, 2, ...: the first rows that raise the rank, until
// `target` rows are found or rows run out.
std::vector<std::size_t> select_independent_rows(const RationalMatrix& m, std::size_t target);

// Solve the square system a x = b by fraction-free (Bareiss) elimination on
// integer-scaled rows. Pivot: smallest nonzero bit length in the column.
// Returns nullopt when a is singular.
std::optional<std::vector<Rational>> bareiss_solve(const RationalMatrix& a, const std::vector<Rational>& b);

// Solve a x = rhs_k for every right-hand side column at once (a need not be
// square). Returns nullopt if a lacks full column rank or any system is
// inconsistent; otherwise solutions[k] is the unique x for column k.
std::optional<std::vector<std::vector<Rational>>> solve_all(const RationalMatrix& a,
                                                            const RationalMatrix& rhs);

}  // namespace octarep
