#include "octarep/linalg.hpp"

#include <stdexcept>

namespace octarep {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

namespace {

// Incremental echelon basis: each stored vector has a pivot position where
// it is 1 and every other stored vector is 0.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  // Reduce v against the basis; returns the coordinates used (per stored vector).
  std::vector<Rational> reduce(std::vector<Rational>& v) const {
    std::vector<Rational> coords(vecs_.size());
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      const Rational f = v[pivots_[i]];
      if (f == 0) continue;
      coords[i] = f;
      for (std::size_t j = 0; j < width_; ++j)
        if (vecs_[i][j] != 0) v[j] -= f * vecs_[i][j];
    }
    return coords;
  }

  // Adds v if independent; returns whether it was added.
  bool insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p == width_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& w : vecs_) {
      const Rational f = w[p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (v[j] != 0) w[j] -= f * v[j];
    }
    vecs_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const noexcept { return vecs_.size(); }

 private:
  std::size_t width_;
  std::vector<std::vector<Rational>> vecs_;
  std::vector<std::size_t> pivots_;
};

// Scale a rational row (plus rhs) by the lcm of its denominators.
std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].get_num() * (l / row[j].get_den());
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows() && e.size() < m.cols(); ++r) e.insert(m.row(r));
  return e.size();
}

std::vector<ColumnDependency> column_dependencies(const RationalMatrix& m) {
  // Columns are vectors in Q^rows; a column is dependent iff it reduces to 0.
  std::vector<ColumnDependency> deps;
  Echelon e(m.rows());
  std::vector<std::size_t> independent;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Rational> v = m.column(c);
    e.reduce(v);
    bool zero = true;
    for (auto& x : v)
      if (x != 0) zero = false;
    if (!zero) {
      e.insert(m.column(c));
      independent.push_back(c);
      continue;
    }
    // Re-express: solve for the column over the independent columns directly.
    RationalMatrix a(m.rows(), independent.size());
    RationalMatrix rhs(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t i = 0; i < independent.size(); ++i) a(r, i) = m(r, independent[i]);
      rhs(r, 0) = m(r, c);
    }
    ColumnDependency dep{c, {}, {}};
    if (auto sol = solve_all(a, rhs)) {
      for (std::size_t i = 0; i < independent.size(); ++i)
        if ((*sol)[0][i] != 0) {
          dep.support.push_back(independent[i]);
          dep.coefficients.push_back((*sol)[0][i]);
        }
    }
    deps.push_back(std::move(dep));
  }
  return deps;
}

std::vector<std::size_t> select_independent_rows(const RationalMatrix& m, std::size_t target) {
  Echelon e(m.cols());
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < m.rows() && rows.size() < target; ++r)
    if (e.insert(m.row(r))) rows.push_back(r);
  return rows;
}

std::optional<std::vector<Rational>> bareiss_solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("bareiss_solve: shape mismatch");
  // Augmented integer matrix [A | b], each row scaled independently.
  std::vector<std::vector<Integer>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row = a.row(i);
    row.push_back(b[i]);
    m[i] = integer_row(row);
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    std::size_t best_bits = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const std::size_t bits = mpz_sizeinbase(m[i][k].get_mpz_t(), 2);
      if (piv == n || bits < best_bits) {
        piv = i;
        best_bits = bits;
      }
    }
    if (piv == n) return std::nullopt;
    std::swap(m[k], m[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = Rational(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) s -= Rational(m[i][j]) * x[j];
    x[i] = s / Rational(m[i][i]);
    x[i].canonicalize();
  }
  return x;
}

std::optional<std::vector<std::vector<Rational>>> solve_all(const RationalMatrix& a, const RationalMatrix& rhs) {
  const std::size_t rows = a.rows(), u = a.cols(), k = rhs.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(u + k));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < u; ++c) m[r][c] = a(r, c);
    for (std::size_t c = 0; c < k; ++c) m[r][u + c] = rhs(r, c);
  }
  // Gauss-Jordan on the left block.
  std::size_t prow = 0;
  for (std::size_t c = 0; c < u; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = prow; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) return std::nullopt;  // rank deficient
    std::swap(m[prow], m[piv]);
    const Rational inv = 1 / m[prow][c];
    for (auto& x : m[prow]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j < u + k; ++j)
        if (m[prow][j] != 0) m[r][j] -= f * m[prow][j];
    }
    ++prow;
  }
  for (std::size_t r = u; r < rows; ++r)
    for (std::size_t j = u; j < u + k; ++j)
      if (m[r][j] != 0) return std::nullopt;
  std::vector<std::vector<Rational>> sol(k, std::vector<Rational>(u));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < u; ++i) sol[c][i] = m[i][u + c];
  return sol;
}

}  // namespace octarep
