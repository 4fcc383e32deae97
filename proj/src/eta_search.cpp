#include "octarep/eta_search.hpp"

#include <numeric>
#include <stdexcept>

#include "octarep/linalg.hpp"

namespace octarep {

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Ligozat matrix: orders = A * r, rows indexed by cusp c, columns by d.
RationalMatrix order_matrix(std::int64_t level) {
  const auto ds = divisors(level);
  RationalMatrix a(ds.size(), ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const std::int64_t c = ds[i], d = ds[j];
      const std::int64_t g = std::gcd(c, d);
      Rational v(level * g * g, 24 * std::gcd(c, level / c) * c * d);
      v.canonicalize();
      a(i, j) = v;
    }
  return a;
}

struct Enumerator {
  std::size_t m;
  std::vector<std::int64_t> weight;     // phi(gcd(c, N/c)) per cusp
  std::vector<std::vector<std::int64_t>> cols;  // scaled inverse columns
  std::int64_t denom;
  std::vector<std::int64_t> ds;
  EtaPoolBounds bounds;
  std::vector<std::int64_t> acc;
  std::vector<EtaQuotientSpec> out;

  void leaf() {
    std::vector<EtaFactor> fs;
    std::int64_t sum_r = 0, s_inf = 0, s_zero = 0;
    const std::int64_t level = bounds.level;
    for (std::size_t j = 0; j < m; ++j) {
      if (acc[j] % denom != 0) return;
      const std::int64_t r = acc[j] / denom;
      if (r > bounds.max_abs_exponent || r < -bounds.max_abs_exponent) return;
      sum_r += r;
      s_inf += ds[j] * r;
      s_zero += (level / ds[j]) * r;
      if (r != 0) fs.push_back({ds[j], r});
    }
    if (sum_r != 2 * static_cast<std::int64_t>(bounds.weight)) return;
    if (s_inf % 24 != 0 || s_zero % 24 != 0) return;
    out.emplace_back(std::move(fs));
  }

  void recurse(std::size_t i, std::int64_t budget) {
    if (i + 1 == m) {
      if (budget % weight[i] != 0) return;
      const std::int64_t u = budget / weight[i];
      for (std::size_t j = 0; j < m; ++j) acc[j] += u * cols[i][j];
      leaf();
      for (std::size_t j = 0; j < m; ++j) acc[j] -= u * cols[i][j];
      return;
    }
    for (std::int64_t u = 0; u * weight[i] <= budget; ++u) {
      recurse(i + 1, budget - u * weight[i]);
      for (std::size_t j = 0; j < m; ++j) acc[j] += cols[i][j];
    }
    // Undo the increments applied after each branch.
    const std::int64_t steps = budget / weight[i] + 1;
    for (std::size_t j = 0; j < m; ++j) acc[j] -= steps * cols[i][j];
  }
};

}  // namespace

std::vector<Rational> cusp_orders(const EtaQuotientSpec& spec, std::int64_t level) {
  const auto ds = divisors(level);
  const RationalMatrix a = order_matrix(level);
  std::vector<Rational> r(ds.size());
  for (const auto& f : spec.factors()) {
    bool found = false;
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (ds[j] == f.d) {
        r[j] = f.r;
        found = true;
      }
    if (!found) throw std::invalid_argument("eta dilation does not divide the level");
  }
  std::vector<Rational> v(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j) v[i] += a(i, j) * r[j];
  return v;
}

std::vector<EtaQuotientSpec> holomorphic_eta_quotients(const EtaPoolBounds& bounds) {
  const std::int64_t n = bounds.level;
  const auto ds = divisors(n);
  const std::size_t m = ds.size();
  const RationalMatrix a = order_matrix(n);

  std::int64_t h = 1;
  std::vector<std::int64_t> weight(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t g = std::gcd(ds[i], n / ds[i]);
    h = std::lcm(h, g);
    weight[i] = euler_phi(g);
  }
  // Index of Gamma0(N) in SL2(Z); the weighted orders sum to k * index / 12.
  Rational index(n);
  {
    std::int64_t t = n;
    for (std::int64_t p = 2; p <= t; ++p)
      if (t % p == 0) {
        while (t % p == 0) t /= p;
        index *= Rational(p + 1, p);
      }
  }
  Rational total = index * Rational(static_cast<long>(bounds.weight) * h, 12);
  total.canonicalize();
  if (total.get_den() != 1) return {};

  RationalMatrix ident(m, m);
  for (std::size_t i = 0; i < m; ++i) ident(i, i) = 1;
  auto inv = solve_all(a, ident);
  if (!inv) throw std::logic_error("cusp order matrix is singular");
  // inv[k] is column k of A^{-1}; scale by 1/h and clear denominators.
  Integer l = 1;
  for (auto& col : *inv)
    for (auto& x : col) {
      x /= h;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
  Enumerator e;
  e.m = m;
  e.weight = weight;
  e.denom = l.get_si();
  e.ds = ds;
  e.bounds = bounds;
  e.acc.assign(m, 0);
  e.cols.assign(m, std::vector<std::int64_t>(m));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t j = 0; j < m; ++j) {
      Rational x = (*inv)[c][j] * l;
      e.cols[c][j] = x.get_num().get_si();
    }
  e.recurse(0, total.get_num().get_si());
  return std::move(e.out);
}

std::int64_t square_class(const EtaQuotientSpec& spec) {
  // Parity of the exponent of each prime in prod d^r.
  std::vector<std::pair<std::int64_t, std::int64_t>> exps;
  for (const auto& f : spec.factors()) {
    std::int64_t d = f.d;
    for (std::int64_t p = 2; p * p <= d || d > 1; ++p) {
      if (p * p > d) p = d;
      std::int64_t e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      if (e == 0) continue;
      bool seen = false;
      for (auto& [q, s] : exps)
        if (q == p) {
          s += e * f.r;
          seen = true;
        }
      if (!seen) exps.emplace_back(p, e * f.r);
    }
  }
  std::int64_t cls = 1;
  for (auto& [p, s] : exps)
    if (s % 2 != 0) cls *= p;
  return cls;
}

}  // namespace octarep
