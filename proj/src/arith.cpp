#include "octarep/arith.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

#include "octarep/errors.hpp"

namespace octarep {

namespace {

// Jacobi-style reduction for odd positive n.
int jacobi(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// (a/2): 0 for even a, else +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
int kronecker_two(std::int64_t a) {
  if (a % 2 == 0) return 0;
  std::int64_t r = a % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

const std::array<DirichletCharacter, 9>& catalog() {
  static const std::array<DirichletCharacter, 9> chars = [] {
    auto make = [](std::string label, std::int64_t top, std::int64_t modulus) {
      DirichletCharacter c;
      c.label = std::move(label);
      c.top = top;
      c.modulus = modulus;
      c.parity = kronecker(top, -1) == 1 ? Parity::Even : Parity::Odd;
      return c;
    };
    return std::array<DirichletCharacter, 9>{
        make("1", 1, 1),        make("chi8", 8, 8),    make("chi12", 12, 12),
        make("chi24", 24, 24),  make("chi-3", -3, 3),  make("chi-4", -4, 4),
        make("chi-8", -8, 8),   make("chi-12", -12, 12), make("chi4", 4, 4)};
  }();
  return chars;
}

Integer ipow(std::int64_t base, unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), k);
  return r;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    const int k2 = kronecker_two(a);
    if (k2 == 0) return 0;
    if (twos % 2 == 1) result *= k2;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

int DirichletCharacter::operator()(std::int64_t n) const {
  if (modulus == 1) return 1;
  return kronecker(top, n);
}

int char_eval(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

const DirichletCharacter& character(std::string_view label) {
  for (const auto& c : catalog())
    if (c.label == label) return c;
  throw ParseError("unknown character '" + std::string(label) + "'");
}

std::span<const DirichletCharacter> character_catalog() { return catalog(); }

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t s = isqrt(n);
  return s * s == n;
}

Integer sigma(unsigned k, std::int64_t n) {
  Integer total = 0;
  if (n <= 0) return total;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += ipow(d, k);
    if (d != n / d) total += ipow(n / d, k);
  }
  return total;
}

Integer sigma(unsigned k, const Rational& n) {
  if (!is_integer(n) || n <= 0 || !fits_i64(n)) return 0;
  return sigma(k, to_i64(n.get_num()));
}

Integer sigma_twisted(unsigned k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                      std::int64_t n) {
  Integer total = 0;
  if (n <= 0) return total;
  auto term = [&](std::int64_t d) {
    const int w = psi(d) * chi(n / d);
    if (w != 0) total += w * ipow(d, k);
  };
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    term(d);
    if (d != n / d) term(n / d);
  }
  return total;
}

Rational bernoulli(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  while (cache.size() <= k) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      acc += binom * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational b = -acc / Integer(m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[k];
}

Rational gen_bernoulli(unsigned k, const DirichletCharacter& psi) {
  if (psi.is_trivial()) return bernoulli(k);
  // B_{k,psi} = f^{k-1} sum_{a=1}^{f} psi(a) B_k(a/f), B_k(x) = sum_j C(k,j) B_j x^{k-j}.
  const std::int64_t f = psi.modulus;
  Rational total = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    const int w = psi(a);
    if (w == 0) continue;
    Rational x(a, f);
    x.canonicalize();
    Rational poly = 0;
    Integer binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      Rational xp;
      mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), k - j);
      mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), k - j);
      poly += binom * bernoulli(j) * xp;
      binom = binom * (k - j) / (j + 1);
    }
    total += w * poly;
  }
  if (k >= 1) total *= ipow(f, k - 1);
  else total /= Integer(f);
  total.canonicalize();
  return total;
}

}  // namespace octarep
