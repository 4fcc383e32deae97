#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "octarep/rational.hpp"

namespace octarep {

enum class Parity { Even, Odd };

// Real character n -> kronecker(top, n), or the constant-1 character mod 1.
struct DirichletCharacter {
  std::string label;
  std::int64_t top = 1;
  std::int64_t modulus = 1;
  Parity parity = Parity::Even;

  bool is_trivial() const noexcept { return modulus == 1; }
  int operator()(std::int64_t n) const;
};

// Full Kronecker symbol (top / n), including n <= 0 and even n.
int kronecker(std::int64_t top, std::int64_t n);

int char_eval(const DirichletCharacter& chi, std::int64_t n);

// Catalog: "1", "chi8", "chi12", "chi24", "chi-3", "chi-4", "chi-8", "chi-12", "chi4".
// chi_m is kronecker(m, .), so m < 0 gives the odd character mod |m|.
const DirichletCharacter& character(std::string_view label);
std::span<const DirichletCharacter> character_catalog();

// sigma_k(n) for a positive integer n; 0 for n <= 0 or non-integral n.
Integer sigma(unsigned k, const Rational& n);
Integer sigma(unsigned k, std::int64_t n);

// sum over d | n of psi(d) * chi(n/d) * d^k.
Integer sigma_twisted(unsigned k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                      std::int64_t n);

// x/(e^x - 1) convention, so B_1 = -1/2.
Rational bernoulli(unsigned k);

// B_{k,psi}: sum_a psi(a) t e^{at}/(e^{ft} - 1) = sum_k B_{k,psi} t^k/k!, f the modulus.
// The mod-1 character returns bernoulli(k) (same B_1 convention).
Rational gen_bernoulli(unsigned k, const DirichletCharacter& psi);

// Largest s with s*s <= n, n >= 0.
std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);

}  // namespace octarep
