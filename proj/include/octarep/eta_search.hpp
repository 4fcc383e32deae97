#pragma once

// Exhaustive list of holomorphic eta quotients of a given level and weight,
// found through their orders of vanishing at the cusps of Gamma0(N).

#include <cstdint>
#include <vector>

#include "octarep/generators.hpp"

namespace octarep {

struct EtaPoolBounds {
  std::int64_t level = 24;
  unsigned weight = 4;
  std::int64_t max_abs_exponent = 14;
};

// Orders at the cusps 1/c for c | N (ascending c), by Ligozat's formula
// v_c = (N/24) sum_d gcd(c,d)^2 r_d / (gcd(c, N/c) c d).
std::vector<Rational> cusp_orders(const EtaQuotientSpec& spec, std::int64_t level);

// Every eta quotient on divisors of N with weight k, all cusp orders >= 0,
// |r_d| <= bound, sum d r_d = 0 mod 24 and sum (N/d) r_d = 0 mod 24.
// Orders are enumerated on the grid (1/H)Z, H = lcm of gcd(c, N/c), which
// covers the half-integral orders at irregular cusps.
std::vector<EtaQuotientSpec> holomorphic_eta_quotients(const EtaPoolBounds& bounds);

// Squarefree part of prod d^r; picks out the quadratic character of the quotient.
std::int64_t square_class(const EtaQuotientSpec& spec);

}  // namespace octarep
