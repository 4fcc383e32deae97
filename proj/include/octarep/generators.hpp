#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octarep/arith.hpp"
#include "octarep/series.hpp"

namespace octarep {

struct EtaFactor {
  std::int64_t d;  // dilation, >= 1
  std::int64_t r;  // exponent, != 0
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

// prod_i eta(d_i z)^{r_i}, written "d1^r1 d2^r2 ...". Factors are kept sorted by d.
class EtaQuotientSpec {
 public:
  EtaQuotientSpec() = default;
  // Throws ConstraintViolation on repeated d, d < 1 or r == 0.
  explicit EtaQuotientSpec(std::vector<EtaFactor> factors);
  // "1^2 2^2 3^2 6^2"; exponents may be negative ("1^-1"), "d" alone means d^1.
  static EtaQuotientSpec parse(std::string_view text);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  // Weight = (sum r)/2.
  Rational weight() const;
  // sum d*r; the leading exponent is this over 24.
  std::int64_t twenty_four_times_order() const;
  std::string to_string() const;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;

 private:
  std::vector<EtaFactor> factors_;
};

// sum_{m in Z} q^{m^2}.
QSeries theta_series(std::size_t prec);
// sum_{x,y in Z} q^{x^2+xy+y^2}, by direct lattice enumeration.
QSeries borwein_F(std::size_t prec);
// q^e prod_i prod_{n>=1} (1 - q^{d_i n})^{r_i}, e = sum d_i r_i / 24.
QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t prec);
// Same product modulo 2^64 (wrapping); a cheap screen for candidate searches.
std::vector<std::uint64_t> eta_quotient_mod64(const EtaQuotientSpec& spec, std::size_t prec);
// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries eisenstein_Ek(unsigned k, std::size_t prec);
// c0 + sum_n (sum_{d|n} psi(d) chi(n/d) d^{k-1}) q^n with c0 = -B_{k,psi}/(2k) if chi
// is the mod-1 character, else 0. Throws ParityMismatch if chi(-1)psi(-1) != (-1)^k.
QSeries eisenstein_char(unsigned k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                        std::size_t prec);

}  // namespace octarep
