#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "octarep/arith.hpp"
#include "octarep/rational.hpp"

namespace octarep {

inline constexpr std::size_t kDefaultPrecision = 200;

// Truncated power series sum_{n < prec} a(n) q^n with exact rational
// coefficients. Immutable; every operation returns a new value.
class QSeries {
 public:
  // Zero series with `prec` known coefficients (prec >= 1).
  explicit QSeries(std::size_t prec);
  // Takes ownership of the coefficients; prec = coeffs.size() >= 1.
  explicit QSeries(std::vector<Rational> coeffs);
  static QSeries from_integers(std::span<const std::int64_t> coeffs);
  static QSeries from_integers(std::span<const Integer> coeffs);

  std::size_t prec() const noexcept { return coeffs_.size(); }
  // Throws std::out_of_range for n >= prec: unknown coefficients are never invented.
  const Rational& operator[](std::size_t n) const;
  const Rational& coeff(std::size_t n) const { return (*this)[n]; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_integral() const;
  // Index of the first nonzero coefficient, or prec() if all known ones vanish.
  std::size_t order() const;
  QSeries truncated(std::size_t prec) const;

  friend bool operator==(const QSeries& f, const QSeries& g) = default;

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries scale(const QSeries& f, const Rational& c);
QSeries negate(const QSeries& f);
// Cauchy product to min(f.prec, g.prec). Integral inputs with bounded
// magnitude take the int64 kernel path; everything else stays in GMP.
QSeries mul(const QSeries& f, const QSeries& g);
// f(z) -> f(dz), keeping f.prec.
QSeries dilate(const QSeries& f, std::size_t d);
// a(n) -> chi(n) a(n) for n >= 1, constant term -> 0.
QSeries twist(const QSeries& f, const DirichletCharacter& chi);

inline QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
inline QSeries operator-(const QSeries& f, const QSeries& g) { return sub(f, g); }
inline QSeries operator-(const QSeries& f) { return negate(f); }
inline QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }
inline QSeries operator*(const Rational& c, const QSeries& f) { return scale(f, c); }

// Schoolbook GMP product with no fast path; kept public as a test oracle.
QSeries mul_reference(const QSeries& f, const QSeries& g);

}  // namespace octarep
