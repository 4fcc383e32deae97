#include "octarep/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "octarep/kernels.hpp"

namespace octarep {

QSeries::QSeries(std::size_t prec) : coeffs_(prec) {
  if (prec == 0) throw std::invalid_argument("QSeries precision must be positive");
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries precision must be positive");
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::from_integers(std::span<const std::int64_t> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.emplace_back(static_cast<long>(c));
  return QSeries(std::move(v));
}

QSeries QSeries::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> v(coeffs.begin(), coeffs.end());
  return QSeries(std::move(v));
}

const Rational& QSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond precision " +
                            std::to_string(coeffs_.size()));
  return coeffs_[n];
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

std::size_t QSeries::order() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] != 0) return n;
  return coeffs_.size();
}

QSeries QSeries::truncated(std::size_t prec) const {
  prec = std::min(prec, coeffs_.size());
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec)));
}

QSeries add(const QSeries& f, const QSeries& g) {
  const std::size_t p = std::min(f.prec(), g.prec());
  std::vector<Rational> out(p);
  for (std::size_t n = 0; n < p; ++n) out[n] = f[n] + g[n];
  return QSeries(std::move(out));
}

QSeries sub(const QSeries& f, const QSeries& g) {
  const std::size_t p = std::min(f.prec(), g.prec());
  std::vector<Rational> out(p);
  for (std::size_t n = 0; n < p; ++n) out[n] = f[n] - g[n];
  return QSeries(std::move(out));
}

QSeries scale(const QSeries& f, const Rational& c) {
  std::vector<Rational> out(f.prec());
  for (std::size_t n = 0; n < f.prec(); ++n) out[n] = c * f[n];
  return QSeries(std::move(out));
}

QSeries negate(const QSeries& f) { return scale(f, Rational(-1)); }

QSeries mul_reference(const QSeries& f, const QSeries& g) {
  const std::size_t p = std::min(f.prec(), g.prec());
  std::vector<Rational> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j < p; ++j)
      if (g[j] != 0) out[i + j] += f[i] * g[j];
  }
  return QSeries(std::move(out));
}

namespace {

// Integer coefficients of the first p terms when all fit comfortably in int64.
bool small_integers(const QSeries& f, std::size_t p, std::vector<std::int64_t>& out, Integer& max_abs) {
  out.resize(p);
  max_abs = 0;
  for (std::size_t n = 0; n < p; ++n) {
    if (!fits_i64(f[n])) return false;
    out[n] = to_i64(f[n].get_num());
    Integer a = abs(f[n].get_num());
    if (a > max_abs) max_abs = a;
  }
  return true;
}

}  // namespace

QSeries mul(const QSeries& f, const QSeries& g) {
  const std::size_t p = std::min(f.prec(), g.prec());
  std::vector<std::int64_t> a, b;
  Integer ma, mb;
  if (small_integers(f, p, a, ma) && small_integers(g, p, b, mb)) {
    // Every partial sum is bounded by p * max|a| * max|b|; stay below 2^62.
    const Integer bound = ma * mb * Integer(static_cast<unsigned long>(p));
    if (bound < (Integer(1) << 62)) {
      std::vector<std::int64_t> c(p);
      kernels::convolve(a, b, c);
      return QSeries::from_integers(std::span<const std::int64_t>(c));
    }
  }
  return mul_reference(f, g);
}

QSeries dilate(const QSeries& f, std::size_t d) {
  if (d == 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Rational> out(f.prec());
  for (std::size_t n = 0; n * d < f.prec(); ++n) out[n * d] = f[n];
  return QSeries(std::move(out));
}

QSeries twist(const QSeries& f, const DirichletCharacter& chi) {
  std::vector<Rational> out(f.prec());
  for (std::size_t n = 1; n < f.prec(); ++n) {
    const int w = chi(static_cast<std::int64_t>(n));
    if (w != 0) out[n] = w * f[n];
  }
  return QSeries(std::move(out));
}

}  // namespace octarep
