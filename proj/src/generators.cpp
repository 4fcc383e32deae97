#include "octarep/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "octarep/errors.hpp"

namespace octarep {

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](auto& a, auto& b) { return a.d < b.d; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.d < 1) throw ConstraintViolation("d", "eta dilation must be positive, got " + std::to_string(f.d));
    if (f.r == 0) throw ConstraintViolation("r", "zero exponent for d=" + std::to_string(f.d));
    if (i > 0 && factors_[i - 1].d == f.d)
      throw ConstraintViolation("d", "dilation " + std::to_string(f.d) + " repeated");
  }
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw ParseError("malformed eta quotient '" + std::string(whole) + "'");
  return v;
}

}  // namespace

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
  std::vector<EtaFactor> fs;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    std::string_view tok = text.substr(i, j - i);
    std::string_view exp_part = "1";
    std::string_view d_part = tok;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      d_part = tok.substr(0, caret);
      exp_part = tok.substr(caret + 1);
      if (exp_part.size() >= 2 && exp_part.front() == '{' && exp_part.back() == '}')
        exp_part = exp_part.substr(1, exp_part.size() - 2);
    }
    fs.push_back({parse_int(d_part, text), parse_int(exp_part, text)});
    i = j;
  }
  if (fs.empty()) throw ParseError("empty eta quotient");
  return EtaQuotientSpec(std::move(fs));
}

Rational EtaQuotientSpec::weight() const {
  std::int64_t s = 0;
  for (auto& f : factors_) s += f.r;
  Rational w(s, 2);
  w.canonicalize();
  return w;
}

std::int64_t EtaQuotientSpec::twenty_four_times_order() const {
  std::int64_t s = 0;
  for (auto& f : factors_) s += f.d * f.r;
  return s;
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ' ';
    os << factors_[i].d << '^' << factors_[i].r;
  }
  return os.str();
}

QSeries theta_series(std::size_t prec) {
  std::vector<Rational> c(prec);
  c[0] = 1;
  for (std::size_t m = 1; m * m < prec; ++m) c[m * m] = 2;
  return QSeries(std::move(c));
}

QSeries borwein_F(std::size_t prec) {
  const auto n_max = static_cast<std::int64_t>(prec) - 1;
  // x^2+xy+y^2 >= (3/4) max(x^2, y^2)
  const std::int64_t bound = isqrt(4 * n_max / 3) + 1;
  std::vector<std::int64_t> counts(prec, 0);
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const std::int64_t v = x * x + x * y + y * y;
      if (v <= n_max) ++counts[static_cast<std::size_t>(v)];
    }
  return QSeries::from_integers(std::span<const std::int64_t>(counts));
}

namespace {

// Nonzero terms of prod_{n>=1}(1 - q^n) below `limit`: (exponent, sign).
std::vector<std::pair<std::size_t, int>> euler_terms(std::size_t limit) {
  std::vector<std::pair<std::size_t, int>> t{{0, 1}};
  for (std::size_t k = 1;; ++k) {
    const std::size_t a = k * (3 * k - 1) / 2;
    if (a >= limit) break;
    const int s = (k % 2) ? -1 : 1;
    t.emplace_back(a, s);
    const std::size_t b = k * (3 * k + 1) / 2;
    if (b < limit) t.emplace_back(b, s);
  }
  return t;
}

// Multiply (r > 0) or divide (r < 0) `c` in place by prod(1 - q^{dn}), |r| times.
// The factor is sparse, so each pass costs O(len * sqrt(len/d)).
template <class T>
void apply_eta_factor(std::vector<T>& c, std::int64_t d, std::int64_t r) {
  const std::size_t len = c.size();
  const auto step = static_cast<std::size_t>(d);
  std::vector<std::pair<std::size_t, int>> terms;
  for (auto [e, s] : euler_terms(len / step + 1))
    if (e * step < len && e > 0) terms.emplace_back(e * step, s);
  const std::int64_t reps = r > 0 ? r : -r;
  for (std::int64_t rep = 0; rep < reps; ++rep) {
    if (r > 0) {
      for (std::size_t n = len; n-- > 0;)
        for (auto [e, s] : terms) {
          if (e > n) break;
          if (s > 0) c[n] += c[n - e];
          else c[n] -= c[n - e];
        }
    } else {
      // y = x / E  <=>  y[n] = x[n] - sum_{e>0} s_e y[n-e]
      for (std::size_t n = 0; n < len; ++n)
        for (auto [e, s] : terms) {
          if (e > n) break;
          if (s > 0) c[n] -= c[n - e];
          else c[n] += c[n - e];
        }
    }
  }
}

std::size_t leading_exponent(const EtaQuotientSpec& spec) {
  const std::int64_t s = spec.twenty_four_times_order();
  if (s % 24 != 0)
    throw NonIntegralLeadingExponent("eta quotient " + spec.to_string() + " has leading exponent " +
                                     std::to_string(s) + "/24");
  if (s < 0)
    throw NegativeLeadingExponent("eta quotient " + spec.to_string() + " has leading exponent " +
                                  std::to_string(s / 24));
  return static_cast<std::size_t>(s / 24);
}

template <class T>
std::vector<T> expand_eta(const EtaQuotientSpec& spec, std::size_t prec) {
  const std::size_t e = leading_exponent(spec);
  std::vector<T> out(prec, T(0));
  if (e >= prec) return out;
  std::vector<T> body(prec - e, T(0));
  body[0] = T(1);
  for (auto& f : spec.factors()) apply_eta_factor(body, f.d, f.r);
  std::copy(body.begin(), body.end(), out.begin() + static_cast<std::ptrdiff_t>(e));
  return out;
}

}  // namespace

QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t prec) {
  auto c = expand_eta<Integer>(spec, prec);
  return QSeries::from_integers(std::span<const Integer>(c));
}

std::vector<std::uint64_t> eta_quotient_mod64(const EtaQuotientSpec& spec, std::size_t prec) {
  return expand_eta<std::uint64_t>(spec, prec);
}

QSeries eisenstein_Ek(unsigned k, std::size_t prec) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein_Ek needs even k >= 4");
  const Rational factor = Rational(-2 * static_cast<long>(k)) / bernoulli(k);
  std::vector<Rational> c(prec);
  c[0] = 1;
  for (std::size_t n = 1; n < prec; ++n) c[n] = factor * sigma(k - 1, static_cast<std::int64_t>(n));
  return QSeries(std::move(c));
}

QSeries eisenstein_char(unsigned k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                        std::size_t prec) {
  if (k == 0) throw std::invalid_argument("eisenstein_char needs k >= 1");
  const int sign = (chi.parity == Parity::Odd ? -1 : 1) * (psi.parity == Parity::Odd ? -1 : 1);
  if (sign != (k % 2 ? -1 : 1))
    throw ParityMismatch("E_{" + std::to_string(k) + "," + chi.label + "," + psi.label +
                         "}: character parity does not match weight");
  std::vector<Rational> c(prec);
  if (chi.is_trivial()) c[0] = -gen_bernoulli(k, psi) / Rational(2 * static_cast<long>(k));
  for (std::size_t n = 1; n < prec; ++n)
    c[n] = sigma_twisted(k - 1, chi, psi, static_cast<std::int64_t>(n));
  return QSeries(std::move(c));
}

}  // namespace octarep
