#include "octarep/rational.hpp"

#include <climits>

#include "octarep/errors.hpp"

namespace octarep {

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

bool fits_i64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0 && sizeof(long) == 8; }

bool fits_i64(const Rational& r) { return is_integer(r) && fits_i64(r.get_num()); }

std::int64_t to_i64(const Integer& z) { return static_cast<std::int64_t>(z.get_si()); }

}  // namespace octarep
