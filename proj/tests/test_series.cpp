#include <doctest.h>

#include <stdexcept>

#include "octarep/series.hpp"
#include "properties.hpp"

using namespace octarep;

TEST_CASE("ring axioms on random series") {
  const auto r = testing::series_ring_axioms(testing::kSeed, 100);
  INFO(r.first_failure());
  CHECK(r.ok());
}

TEST_CASE("dilation composes and twist is involutive on coprime indices") {
  const auto d = testing::dilation_composition();
  INFO(d.first_failure());
  CHECK(d.ok());
  const auto t = testing::twist_involution();
  INFO(t.first_failure());
  CHECK(t.ok());
}

TEST_CASE("unknown coefficients are never read") {
  const QSeries f(std::vector<Rational>{1, 2, 3});
  CHECK(f[2] == 3);
  CHECK_THROWS_AS((void)f[3], std::out_of_range);
  CHECK(f.truncated(2).prec() == 2);
}

TEST_CASE("products truncate to the shorter precision") {
  const QSeries f(std::vector<Rational>{1, 1, 1, 1, 1}), g(std::vector<Rational>{1, -1, 0});
  const QSeries h = f * g;
  CHECK(h.prec() == 3);
  CHECK(h == QSeries(std::vector<Rational>{1, 0, 0}));
}

TEST_CASE("large coefficients fall back to exact GMP multiplication") {
  std::vector<Rational> c(10, Rational(Integer("123456789012345678901234567890")));
  const QSeries f(c);
  CHECK(f * f == mul_reference(f, f));
  CHECK((f * f)[1] == 2 * c[0] * c[0]);
}

TEST_CASE("order and integrality") {
  const QSeries f(std::vector<Rational>{0, 0, Rational(1, 2), 1});
  CHECK(f.order() == 2);
  CHECK_FALSE(f.is_integral());
  CHECK(QSeries(4).order() == 4);
}
