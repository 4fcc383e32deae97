#include <doctest.h>

#include <map>

#include "octarep/errors.hpp"
#include "octarep/reference.hpp"
#include "octarep/repcount.hpp"

using namespace octarep;

TEST_CASE("form enumeration and spaces") {
  const auto forms = enumerate_forms();
  std::size_t a = 0, b = 0;
  std::map<std::string, std::size_t> per_space;
  for (const auto& f : forms) {
    (f.family() == Family::A ? a : b)++;
    if (f.family() == Family::A) per_space[f.space()]++;
  }
  CHECK(a == 90);
  CHECK(b == 19);
  CHECK(per_space["trivial"] == 36);
  CHECK(per_space["chi8"] == 18);
  CHECK(per_space["chi12"] == 18);
  CHECK(per_space["chi24"] == 18);
  // Every form appears in exactly one reference table.
  for (const auto& f : forms) CHECK(find_reference_row(f).has_value());
  CHECK_FALSE(find_reference_row(QuadraticForm::family_b({1, 1, 1})).has_value());
}

TEST_CASE("form labels and constraints") {
  const auto f = QuadraticForm::parse("A:1,1,2,3,1,4");
  CHECK(f.label() == "A:1,1,2,3,1,4");
  CHECK(f.space() == "chi24");
  CHECK(QuadraticForm::parse("B:2,4,8").space() == "trivial");
  try {
    (void)QuadraticForm::parse("A:3,1,1,1,1,1");
    FAIL("expected a constraint violation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.field() == "a2");
  }
  CHECK_THROWS_AS(QuadraticForm::parse("A:1,1,1,5,1,1"), ConstraintViolation);
  CHECK_THROWS_AS(QuadraticForm::parse("B:1,3,4"), ConstraintViolation);
  CHECK_THROWS_AS(QuadraticForm::parse("C:1"), ParseError);
  CHECK_THROWS_AS(QuadraticForm::parse("A:1,1"), ParseError);
}

TEST_CASE("small counts") {
  CHECK(count_representations(QuadraticForm::parse("A:1,1,1,1,1,1"), 0) == 1);
  CHECK(count_representations(QuadraticForm::parse("A:1,1,1,1,1,1"), 1) == 20);
  CHECK(count_representations(QuadraticForm::parse("A:1,1,2,3,1,1"), 1) == 16);
  CHECK(count_representations(QuadraticForm::parse("B:1,1,2"), 2) == 114);
  CHECK(count_representations(QuadraticForm::parse("B:1,1,2"), -1) == 0);
}

TEST_CASE("single-n, batched and theta-product counts agree for all forms") {
  constexpr std::int64_t kN = 40;
  for (const auto& f : enumerate_forms()) {
    CAPTURE(f.label());
    const auto batch = count_representations_upto(f, kN);
    const QSeries theta = theta_product(f, kN + 1);
    bool ok = true;
    for (std::int64_t n = 0; n <= kN; ++n) {
      const auto single = count_representations(f, n);
      ok = ok && single == batch[static_cast<std::size_t>(n)] && theta[static_cast<std::size_t>(n)] == single;
    }
    CHECK(ok);
  }
}

TEST_CASE("four hexagonal blocks: divisor-sum identity for small n") {
  const auto f = QuadraticForm::family_b({1, 1, 1});
  const auto c = count_representations_upto(f, 60);
  for (std::int64_t n = 1; n <= 60; ++n) {
    Integer want = 24 * sigma(3, n);
    if (n % 3 == 0) want += 216 * sigma(3, n / 3);
    CHECK(want == c[static_cast<std::size_t>(n)]);
  }
}
