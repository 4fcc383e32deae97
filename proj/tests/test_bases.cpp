#include <doctest.h>

#include <algorithm>

#include "octarep/bases.hpp"
#include "octarep/errors.hpp"
#include "octarep/eta_search.hpp"

using namespace octarep;

TEST_CASE("linear algebra primitives") {
  RationalMatrix a(2, 2);
  a(0, 0) = 2, a(0, 1) = 1, a(1, 0) = 1, a(1, 1) = 3;
  const auto x = bareiss_solve(a, {Rational(5), Rational(10)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 3);
  RationalMatrix s(2, 3);
  s(0, 0) = 1, s(0, 1) = 2, s(0, 2) = 3, s(1, 0) = 2, s(1, 1) = 4, s(1, 2) = Rational(1, 2);
  CHECK(rank(s) == 2);
  const auto deps = column_dependencies(s);
  REQUIRE(deps.size() == 1);
  CHECK(deps[0].column == 1);
  CHECK(deps[0].coefficients[0] == 2);
  RationalMatrix sing(2, 2);
  sing(0, 0) = 1, sing(0, 1) = 2, sing(1, 0) = 2, sing(1, 1) = 4;
  CHECK_FALSE(bareiss_solve(sing, {Rational(1), Rational(2)}));
  CHECK(select_independent_rows(s, 2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("catalog entries have weight 4 and the stated leading exponents") {
  const auto& cat = FormCatalog::builtin();
  CHECK(cat.entries().size() == 27);
  CHECK(expand(cat.form("f4_6"), 10).order() == 1);
  CHECK(expand(cat.form("f4_8"), 10).order() == 1);
  CHECK(expand(cat.form("f4_12"), 10).order() == 1);
  for (const auto& e : cat.entries()) {
    CAPTURE(e.name);
    CHECK(e.form.is_cusp_form());
    const QSeries s = expand(e.form, 40);
    CHECK(s[0] == 0);
    CHECK(s.order() < 40);
  }
  CHECK_THROWS(FormCatalog::parse("bad | eta 1^2 | x"));
}

TEST_CASE("printed ranks and the chi24 deficiency") {
  for (const auto& s : all_spaces()) {
    CAPTURE(s.character_label);
    const Basis b = assemble_basis(s, BasisVariant::Printed, printed_layout(s), 2 * s.dimension + 1);
    const auto r = rank_report(b, 2 * s.dimension);
    CHECK(r.rank == (s.character_label == "chi24" ? 13 : s.dimension));
  }
  try {
    (void)build_basis(space_id("chi24"), 60, BasisVariant::Printed);
    FAIL("expected RankDeficient");
  } catch (const RankDeficient& e) {
    CHECK(e.rank() == 13);
    CHECK(e.dimension() == 14);
    CHECK(e.dependent_columns() == std::vector<std::size_t>{11});
  }
  CHECK_THROWS_AS(space_id("chi5"), ConstraintViolation);
}

TEST_CASE("remediation outcomes") {
  for (const char* s : {"trivial", "chi12"}) {
    const auto& r = remediation(s);
    CHECK_FALSE(r.needed);
    CHECK(r.succeeded);
    CHECK(r.substitutions.empty());
  }
  const auto& c8 = remediation("chi8");
  CHECK(c8.needed);
  CHECK(c8.printed_rank == 14);
  CHECK(c8.printed_mismatched_rows == 18);
  CHECK(c8.minimal_column_sets == std::vector<std::vector<std::size_t>>{{7, 8}});
  REQUIRE(c8.substitutions.size() == 2);
  CHECK(c8.substitutions[0].method == "eta-search");
  CHECK(c8.substitutions[0].chosen.label() == "[1^2 2^1 4^-1 8^6](z)");
  CHECK(c8.substitutions[1].method == "dilation");
  CHECK(c8.substitutions[1].chosen.label() == "[1^2 2^1 4^-1 8^6](3z)");
  CHECK(c8.succeeded);

  const auto& c24 = remediation("chi24");
  CHECK(c24.printed_rank == 13);
  CHECK(c24.minimal_column_sets == std::vector<std::vector<std::size_t>>{{9, 10}});
  REQUIRE(c24.substitutions.size() == 2);
  CHECK(c24.substitutions[0].chosen.label() == "[3^2 4^-1 6^1 8^2 24^4](z)");
  CHECK(c24.substitutions[1].method == "relabel");
  CHECK(c24.substitutions[1].chosen.label() == "f4_24_chi24_5(z)");
  CHECK(c24.remediated_rank == 14);
  CHECK(c24.remediated_mismatched_rows == 0);
  CHECK(c24.brute_force_failed_rows == 0);
  CHECK(c24.succeeded);
  CHECK(build_basis(space_id("chi24"), 40).dimension() == 14);
}

TEST_CASE("eta quotient pool") {
  const auto pool = holomorphic_eta_quotients(EtaPoolBounds{});
  CHECK(pool.size() > 100);
  auto has = [&](const char* text) {
    return std::find(pool.begin(), pool.end(), EtaQuotientSpec::parse(text)) != pool.end();
  };
  // Every eta quotient used by the catalog is holomorphic, so it must be in the pool.
  for (const auto& e : FormCatalog::builtin().entries())
    for (const auto& t : e.form.terms) {
      CAPTURE(e.name);
      CHECK(std::find(pool.begin(), pool.end(), t.spec) != pool.end());
    }
  CHECK(has("1^2 2^1 4^-1 8^6"));
  CHECK(has("3^2 4^-1 6^1 8^2 24^4"));
  CHECK_FALSE(has("1^-24 2^32"));
  CHECK(square_class(EtaQuotientSpec::parse("1^2 2^1 4^-1 8^6")) == 2);
  CHECK(square_class(EtaQuotientSpec::parse("3^2 4^-1 6^1 8^2 24^4")) == 6);
  const auto orders = cusp_orders(EtaQuotientSpec::parse("1^2 2^2 3^2 6^2"), 24);
  CHECK(orders.size() == 8);
  CHECK(orders.back() == 1);  // cusp at infinity
  for (const auto& v : pool)
    for (const auto& o : cusp_orders(v, 24)) CHECK(o >= 0);
}
