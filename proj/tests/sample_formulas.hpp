#pragma once

// Ten closed-form representation-number formulas written as divisor sums plus
// cusp-form coefficients. Cusp terms name the (repaired) basis column whose
// q^n coefficient they contribute; Eisenstein parts use twisted sigma values.

#include <string>
#include <vector>

#include "octarep/arith.hpp"
#include "octarep/bases.hpp"

namespace octarep::testing {

struct FormulaTerm {
  enum class Kind { Sigma, Column } kind;
  Rational coefficient;
  // Sigma: sigma_{3;chi,psi}(n/t); zero unless t | n.
  std::string chi = "1", psi = "1";
  std::int64_t t = 1;
  // Column: 1-based basis column, evaluated at n.
  std::size_t column = 0;
};

struct SampleFormula {
  std::string form;
  std::vector<FormulaTerm> terms;
};

inline FormulaTerm sig(Rational c, std::int64_t t, std::string chi = "1", std::string psi = "1") {
  return {FormulaTerm::Kind::Sigma, std::move(c), std::move(chi), std::move(psi), t, 0};
}
inline FormulaTerm col(Rational c, std::size_t column) {
  return {FormulaTerm::Kind::Column, std::move(c), "1", "1", 1, column};
}
inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline std::vector<SampleFormula> sample_formulas() {
  std::vector<SampleFormula> f;
  // Trivial space: f4_6 is column 9, f4_6(2z) column 10, f4_12 column 14.
  f.push_back({"A:1,1,1,1,1,1",
               {sig(q(112, 5), 1), sig(q(-84, 5), 2), sig(q(-432, 5), 3), sig(q(-448, 5), 4), sig(q(324, 5), 6),
                sig(q(1728, 5), 12), col(q(-72, 5), 9), col(q(-288, 5), 10), col(q(12), 14)}});
  f.push_back({"A:1,1,1,1,1,2",
               {sig(q(52, 5), 1), sig(q(-78, 5), 2), sig(q(108, 5), 3), sig(q(416, 5), 4), sig(q(-324, 5), 6),
                sig(q(864, 5), 12), col(q(48, 5), 9), col(q(96, 5), 10), col(q(-6), 14)}});
  // chi8: columns 5..8 are the two level-8 cusp forms at z and 3z, 9..14 the level-24 ones.
  f.push_back({"A:1,1,1,2,1,1",
               {sig(q(-26, 451), 1, "1", "chi8"), sig(q(108, 451), 3, "1", "chi8"), sig(q(6656, 451), 1, "chi8", "1"),
                sig(q(27648, 451), 3, "chi8", "1"), col(q(168, 451), 5), col(q(11448, 451), 6),
                col(q(-2496, 451), 7), col(q(-17280, 451), 8), col(q(24, 41), 9), col(q(936, 41), 10),
                col(q(144, 41), 11), col(q(-384, 41), 12), col(q(4032, 41), 13), col(q(-48, 41), 14)}});
  f.push_back({"A:1,1,1,2,1,2",
               {sig(q(28, 451), 1, "1", "chi8"), sig(q(54, 451), 3, "1", "chi8"), sig(q(3584, 451), 1, "chi8", "1"),
                sig(q(-6912, 451), 3, "chi8", "1"), col(q(480, 451), 5), col(q(-2052, 451), 6),
                col(q(-2688, 451), 7), col(q(1728, 451), 8), col(q(-60, 41), 9), col(q(216, 41), 10),
                col(q(-108, 41), 11), col(q(-2112, 41), 12), col(q(-1440, 41), 13), col(q(288, 41), 14)}});
  // chi12: cusp forms in columns 9..12.
  f.push_back({"A:1,1,1,3,1,1",
               {sig(q(1, 23), 1, "1", "chi12"), sig(q(288, 23), 1, "chi12", "1"), sig(q(32, 23), 1, "chi-4", "chi-3"),
                sig(q(9, 23), 1, "chi-3", "chi-4"), col(q(84, 23), 9), col(q(720, 23), 10), col(q(336, 23), 11),
                col(q(864, 23), 12)}});
  f.push_back({"A:1,1,1,3,1,2",
               {sig(q(1, 23), 1, "1", "chi12"), sig(q(144, 23), 1, "chi12", "1"), sig(q(-16, 23), 1, "chi-4", "chi-3"),
                sig(q(-9, 23), 1, "chi-3", "chi-4"), col(q(156, 23), 9), col(q(-48, 23), 10), col(q(-168, 23), 11),
                col(q(-456, 23), 12)}});
  // chi24: cusp forms in columns 5..14.
  f.push_back({"A:1,1,2,3,1,1",
               {sig(q(1, 261), 1, "1", "chi24"), sig(q(256, 29), 1, "chi24", "1"), sig(q(-256, 261), 1, "chi-8", "chi-3"),
                sig(q(-1, 29), 1, "chi-3", "chi-8"), col(q(1808, 87), 5), col(q(656, 29), 6), col(q(-2056, 87), 7),
                col(q(-3808, 29), 8), col(q(-4144, 29), 9), col(q(736, 3), 10), col(q(472, 3), 11),
                col(q(-41984, 87), 12), col(q(-1096, 87), 13), col(q(-968, 87), 14)}});
  f.push_back({"A:1,1,2,3,1,2",
               {sig(q(1, 261), 1, "1", "chi24"), sig(q(128, 29), 1, "chi24", "1"), sig(q(128, 261), 1, "chi-8", "chi-3"),
                sig(q(1, 29), 1, "chi-3", "chi-8"), col(q(208, 87), 5), col(q(-32, 29), 6), col(q(-284, 87), 7),
                col(q(-368, 29), 8), col(q(1048, 29), 9), col(q(-6224, 87), 10), col(q(-7100, 87), 11),
                col(q(21248, 87), 12), col(q(8, 3), 13), col(q(500, 87), 14)}});
  // Family B.
  f.push_back({"B:1,1,2", {sig(q(18), 1), sig(q(-48), 2), sig(q(-162), 3), sig(q(432), 6)}});
  f.push_back({"B:1,1,4",
               {sig(q(36, 5), 1), sig(q(-48), 2), sig(q(324, 5), 3), sig(q(192, 5), 4), sig(q(-972, 5), 6),
                sig(q(1728, 5), 12), col(q(54, 5), 9), col(q(432, 5), 10)}});
  return f;
}

// Printed coefficients that contradict both the reference tables and the
// lattice counts. Term index is into SampleFormula::terms.
struct FormulaCorrection {
  std::string form;
  std::size_t term;
  Rational printed;
  Rational corrected;
};

inline std::vector<FormulaCorrection> formula_corrections() {
  return {
      {"A:1,1,1,1,1,2", 4, q(-324, 5), q(-162, 5)},  // sigma3(n/6)
      {"B:1,1,4", 1, q(-48), q(-108, 5)},            // sigma3(n/2)
  };
}

inline SampleFormula corrected(SampleFormula f) {
  for (const auto& c : formula_corrections())
    if (c.form == f.form && f.terms.at(c.term).coefficient == c.printed) f.terms[c.term].coefficient = c.corrected;
  return f;
}

// Value at n >= 1.
inline Rational evaluate(const SampleFormula& f, const Basis& basis, std::int64_t n) {
  Rational s = 0;
  for (const auto& t : f.terms) {
    if (t.kind == FormulaTerm::Kind::Column) {
      s += t.coefficient * basis.elements.at(t.column - 1).series[static_cast<std::size_t>(n)];
    } else if (n % t.t == 0) {
      s += t.coefficient * Rational(sigma_twisted(3, character(t.chi), character(t.psi), n / t.t));
    }
  }
  return s;
}

}  // namespace octarep::testing
