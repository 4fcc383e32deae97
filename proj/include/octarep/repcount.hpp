#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octarep/series.hpp"

namespace octarep {

enum class Family { A, B };

// Family A: a1 x1^2 + ... + a4 x4^2 + b1 H(x5,x6) + b2 H(x7,x8)
// Family B: H(x1,x2) + c1 H(x3,x4) + c2 H(x5,x6) + c3 H(x7,x8)
// with H(x,y) = x^2 + xy + y^2.
class QuadraticForm {
 public:
  // Throw ConstraintViolation naming the offending field.
  static QuadraticForm family_a(std::array<int, 4> a, std::array<int, 2> b);
  static QuadraticForm family_b(std::array<int, 3> c);
  // "A:a1,a2,a3,a4,b1,b2" or "B:c1,c2,c3".
  static QuadraticForm parse(std::string_view label);

  Family family() const noexcept { return family_; }
  const std::array<int, 4>& a() const noexcept { return a_; }
  const std::array<int, 2>& b() const noexcept { return b_; }
  const std::array<int, 3>& c() const noexcept { return c_; }

  // "A:1,1,1,1,1,1" / "B:1,1,2".
  std::string label() const;
  // Basis space: "trivial", "chi8", "chi12" or "chi24".
  std::string space() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  Family family_ = Family::A;
  std::array<int, 4> a_{};
  std::array<int, 2> b_{};
  std::array<int, 3> c_{};
};

// 90 family-A forms then the 19 family-B forms (c = (1,1,1) excluded), in
// lexicographic order within each family.
std::vector<QuadraticForm> enumerate_forms();

// Nested enumeration for a single n; the last block is solved in closed form.
std::int64_t count_representations(const QuadraticForm& form, std::int64_t n);

// Counts for every n in [0, n_max] by splitting the variables into two halves,
// tabulating each half and convolving.
std::vector<std::int64_t> count_representations_upto(const QuadraticForm& form, std::int64_t n_max);

QSeries theta_product(const QuadraticForm& form, std::size_t prec);

}  // namespace octarep
