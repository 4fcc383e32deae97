#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace octarep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A well-formed value outside the allowed domain; `field` names the culprit.
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class UnknownSeries : public Error {
 public:
  explicit UnknownSeries(const std::string& name) : Error("unknown series '" + name + "'") {}
};

class NonIntegralLeadingExponent : public Error {
 public:
  using Error::Error;
};

class NegativeLeadingExponent : public Error {
 public:
  using Error::Error;
};

class ParityMismatch : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  RankDeficient(std::string space, std::size_t rank, std::size_t dimension,
                std::vector<std::size_t> dependent_columns)
      : Error("basis for " + space + " has rank " + std::to_string(rank) + " < " +
              std::to_string(dimension)),
        space_(std::move(space)),
        rank_(rank),
        dimension_(dimension),
        dependent_(std::move(dependent_columns)) {}
  const std::string& space() const noexcept { return space_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t dimension() const noexcept { return dimension_; }
  // 1-based basis indices that depend on earlier columns.
  const std::vector<std::size_t>& dependent_columns() const noexcept { return dependent_; }

 private:
  std::string space_;
  std::size_t rank_;
  std::size_t dimension_;
  std::vector<std::size_t> dependent_;
};

class InconsistentSystem : public Error {
 public:
  InconsistentSystem(std::string form, std::size_t row)
      : Error("linear system for " + form + " fails at q^" + std::to_string(row)),
        form_(std::move(form)),
        row_(row) {}
  const std::string& form() const noexcept { return form_; }
  std::size_t row() const noexcept { return row_; }

 private:
  std::string form_;
  std::size_t row_;
};

}  // namespace octarep
