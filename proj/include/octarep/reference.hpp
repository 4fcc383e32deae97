#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octarep/repcount.hpp"

namespace octarep {

struct ReferenceRow {
  std::string row_label;  // e.g. "(1111,11)"
  QuadraticForm form;
  std::vector<Rational> entries;
};

struct ReferenceTable {
  int id = 0;
  std::string space;
  std::size_t dimension = 0;
  std::vector<ReferenceRow> rows;
};

std::vector<ReferenceTable> parse_reference_tables(std::string_view text);
// The tables compiled into the library (ids 3..7).
const std::vector<ReferenceTable>& reference_tables();
const ReferenceTable& reference_table(int id);

struct ReferenceHit {
  int table_id;
  const ReferenceRow* row;
};
std::optional<ReferenceHit> find_reference_row(const QuadraticForm& form);

}  // namespace octarep
