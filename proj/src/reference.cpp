#include "octarep/reference.hpp"

#include <sstream>

#include "octarep/errors.hpp"
#include "tables_text.hpp"

namespace octarep {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ReferenceTable> parse_reference_tables(std::string_view text) {
  std::vector<ReferenceTable> tables;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = "reference tables line " + std::to_string(lineno);
    if (t.rfind("table ", 0) == 0) {
      std::istringstream hs(t.substr(6));
      ReferenceTable tab;
      if (!(hs >> tab.id >> tab.space >> tab.dimension)) throw ParseError(where + ": bad table header");
      tables.push_back(std::move(tab));
      continue;
    }
    if (tables.empty()) throw ParseError(where + ": row before any table header");
    auto& tab = tables.back();
    const auto p1 = t.find('|');
    const auto p2 = p1 == std::string::npos ? p1 : t.find('|', p1 + 1);
    if (p2 == std::string::npos) throw ParseError(where + ": expected 'label | form | entries'");
    ReferenceRow row{trim(t.substr(0, p1)), QuadraticForm::parse(trim(t.substr(p1 + 1, p2 - p1 - 1))), {}};
    std::istringstream es(t.substr(p2 + 1));
    std::string tok;
    while (es >> tok) row.entries.push_back(parse_rational(tok));
    if (row.entries.size() != tab.dimension)
      throw ParseError(where + ": expected " + std::to_string(tab.dimension) + " entries, got " +
                       std::to_string(row.entries.size()));
    if (row.form.space() != tab.space)
      throw ParseError(where + ": form " + row.form.label() + " belongs to " + row.form.space());
    tab.rows.push_back(std::move(row));
  }
  return tables;
}

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> t = parse_reference_tables(embedded::kReferenceTablesText);
  return t;
}

const ReferenceTable& reference_table(int id) {
  for (const auto& t : reference_tables())
    if (t.id == id) return t;
  throw ConstraintViolation("table", "no reference table " + std::to_string(id) + " (expected 3..7)");
}

std::optional<ReferenceHit> find_reference_row(const QuadraticForm& form) {
  for (const auto& t : reference_tables())
    for (const auto& r : t.rows)
      if (r.form == form) return ReferenceHit{t.id, &r};
  return std::nullopt;
}

}  // namespace octarep
