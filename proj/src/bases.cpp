#include "octarep/bases.hpp"

#include <array>
#include <stdexcept>

#include "octarep/errors.hpp"

namespace octarep {

namespace {

const std::array<SpaceId, 4> kSpaces{{
    {"trivial", 16, 8, 8, 1},
    {"chi8", 14, 4, 10, 2},
    {"chi12", 16, 8, 8, 3},
    {"chi24", 14, 4, 10, 6},
}};

}  // namespace

std::span<const SpaceId> all_spaces() { return kSpaces; }

const SpaceId& space_id(std::string_view label) {
  for (const auto& s : kSpaces)
    if (s.character_label == label) return s;
  throw ConstraintViolation("space", "unknown space '" + std::string(label) +
                                         "' (expected trivial, chi8, chi12 or chi24)");
}

std::vector<FormDescriptor> printed_layout(const SpaceId& space) {
  const auto& cat = FormCatalog::builtin();
  std::vector<FormDescriptor> l;
  const std::string& s = space.character_label;
  if (s == "trivial") {
    for (std::size_t t : {1, 2, 3, 4, 6, 8, 12, 24}) l.push_back(eisenstein(4, "1", "1", t));
    for (std::size_t t : {1, 2, 4}) l.push_back(cat.form("f4_6", t));
    for (std::size_t t : {1, 3}) l.push_back(cat.form("f4_8", t));
    for (std::size_t t : {1, 2}) l.push_back(cat.form("f4_12", t));
    l.push_back(cat.form("f4_24_chi4"));
  } else if (s == "chi8") {
    for (std::size_t t : {1, 3}) l.push_back(eisenstein(4, "1", "chi8", t));
    for (std::size_t t : {1, 3}) l.push_back(eisenstein(4, "chi8", "1", t));
    for (const char* n : {"f4_8_chi8_1", "f4_8_chi8_2"})
      for (std::size_t t : {1, 3}) l.push_back(cat.form(n, t));
    for (int j = 1; j <= 6; ++j) l.push_back(cat.form("f4_24_chi8_" + std::to_string(j)));
  } else if (s == "chi12") {
    for (std::size_t t : {1, 2}) {
      l.push_back(eisenstein(4, "1", "chi12", t));
      l.push_back(eisenstein(4, "chi12", "1", t));
      l.push_back(eisenstein(4, "chi-4", "chi-3", t));
      l.push_back(eisenstein(4, "chi-3", "chi-4", t));
    }
    for (std::size_t t : {1, 2})
      for (int j = 1; j <= 4; ++j) l.push_back(cat.form("f4_12_chi12_" + std::to_string(j), t));
  } else if (s == "chi24") {
    l.push_back(eisenstein(4, "1", "chi24"));
    l.push_back(eisenstein(4, "chi24", "1"));
    l.push_back(eisenstein(4, "chi-8", "chi-3"));
    l.push_back(eisenstein(4, "chi-3", "chi-8"));
    for (int j = 1; j <= 10; ++j) l.push_back(cat.form("f4_24_chi24_" + std::to_string(j)));
  } else {
    throw std::logic_error("no layout for space " + s);
  }
  if (l.size() != space.dimension) throw std::logic_error("layout size mismatch for " + s);
  return l;
}

Basis assemble_basis(const SpaceId& space, BasisVariant variant, std::vector<FormDescriptor> layout,
                     std::size_t prec) {
  Basis b{space, variant, prec, {}};
  b.elements.reserve(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    QSeries s = expand(layout[i], prec);
    b.elements.push_back({i + 1, std::move(layout[i]), std::move(s)});
  }
  return b;
}

RationalMatrix coefficient_matrix(const Basis& basis, std::size_t n_max) {
  RationalMatrix m(n_max + 1, basis.dimension());
  for (std::size_t j = 0; j < basis.dimension(); ++j) {
    const QSeries& s = basis.elements[j].series;
    if (s.prec() <= n_max) throw std::invalid_argument("coefficient_matrix: basis precision too low");
    for (std::size_t n = 0; n <= n_max; ++n) m(n, j) = s[n];
  }
  return m;
}

RankReport rank_report(const Basis& basis, std::size_t n_max) {
  const RationalMatrix m = coefficient_matrix(basis, n_max);
  RankReport r{rank(m), {}};
  if (r.rank < basis.dimension()) r.dependencies = column_dependencies(m);
  return r;
}

Basis build_basis(const SpaceId& space, std::size_t prec, BasisVariant variant) {
  if (prec < space.dimension + 8)
    throw std::invalid_argument("build_basis: precision must be at least dimension + 8");
  std::vector<FormDescriptor> layout;
  if (variant == BasisVariant::Remediated) {
    const auto& rep = remediation(space.character_label);
    layout = rep.succeeded ? rep.layout : printed_layout(space);
  } else {
    layout = printed_layout(space);
  }
  Basis b = assemble_basis(space, variant, std::move(layout), prec);
  const RankReport rr = rank_report(b, prec - 1);
  if (rr.rank < space.dimension) {
    std::vector<std::size_t> cols;
    for (const auto& d : rr.dependencies) cols.push_back(d.column + 1);
    throw RankDeficient(space.character_label, rr.rank, space.dimension, std::move(cols));
  }
  return b;
}

}  // namespace octarep
