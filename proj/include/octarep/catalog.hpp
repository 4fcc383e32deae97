#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octarep/generators.hpp"

namespace octarep {

struct EtaTerm {
  Rational coefficient;
  EtaQuotientSpec spec;
};

// Source of truth for a basis element; the series is derived from it.
struct FormDescriptor {
  enum class Kind { Eisenstein, EtaCombo };
  Kind kind = Kind::EtaCombo;
  // Eisenstein: weight and characters. chi = psi = "1" means the normalized E_k.
  unsigned k = 4;
  std::string chi = "1", psi = "1";
  // EtaCombo: sum of coefficient * eta quotient, optionally twisted.
  std::vector<EtaTerm> terms;
  std::optional<std::string> twist;
  // Applied last: f(z) -> f(dilation z).
  std::size_t dilation = 1;
  // Catalog name when the element comes from the catalog, else empty.
  std::string name;

  std::string label() const;
  bool is_cusp_form() const { return kind == Kind::EtaCombo; }
};

QSeries expand(const FormDescriptor& desc, std::size_t prec);

FormDescriptor eisenstein(unsigned k, std::string chi, std::string psi, std::size_t dilation = 1);
FormDescriptor single_eta(const EtaQuotientSpec& spec, std::size_t dilation = 1);
FormDescriptor dilated(FormDescriptor desc, std::size_t dilation);

struct CatalogEntry {
  std::string name;
  FormDescriptor form;  // dilation 1
  std::string note;
};

class FormCatalog {
 public:
  // Parses the "name | definition | note" format; validates that every eta
  // quotient has weight 4 and a non-negative integral leading exponent.
  static FormCatalog parse(std::string_view text);
  // The catalog compiled into the library.
  static const FormCatalog& builtin();

  const CatalogEntry& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::span<const CatalogEntry> entries() const { return entries_; }
  FormDescriptor form(std::string_view name, std::size_t dilation = 1) const;

 private:
  std::vector<CatalogEntry> entries_;
};

// Resolves a user-facing series name: theta, F, E<k>, E<k>_<chi>_<psi>
// (e.g. E4_1_chi8, E4_chi-4_chi-3), any catalog name, or an inline eta
// quotient such as "1^2 2^2 3^2 6^2". Throws UnknownSeries.
QSeries named_series(std::string_view name, std::size_t prec);

}  // namespace octarep
