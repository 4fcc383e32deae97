#include "octarep/catalog.hpp"

#include <cctype>
#include <sstream>

#include "catalog_text.hpp"
#include "octarep/errors.hpp"

namespace octarep {

std::string FormDescriptor::label() const {
  std::ostringstream os;
  if (kind == Kind::Eisenstein) {
    os << 'E' << k;
    if (chi != "1" || psi != "1") os << '[' << chi << ',' << psi << ']';
  } else if (!name.empty()) {
    os << name;
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& t = terms[i];
      if (i) os << (t.coefficient < 0 ? " - " : " + ");
      else if (t.coefficient < 0) os << '-';
      if (abs(t.coefficient) != 1) os << to_string(Rational(abs(t.coefficient))) << '*';
      os << '[' << t.spec.to_string() << ']';
    }
    if (twist) os << " x " << *twist;
  }
  if (dilation == 1) os << "(z)";
  else os << '(' << dilation << "z)";
  return os.str();
}

QSeries expand(const FormDescriptor& desc, std::size_t prec) {
  QSeries s(prec);
  if (desc.kind == FormDescriptor::Kind::Eisenstein) {
    if (desc.chi == "1" && desc.psi == "1") s = eisenstein_Ek(desc.k, prec);
    else s = eisenstein_char(desc.k, character(desc.chi), character(desc.psi), prec);
  } else {
    for (const auto& t : desc.terms) s = add(s, scale(eta_quotient(t.spec, prec), t.coefficient));
    if (desc.twist) s = twist(s, character(*desc.twist));
  }
  return desc.dilation == 1 ? s : dilate(s, desc.dilation);
}

FormDescriptor eisenstein(unsigned k, std::string chi, std::string psi, std::size_t dilation) {
  FormDescriptor d;
  d.kind = FormDescriptor::Kind::Eisenstein;
  d.k = k;
  d.chi = std::move(chi);
  d.psi = std::move(psi);
  d.dilation = dilation;
  return d;
}

FormDescriptor single_eta(const EtaQuotientSpec& spec, std::size_t dilation) {
  FormDescriptor d;
  d.terms.push_back({Rational(1), spec});
  d.dilation = dilation;
  return d;
}

FormDescriptor dilated(FormDescriptor desc, std::size_t dilation) {
  desc.dilation *= dilation;
  return desc;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

void validate(const EtaQuotientSpec& spec, const std::string& name) {
  if (spec.weight() != 4)
    throw ParseError("catalog entry " + name + ": eta quotient " + spec.to_string() + " has weight " +
                     to_string(spec.weight()));
  const auto s = spec.twenty_four_times_order();
  if (s % 24 != 0 || s < 0)
    throw ParseError("catalog entry " + name + ": leading exponent " + std::to_string(s) + "/24");
}

// "combo 1 [1^-1 2^2] -1 [1^3 2^2]"
std::vector<EtaTerm> parse_combo(std::string_view body, const std::string& name) {
  std::vector<EtaTerm> terms;
  std::size_t i = 0;
  while (i < body.size()) {
    const auto open = body.find('[', i);
    if (open == std::string_view::npos) {
      if (!trim(body.substr(i)).empty()) throw ParseError("catalog entry " + name + ": trailing text");
      break;
    }
    const auto close = body.find(']', open);
    if (close == std::string_view::npos) throw ParseError("catalog entry " + name + ": unbalanced '['");
    const std::string coef = trim(body.substr(i, open - i));
    if (coef.empty()) throw ParseError("catalog entry " + name + ": missing coefficient");
    terms.push_back({parse_rational(coef), EtaQuotientSpec::parse(body.substr(open + 1, close - open - 1))});
    i = close + 1;
  }
  if (terms.empty()) throw ParseError("catalog entry " + name + ": empty combination");
  return terms;
}

}  // namespace

FormCatalog FormCatalog::parse(std::string_view text) {
  FormCatalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto fields = split(t, '|');
    if (fields.size() != 3)
      throw ParseError("catalog line " + std::to_string(lineno) + ": expected 'name | definition | note'");
    CatalogEntry e;
    e.name = fields[0];
    e.note = fields[2];
    if (e.name.empty()) throw ParseError("catalog line " + std::to_string(lineno) + ": empty name");
    if (cat.contains(e.name)) throw ParseError("catalog: duplicate name " + e.name);
    const std::string& def = fields[1];
    const auto sp = def.find(' ');
    const std::string kind = def.substr(0, sp);
    const std::string body = sp == std::string::npos ? "" : trim(def.substr(sp + 1));
    if (kind == "eta") {
      e.form = single_eta(EtaQuotientSpec::parse(body));
    } else if (kind == "combo") {
      e.form.terms = parse_combo(body, e.name);
    } else if (kind == "twist") {
      auto parts = split(body, ' ');
      if (parts.size() != 2) throw ParseError("catalog entry " + e.name + ": twist needs <base> <character>");
      e.form = cat.at(parts[0]).form;
      if (e.form.twist) throw ParseError("catalog entry " + e.name + ": nested twist");
      character(parts[1]);  // validates the label
      e.form.twist = parts[1];
    } else {
      throw ParseError("catalog entry " + e.name + ": unknown definition kind '" + kind + "'");
    }
    for (const auto& term : e.form.terms) validate(term.spec, e.name);
    e.form.name = e.name;
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

const FormCatalog& FormCatalog::builtin() {
  static const FormCatalog cat = parse(embedded::kCatalogText);
  return cat;
}

bool FormCatalog::contains(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& FormCatalog::at(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw UnknownSeries(std::string(name));
}

FormDescriptor FormCatalog::form(std::string_view name, std::size_t dilation) const {
  return dilated(at(name).form, dilation);
}

QSeries named_series(std::string_view name, std::size_t prec) {
  const std::string n(name);
  if (n == "theta") return theta_series(prec);
  if (n == "F") return borwein_F(prec);
  // Inline specs report their own parse errors rather than UnknownSeries.
  if (n.find('^') != std::string::npos) return eta_quotient(EtaQuotientSpec::parse(n), prec);
  if (n.size() >= 2 && n[0] == 'E' && std::isdigit(static_cast<unsigned char>(n[1]))) {
    auto parts = split(n.substr(1), '_');
    unsigned k = 0;
    try {
      k = static_cast<unsigned>(std::stoul(parts[0]));
    } catch (...) {
      throw UnknownSeries(n);
    }
    if (parts.size() == 1 && k >= 4 && k % 2 == 0) return eisenstein_Ek(k, prec);
    if (parts.size() == 3 && k >= 1) {
      try {
        return eisenstein_char(k, character(parts[1]), character(parts[2]), prec);
      } catch (const ParseError&) {
        throw UnknownSeries(n);
      }
    }
    throw UnknownSeries(n);
  }
  const auto& cat = FormCatalog::builtin();
  if (!cat.contains(n)) throw UnknownSeries(n);
  return expand(cat.at(n).form, prec);
}

}  // namespace octarep
