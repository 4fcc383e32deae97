#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <span>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octarep/bases.hpp"
#include "octarep/catalog.hpp"
#include "octarep/errors.hpp"
#include "octarep/kernels.hpp"
#include "octarep/repcount.hpp"
#include "octarep/solver.hpp"

namespace octarep::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Records };

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kInternal = 3;

// Numbers right-aligned, text left-aligned.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> w;
    std::vector<bool> numeric;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& r = rows_[k];
      if (w.size() < r.size()) w.resize(r.size(), 0), numeric.resize(r.size(), true);
      for (std::size_t i = 0; i < r.size(); ++i) {
        w[i] = std::max(w[i], r[i].size());
        if (k > 0 && r[i].find_first_not_of("0123456789-/") != std::string::npos) numeric[i] = false;
      }
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) line += "  ";
        const std::string pad(w[i] - r[i].size(), ' ');
        line += numeric[i] ? pad + r[i] : r[i] + pad;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

Json rationals(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Rational> parse_coefficients(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    v.push_back(parse_rational(item));
  }
  return v;
}

// n range from --n / --nmax: a single n, or 0..nmax.
std::pair<std::int64_t, std::int64_t> n_range(const std::optional<std::int64_t>& n,
                                              const std::optional<std::int64_t>& nmax) {
  if (n && nmax) throw ParseError("--n and --nmax are mutually exclusive");
  if (!n && !nmax) throw ParseError("one of --n or --nmax is required");
  const std::int64_t lo = n ? *n : 0, hi = n ? *n : *nmax;
  if (lo < 0 || hi < 0) throw ConstraintViolation("n", "must be non-negative");
  return {lo, hi};
}

Json verify_record(const VerifyReport& r) {
  Json j{{"kind", "verify"}, {"form", r.form}, {"space", r.space}, {"nmax", r.n_max}, {"ok", r.ok()}};
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back({{"n", v.n}, {"formula", to_string(v.formula)}, {"count", v.count}});
  j["violations"] = vs;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string descriptor_text(const FormDescriptor& d) { return d.label(); }

struct Options {
  Format format = Format::Table;
  std::size_t prec = kDefaultPrecision;
  std::string series;
  std::string form;
  std::string coeffs;
  std::string space;
  std::string basis_variant = "remediated";
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> nmax;
  std::optional<int> table;
  bool all = false;
  unsigned jobs = 0;
};

int cmd_expand(const Options& o, std::ostream& out) {
  const QSeries s = named_series(o.series, o.prec);
  if (o.format == Format::Records) {
    out << Json{{"kind", "expand"}, {"series", o.series}, {"prec", o.prec}, {"coefficients", rationals(s.coefficients())}}
               .dump()
        << '\n';
  } else {
    TextTable t({"n", o.series});
    for (std::size_t i = 0; i < s.prec(); ++i) t.add({std::to_string(i), to_string(s[i])});
    t.print(out);
  }
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const QuadraticForm f = QuadraticForm::parse(o.form);
  const auto [lo, hi] = n_range(o.n, o.nmax);
  std::vector<std::int64_t> counts;
  if (lo == hi) {
    counts.push_back(count_representations(f, lo));
  } else {
    counts = count_representations_upto(f, hi);
  }
  TextTable t({"n", "count"});
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t c = counts[static_cast<std::size_t>(n - lo)];
    if (o.format == Format::Records)
      out << Json{{"kind", "count"}, {"form", f.label()}, {"n", n}, {"count", c}}.dump() << '\n';
    else
      t.add({std::to_string(n), std::to_string(c)});
  }
  if (o.format == Format::Table) t.print(out);
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const QuadraticForm f = QuadraticForm::parse(o.form);
  const auto basis = cached_basis(f.space(), o.prec);
  const CoefficientVector v = solve_coefficients(f, *basis);
  if (o.format == Format::Records) {
    Json labels = Json::array();
    for (const auto& e : basis->elements) labels.push_back(descriptor_text(e.descriptor));
    out << Json{{"kind", "solve"},         {"form", f.label()},   {"space", v.space},
                {"prec", o.prec},          {"rows_checked", v.rows_checked},
                {"coefficients", rationals(v.entries)}, {"basis", labels}}
               .dump()
        << '\n';
  } else {
    out << f.label() << " in " << v.space << ", checked on q^0..q^" << v.rows_checked - 1 << '\n';
    TextTable t({"i", "basis element", "coefficient"});
    for (std::size_t i = 0; i < v.entries.size(); ++i)
      t.add({std::to_string(i + 1), descriptor_text(basis->elements[i].descriptor), to_string(v.entries[i])});
    t.print(out);
  }
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const QuadraticForm f = QuadraticForm::parse(o.form);
  const auto [lo, hi] = n_range(o.n, o.nmax);
  const auto basis = cached_basis(f.space(), std::max<std::size_t>(o.prec, static_cast<std::size_t>(hi) + 1));
  CoefficientVector v{f.space(), parse_coefficients(o.coeffs), {}, 0};
  if (v.entries.size() != basis->dimension())
    throw ConstraintViolation("coeffs", "expected " + std::to_string(basis->dimension()) + " coefficients, got " +
                                            std::to_string(v.entries.size()));
  TextTable t({"n", "value"});
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Rational val = eval_formula(v, *basis, static_cast<std::size_t>(n));
    if (o.format == Format::Records)
      out << Json{{"kind", "eval"}, {"form", f.label()}, {"n", n}, {"value", to_string(val)}}.dump() << '\n';
    else
      t.add({std::to_string(n), to_string(val)});
  }
  if (o.format == Format::Table) t.print(out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.all == !o.form.empty()) throw ParseError("verify needs exactly one of --form or --all");
  const std::int64_t nmax = o.nmax.value_or(40);
  if (nmax < 0) throw ConstraintViolation("nmax", "must be non-negative");
  const std::vector<QuadraticForm> forms = o.all ? enumerate_forms() : std::vector{QuadraticForm::parse(o.form)};

  // Warm the shared caches before fanning out.
  const std::size_t prec = std::max<std::size_t>(o.prec, static_cast<std::size_t>(nmax) + 1);
  for (const auto& s : all_spaces()) {
    bool used = false;
    for (const auto& f : forms) used = used || f.space() == s.character_label;
    if (used) cached_basis(s.character_label, prec);
  }

  std::vector<VerifyReport> reports(forms.size());
  unsigned workers = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(forms.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < forms.size(); i = next++) reports[i] = verify_form(forms[i], nmax, prec);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::size_t failed = 0;
  TextTable t({"form", "space", "nmax", "result"});
  for (const auto& r : reports) {
    if (!r.ok()) ++failed;
    if (o.format == Format::Records) {
      out << verify_record(r).dump() << '\n';
      continue;
    }
    std::string result = "ok";
    if (!r.error.empty()) {
      result = "error: " + r.error;
    } else if (!r.violations.empty()) {
      const auto& v = r.violations.front();
      result = std::to_string(r.violations.size()) + " violations, first n=" + std::to_string(v.n) +
               " formula=" + to_string(v.formula) + " count=" + std::to_string(v.count);
    }
    t.add({r.form, r.space, std::to_string(r.n_max), result});
  }
  if (o.format == Format::Table) {
    t.print(out);
    out << forms.size() - failed << "/" << forms.size() << " forms agree with lattice counts for n <= " << nmax
        << '\n';
  }
  return failed ? kVerifyFailed : kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  BasisVariant variant;
  if (o.basis_variant == "remediated") variant = BasisVariant::Remediated;
  else if (o.basis_variant == "printed") variant = BasisVariant::Printed;
  else throw ConstraintViolation("basis", "expected printed or remediated");
  if (o.table && (*o.table < 3 || *o.table > 7)) throw ConstraintViolation("table", "expected 3..7");

  const TableAudit audit = diff_tables(o.prec, variant, o.table);

  // Group entries by row.
  struct RowSummary {
    const TableDiff* first;
    std::vector<const TableDiff*> mismatches;
  };
  std::vector<RowSummary> rows;
  for (const auto& d : audit.diffs) {
    if (rows.empty() || rows.back().first->table != d.table || rows.back().first->form != d.form)
      rows.push_back({&d, {}});
    if (!d.match) rows.back().mismatches.push_back(&d);
  }

  std::size_t erratum = 0, broken = 0;
  std::vector<std::string> t_errata;
  TextTable t({"table", "row", "form", "status", "details"});
  for (const auto& r : rows) {
    const TableDiff& f = *r.first;
    std::string status = "match";
    if (!r.mismatches.empty()) {
      const bool ours_ok = r.mismatches.front()->computed_reproduces_counts.value_or(false);
      status = ours_ok ? "erratum" : "BROKEN";
      ++(ours_ok ? erratum : broken);
    }
    if (o.format == Format::Records) {
      Json j{{"kind", "diff"}, {"table", f.table}, {"row", f.row_label}, {"form", f.form}, {"status", status}};
      if (!r.mismatches.empty()) {
        Json m = Json::array();
        for (const auto* d : r.mismatches)
          m.push_back({{"column", d->column}, {"printed", to_string(d->printed)}, {"computed", to_string(d->computed)}});
        j["mismatches"] = m;
        j["printed_reproduces_counts"] = r.mismatches.front()->printed_reproduces_counts.value_or(false);
        j["computed_reproduces_counts"] = r.mismatches.front()->computed_reproduces_counts.value_or(false);
      }
      out << j.dump() << '\n';
    } else {
      std::string details;
      for (const auto* d : r.mismatches) {
        if (!details.empty()) details += "; ";
        details += "col " + std::to_string(d->column) + ": " + to_string(d->printed) + " -> " + to_string(d->computed);
      }
      t.add({std::to_string(f.table), f.row_label, f.form, status, details});
    }
  }
  // Basis-level errata: every table row above was solved in the repaired basis.
  std::size_t substitutions = 0;
  if (variant == BasisVariant::Remediated)
    for (const auto& t : reference_tables()) {
      if (o.table && t.id != *o.table) continue;
      for (const auto& s : remediation(t.space).substitutions) {
        ++substitutions;
        if (o.format == Format::Records)
          out << Json{{"kind", "erratum"},          {"table", t.id},
                      {"space", t.space},           {"column", s.column},
                      {"printed", descriptor_text(s.printed)}, {"chosen", descriptor_text(s.chosen)},
                      {"method", s.method}}
                     .dump()
              << '\n';
        else
          t_errata.push_back("table " + std::to_string(t.id) + " column " + std::to_string(s.column) + ": " +
                             descriptor_text(s.printed) + " replaced by " + descriptor_text(s.chosen) + " (" +
                             s.method + ")");
      }
    }
  for (const auto& e : audit.errors) {
    if (o.format == Format::Records)
      out << Json{{"kind", "diff"}, {"error", e}}.dump() << '\n';
    else
      t.add({"-", "-", "-", "ERROR", e});
  }
  if (o.format == Format::Table) {
    t.print(out);
    for (const auto& e : t_errata) out << "erratum: " << e << '\n';
    out << rows.size() << " rows audited, " << rows.size() - erratum - broken << " match, " << erratum
        << " entry errata, " << broken << " broken, " << audit.errors.size() << " errors, " << substitutions
        << " basis substitutions\n";
  }
  if (!audit.errors.empty()) return kInternal;
  return broken ? kVerifyFailed : kOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const SpaceId& space = space_id(o.space);
  const RemediationReport& rep = remediation(space.character_label);
  if (o.format == Format::Records) {
    Json deps = Json::array();
    for (const auto& d : rep.printed_dependencies) deps.push_back(d.column + 1);
    Json sets = Json::array();
    for (const auto& s : rep.minimal_column_sets) sets.push_back(s);
    Json subs = Json::array();
    for (const auto& s : rep.substitutions)
      subs.push_back({{"column", s.column},
                      {"printed", descriptor_text(s.printed)},
                      {"chosen", descriptor_text(s.chosen)},
                      {"method", s.method},
                      {"candidates_tested", s.candidates_tested}});
    Json layout = Json::array();
    for (const auto& d : rep.layout) layout.push_back(descriptor_text(d));
    out << Json{{"kind", "basis"},
                {"space", rep.space},
                {"dimension", space.dimension},
                {"printed_rank", rep.printed_rank},
                {"printed_dependent_columns", deps},
                {"reference_rows", rep.reference_rows},
                {"printed_mismatched_rows", rep.printed_mismatched_rows},
                {"remediation_needed", rep.needed},
                {"minimal_column_sets", sets},
                {"substitutions", subs},
                {"eta_pool_size", rep.eta_pool_size},
                {"remediated_rank", rep.remediated_rank},
                {"remediated_mismatched_rows", rep.remediated_mismatched_rows},
                {"brute_force_failed_rows", rep.brute_force_failed_rows},
                {"succeeded", rep.succeeded},
                {"failure", rep.failure},
                {"layout", layout}}
               .dump()
        << '\n';
  } else {
    out << "space " << rep.space << ", dimension " << space.dimension << '\n';
    out << "printed basis rank " << rep.printed_rank;
    for (const auto& d : rep.printed_dependencies) out << (&d == &rep.printed_dependencies.front() ? ", dependent columns " : " ") << d.column + 1;
    out << '\n';
    out << "reference rows " << rep.reference_rows << ", inconsistent with printed basis " << rep.printed_mismatched_rows
        << '\n';
    for (const auto& s : rep.substitutions)
      out << "column " << s.column << ": " << descriptor_text(s.printed) << " -> " << descriptor_text(s.chosen) << " ("
          << s.method << ")\n";
    if (rep.needed)
      out << "remediated rank " << rep.remediated_rank << ", inconsistent rows " << rep.remediated_mismatched_rows
          << ", rows failing counts " << rep.brute_force_failed_rows << '\n';
    if (!rep.failure.empty()) out << "remediation failed: " << rep.failure << '\n';
    TextTable t({"i", "basis element"});
    for (std::size_t i = 0; i < rep.layout.size(); ++i) t.add({std::to_string(i + 1), descriptor_text(rep.layout[i])});
    t.print(out);
  }
  return rep.succeeded ? kOk : kInternal;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-expansions, lattice counts and representation-number formulas at level 24", "octarep"};
  app.require_subcommand(1);
  Options o;
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--isa", [](const CLI::results_t& r) {
       if (r[0] == "scalar") kernels::set_active_isa(kernels::Isa::Scalar);
       else if (r[0] == "avx2") kernels::set_active_isa(kernels::Isa::Avx2);
       else return false;
       return true;
     }, "Force an integer kernel variant (scalar, avx2)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
    sub->add_option("--prec", o.prec, "Series precision (coefficients q^0..q^{prec-1})")->check(CLI::Range(1, 100000));
  };

  auto* expand = app.add_subcommand("expand", "Print q-expansion coefficients of a named series");
  expand->add_option("--series", o.series, "theta, F, E4, E4_chi8_1, f4_6, ..., or an eta quotient such as '1^2 2^2'")
      ->required();
  add_common(expand);

  auto* count = app.add_subcommand("count", "Count lattice vectors by brute force");
  count->add_option("--form", o.form, "A:a1,a2,a3,a4,b1,b2 or B:c1,c2,c3")->required();
  count->add_option("--n", o.n, "Single n");
  count->add_option("--nmax", o.nmax, "All n in 0..nmax");
  add_common(count);

  auto* solve = app.add_subcommand("solve", "Solve for the basis coefficients of a form's theta product");
  solve->add_option("--form", o.form, "A:a1,a2,a3,a4,b1,b2 or B:c1,c2,c3")->required();
  add_common(solve);

  auto* eval = app.add_subcommand("eval", "Evaluate a coefficient vector against the form's basis");
  eval->add_option("--form", o.form, "Form whose space selects the basis")->required();
  eval->add_option("--coeffs", o.coeffs, "Comma-separated rationals, one per basis element")->required();
  eval->add_option("--n", o.n, "Single n");
  eval->add_option("--nmax", o.nmax, "All n in 0..nmax");
  add_common(eval);

  auto* verify = app.add_subcommand("verify", "Check solved formulas against lattice counts");
  verify->add_option("--form", o.form, "A single form");
  verify->add_flag("--all", o.all, "All 109 forms");
  verify->add_option("--nmax", o.nmax, "Check 0 <= n <= nmax (default 40)");
  verify->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  add_common(verify);

  auto* tables = app.add_subcommand("tables", "Diff solved vectors against the reference tables");
  tables->add_option("--table", o.table, "Table id (3..7); default all");
  tables->add_option("--basis", o.basis_variant, "printed or remediated")
      ->check(CLI::IsMember({"printed", "remediated"}));
  add_common(tables);

  auto* basis = app.add_subcommand("basis", "Report rank and remediation of a space's basis");
  basis->add_option("--space", o.space, "trivial, chi8, chi12 or chi24")->required();
  basis->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.format = format == "records" ? Format::Records : Format::Table;

  try {
    if (*expand) return cmd_expand(o, out);
    if (*count) return cmd_count(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*basis) return cmd_basis(o, out);
  } catch (const InconsistentSystem& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const RankDeficient& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const ConstraintViolation& e) {
    err << "error: constraint violation on " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace octarep::cli
