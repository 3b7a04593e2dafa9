#include "pmd/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pmd/counting.hpp"
#include "pmd/generation.hpp"
#include "pmd/structure.hpp"

namespace pmd::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { json, csv, text };

struct Options {
  std::size_t n = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> m;
  std::optional<std::size_t> s;
  std::string family;
  std::string layer;
  std::string format = "json";
  std::size_t budget = kDefaultBudget;
  bool no_timing = false;
  std::string by = "formula";
  std::string input;
  std::string factor;
  std::string strategy = "direct";
  bool starred = false;
  bool verify = false;
  bool list_elements = false;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  if (f == "text") return Format::text;
  throw UsageError("unknown format '" + f + "' (expected json, csv or text)");
}

Family require_family(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  const auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  return *f;
}

FamilySpec family_spec(const Options& o) {
  FamilySpec spec{require_family(o), o.n, o.r};
  validate(spec);
  return spec;
}

FamilySpec theorem_spec(const Options& o, std::initializer_list<Family> allowed) {
  const Family f = require_family(o);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw UsageError("family " + std::string(family_name(f)) + " is not supported by this command");
  }
  if (o.n < 3) throw UsageError("structural checks require n >= 3");
  return FamilySpec{f, o.n, o.r.value_or(o.n)};
}

std::string csv_field(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void emit(const Report& report, const Options& o, std::ostream& out) {
  switch (parse_format(o.format)) {
    case Format::json:
      out << report.to_json(!o.no_timing).dump(2) << '\n';
      break;
    case Format::text:
      out << report.to_text();
      break;
    case Format::csv:
      out << "name,status,expected,actual\n";
      for (const auto& a : report.assertions()) {
        out << csv_field(a.name) << ',' << status_name(a.status) << ',' << csv_field(a.expected) << ','
            << csv_field(a.actual) << '\n';
      }
      break;
  }
}

int finish(Report& report, const Stopwatch& watch, const Options& o, std::ostream& out) {
  report.set_seconds(watch.seconds());
  emit(report, o, out);
  return report.passed() ? kExitPass : kExitFail;
}

int emit_elements(const std::string& label, const std::vector<PartialTransformation>& elements,
                  const Options& o, std::ostream& out) {
  switch (parse_format(o.format)) {
    case Format::json:
      out << Json{{"spec", label}, {"count", elements.size()}, {"elements", to_json(elements)}}.dump(2) << '\n';
      break;
    case Format::csv:
      out << "element\n";
      for (const auto& a : elements) out << csv_field(format(a)) << '\n';
      break;
    case Format::text:
      for (const auto& a : elements) out << format(a) << '\n';
      break;
  }
  return kExitPass;
}

LayerSpec layer_spec(const Options& o) {
  const auto kind = parse_layer(o.layer);
  if (!kind) throw UsageError("unknown layer '" + o.layer + "'");
  std::optional<std::size_t> p = *kind == LayerKind::Q ? o.m : o.r;
  if (!p) throw UsageError(*kind == LayerKind::Q ? "layer Q needs -m" : "this layer needs -r");
  LayerSpec spec{*kind, o.n, *p, o.s};
  validate(spec);
  return spec;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (!o.layer.empty()) {
    const auto spec = layer_spec(o);
    return emit_elements(spec.label(), enumerate_layer(spec, o.budget), o, out);
  }
  const auto spec = family_spec(o);
  if (o.strategy == "oracle") {
    if (spec.degree > kOracleMaxDegree) throw UsageError("the oracle strategy is limited to n <= 8");
    return emit_elements(spec.label(), filter_oracle(spec), o, out);
  }
  if (o.strategy != "direct") throw UsageError("unknown strategy '" + o.strategy + "'");
  return emit_elements(spec.label(), enumerate(spec, o.budget), o, out);
}

int cmd_count(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  if (o.by != "formula" && o.by != "enumerate" && o.by != "both") {
    throw UsageError("--by must be formula, enumerate or both");
  }
  std::string label;
  std::optional<Count> formula;
  std::optional<std::size_t> counted;
  if (!o.layer.empty()) {
    const auto spec = layer_spec(o);
    label = spec.label();
    if (o.by != "enumerate") formula = layer_cardinality(spec);
    if (o.by != "formula") counted = enumerate_layer(spec, o.budget).size();
  } else {
    const auto spec = family_spec(o);
    label = spec.label();
    if (o.by != "enumerate") formula = family_cardinality(spec);
    if (o.by != "formula") counted = enumerate(spec, o.budget).size();
  }
  Report report("count", Json{{"spec", label}, {"by", o.by}});
  if (o.by != "enumerate" && !formula) {
    report.skip("formula", "no closed formula for " + label);
  }
  if (formula) report.results()["formula"] = to_string(*formula);
  if (counted) report.results()["enumeration"] = *counted;
  if (formula && counted) {
    report.check("formula_equals_enumeration", *formula == Count(*counted), to_string(*formula), *counted);
  }
  if (parse_format(o.format) == Format::csv) {
    out << "spec,formula,enumeration\n"
        << label << ',' << (formula ? to_string(*formula) : "") << ','
        << (counted ? std::to_string(*counted) : "") << '\n';
    return report.passed() ? kExitPass : kExitFail;
  }
  return finish(report, watch, o, out);
}

int cmd_table1(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("table1 needs -n >= 1");
  switch (parse_format(o.format)) {
    case Format::csv:
      out << table1_csv(o.n);
      break;
    case Format::json: {
      Json rows = Json::array();
      for (const auto& row : table1(o.n)) {
        Json q = Json::array();
        for (const auto& v : row.q) q.push_back(to_string(v));
        rows.push_back(Json{{"n", row.n}, {"q", q}, {"PRD_n", to_string(row.prd)},
                            {"PRD*_n", to_string(row.prd_star)}});
      }
      out << Json{{"table", "q(n,m)"}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
    case Format::text: {
      const auto rows = table1(o.n);
      out << std::setw(3) << "n";
      for (std::size_t m = 0; m <= o.n; ++m) out << std::setw(8) << ("m=" + std::to_string(m));
      out << std::setw(8) << "PRD" << std::setw(8) << "PRD*" << '\n';
      for (const auto& row : rows) {
        out << std::setw(3) << row.n;
        for (std::size_t m = 0; m <= o.n; ++m) out << std::setw(8) << (m < row.q.size() ? to_string(row.q[m]) : "");
        out << std::setw(8) << to_string(row.prd) << std::setw(8) << to_string(row.prd_star) << '\n';
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_generators(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  const auto spec = theorem_spec(o, {Family::PMD, Family::IMD});
  const std::size_t r = *spec.image_bound;
  const bool injective = spec.family == Family::IMD;
  const auto gens = injective ? imd_generating_set(o.n, r) : pmd_generating_set(o.n, r);
  const Count rank = injective ? rank_IMD(o.n, r) : rank_PMD(o.n, r);
  Report report("generators", Json{{"family", family_name(spec.family)}, {"n", o.n}, {"r", r}});
  report.results()["label"] = gens.label;
  report.results()["size"] = gens.elements.size();
  report.results()["rank_formula"] = to_string(rank);
  report.results()["elements"] = to_json(gens.elements);
  report.check("size_equals_rank_formula", Count(gens.elements.size()) == rank, to_string(rank),
               gens.elements.size());
  if (!o.factor.empty()) {
    const auto target = parse(o.factor);
    const auto f = factorize_reversing(target, o.n, r);
    report.results()["factorization"] = to_json(f.parts);
    report.check("factorization_product", f.product() == target, format(target), format(f.product()));
  }
  return finish(report, watch, o, out);
}

std::vector<PartialTransformation> read_elements(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
    in = &file;
  }
  std::vector<PartialTransformation> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(*in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse(std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  if (o.input.empty()) throw UsageError("--input is required (use - for stdin)");
  auto gens = read_elements(o.input);
  if (gens.empty()) throw UsageError("no generators in " + o.input);
  const Semigroup s = closure(gens, "<" + o.input + ">", o.budget);
  Report report("closure", Json{{"input", o.input}, {"generators", gens.size()}});
  report.results()["size"] = s.size();
  report.results()["diameter"] = s.diameter();
  if (o.list_elements) {
    auto elements = s.elements();
    sort_canonical(elements);
    report.results()["elements"] = to_json(elements);
  }
  if (!o.family.empty()) {
    const FamilySpec spec{require_family(o), s.degree(), o.r};
    validate(spec);
    const auto expected = enumerate(spec, o.budget);
    report.check("equals_" + spec.label(), same_elements(s.elements(), expected), expected.size(), s.size());
  }
  return finish(report, watch, o, out);
}

int cmd_verify_rank(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  Report report = verify_rank(theorem_spec(o, {Family::PMD, Family::IMD}));
  return finish(report, watch, o, out);
}

Json class_listing(const Semigroup& s, const Partition& p) {
  Json out = Json::object();
  for (const auto& cls : p.classes()) {
    std::vector<PartialTransformation> members;
    for (auto i : cls) members.push_back(s[i]);
    sort_canonical(members);
    out[format(members.front())] = to_json(members);
  }
  return out;
}

int cmd_greens(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  const auto spec = theorem_spec(o, {Family::PMD, Family::IMD, Family::PD});
  const std::size_t r = *spec.image_bound;
  const Semigroup s = materialize(spec, o.budget);
  Report report;
  if (spec.family == Family::PD) {
    if (o.starred) throw UsageError("--starred is available for PMD and IMD only");
    report = verify_PD_greens(o.n, r);
  } else {
    report = o.starred ? verify_starred_greens(spec) : verify_greens(spec);
  }
  const auto g = o.starred ? starred_greens(s) : greens(s);
  const auto relations = o.starred
      ? std::vector<Relation>{Relation::Rstar, Relation::Lstar, Relation::Hstar, Relation::Dstar}
      : std::vector<Relation>{Relation::R, Relation::L, Relation::H, Relation::D, Relation::J};
  for (auto rel : relations) report.results()[std::string(relation_name(rel))] = class_listing(s, g[rel]);
  return finish(report, watch, o, out);
}

int cmd_maximal(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  const auto spec = theorem_spec(o, {Family::PMD, Family::IMD});
  const auto catalog = maximal_subsemigroups(spec, o.budget);
  const auto all = enumerate(spec, o.budget);
  Report report = o.verify ? verify_maximal_catalog(spec)
                           : Report("maximal", Json{{"family", family_name(spec.family)}, {"n", o.n},
                                                    {"r", *spec.image_bound}});
  Json entries = Json::array();
  for (const auto& e : catalog.entries) {
    std::vector<PartialTransformation> removed;
    for (const auto& a : all) {
      if (!std::binary_search(e.elements.begin(), e.elements.end(), a,
                              [](const auto& x, const auto& y) { return format(x) < format(y); })) {
        removed.push_back(a);
      }
    }
    Json entry{{"kind", witness_kind_name(e.kind)}};
    if (e.witness) entry["witness"] = format(*e.witness);
    if (e.inner_kind) entry["inner_kind"] = witness_kind_name(*e.inner_kind);
    entry["size"] = e.elements.size();
    entry["removed"] = to_json(removed);
    entries.push_back(std::move(entry));
  }
  report.results()["count"] = catalog.entries.size();
  report.results()["entries"] = std::move(entries);
  return finish(report, watch, o, out);
}

template <Report (*Verify)(const FamilySpec&)>
int cmd_theorem(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  Report report = Verify(theorem_spec(o, {Family::PMD, Family::IMD}));
  return finish(report, watch, o, out);
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  const Stopwatch watch;
  if (o.n < 3) throw UsageError("structural checks require n >= 3");
  const std::size_t n = o.n;
  Report report("verify-all", Json{{"n", n}});
  if (n <= 7) report.merge(verify_counts(n, o.budget), "counts");
  else report.skip("counts", "enumeration cross-checks gated to n <= 7");
  if (n <= 6) report.merge(verify_quasi_idempotents(n), "quasi-idempotents");
  else report.skip("quasi-idempotents", "gated to n <= 6");
  report.check("rank_full_is_3n-2", rank_PMD(n, n) == Count(3 * n - 2) && rank_IMD(n, n) == Count(3 * n - 2),
               3 * n - 2, to_string(rank_PMD(n, n)));

  for (Family f : {Family::PMD, Family::IMD}) {
    for (std::size_t r = 2; r <= n; ++r) {
      const FamilySpec spec{f, n, r};
      const std::string tag = spec.label();
      report.merge(verify_rank(spec), tag + "/rank");
      if (n > 6) {
        report.skip(tag + "/structure", "Green's and regularity suites gated to n <= 6");
        continue;
      }
      report.merge(verify_greens(spec), tag + "/greens");
      report.merge(verify_starred_greens(spec), tag + "/starred");
      report.merge(verify_dstar_factorizations(spec), tag + "/dstar");
      report.merge(verify_abundance(spec), tag + "/abundance");
      report.merge(verify_regularity(spec), tag + "/regularity");
      if (n <= 5) report.merge(verify_maximal_catalog(spec), tag + "/maximal");
      else report.skip(tag + "/maximal", "maximality checks gated to n <= 5");
    }
  }
  if (n <= 5) {
    for (std::size_t r = 1; r <= n; ++r) report.merge(verify_PD_greens(n, r), "PD(" + std::to_string(n) + "," + std::to_string(r) + ")");
  } else {
    report.skip("PD", "gated to n <= 5");
  }
  return finish(report, watch, o, out);
}

void add_common(CLI::App* sub, Options& o, bool needs_n) {
  auto* n = sub->add_option("-n", o.n, "degree of the chain");
  if (needs_n) n->required();
  sub->add_option("-r", o.r, "image-size bound");
  sub->add_option("--family", o.family, "family name, e.g. PMD, IMD, PC");
  sub->add_option("--format", o.format, "json, csv or text");
  sub->add_option("--budget", o.budget, "element budget for enumeration and closure");
  sub->add_flag("--no-timing", o.no_timing, "omit the seconds field");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Monotone order-decreasing partial transformation semigroups", "pmd"};
  app.require_subcommand(1);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the elements of a family or layer");
  add_common(enumerate_cmd, o, true);
  enumerate_cmd->add_option("--layer", o.layer, "Q, K, K_i, K_s, J, J_i, L, L_i or EJ");
  enumerate_cmd->add_option("-m", o.m, "largest image for layer Q");
  enumerate_cmd->add_option("-s", o.s, "largest image for layer K_s");
  enumerate_cmd->add_option("--strategy", o.strategy, "direct or oracle");

  auto* count_cmd = app.add_subcommand("count", "cardinality by formula and/or enumeration");
  add_common(count_cmd, o, true);
  count_cmd->add_option("--layer", o.layer, "layer name");
  count_cmd->add_option("-m", o.m, "largest image for layer Q");
  count_cmd->add_option("-s", o.s, "largest image for layer K_s");
  count_cmd->add_option("--by", o.by, "formula, enumerate or both");

  auto* table_cmd = app.add_subcommand("table1", "q(n,m), |PRD_n| and |PRD*_n| up to n");
  add_common(table_cmd, o, true);

  auto* gen_cmd = app.add_subcommand("generators", "minimal generating set of PMD(n,r) or IMD(n,r)");
  add_common(gen_cmd, o, true);
  gen_cmd->add_option("--factor", o.factor, "factorize an order-reversing element");

  auto* closure_cmd = app.add_subcommand("closure", "semigroup generated by elements read from a file");
  add_common(closure_cmd, o, false);
  closure_cmd->add_option("--input", o.input, "file with one element per line, - for stdin");
  closure_cmd->add_flag("--elements", o.list_elements, "list the elements");

  auto* rank_cmd = app.add_subcommand("verify-rank", "generating set and rank checks");
  add_common(rank_cmd, o, true);

  auto* greens_cmd = app.add_subcommand("greens", "Green's relations and their characterizations");
  add_common(greens_cmd, o, true);
  greens_cmd->add_flag("--starred", o.starred, "starred relations instead");

  auto* maximal_cmd = app.add_subcommand("maximal", "classified maximal subsemigroups");
  add_common(maximal_cmd, o, true);
  maximal_cmd->add_flag("--verify", o.verify, "check maximality and completeness");

  auto* abundance_cmd = app.add_subcommand("verify-abundance", "idempotents in every L*- and R*-class");
  add_common(abundance_cmd, o, true);
  auto* regularity_cmd = app.add_subcommand("verify-regularity", "regular elements and idempotents");
  add_common(regularity_cmd, o, true);
  auto* dstar_cmd = app.add_subcommand("verify-dstar", "D* as a composite of R* and L*");
  add_common(dstar_cmd, o, true);
  auto* all_cmd = app.add_subcommand("verify-all", "every suite at one degree");
  add_common(all_cmd, o, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*count_cmd) return cmd_count(o, out);
    if (*table_cmd) return cmd_table1(o, out);
    if (*gen_cmd) return cmd_generators(o, out);
    if (*closure_cmd) return cmd_closure(o, out);
    if (*rank_cmd) return cmd_verify_rank(o, out);
    if (*greens_cmd) return cmd_greens(o, out);
    if (*maximal_cmd) return cmd_maximal(o, out);
    if (*abundance_cmd) return cmd_theorem<verify_abundance>(o, out);
    if (*regularity_cmd) return cmd_theorem<verify_regularity>(o, out);
    if (*dstar_cmd) return cmd_theorem<verify_dstar_factorizations>(o, out);
    if (*all_cmd) return cmd_verify_all(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what();
    if (e.predicted()) err << " (predicted size " << *e.predicted() << ")";
    err << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pmd::cli
