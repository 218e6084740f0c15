#include "cobord/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cobord/genera.hpp"

namespace cobord {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Options {
  bool quiet = false;
  bool json = false;
  bool csv = false;

  Format format() const {
    if (json && csv) throw std::invalid_argument("--json and --csv are mutually exclusive");
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    return Format::Text;
  }
};

// nlohmann::json objects keep keys in std::map order, so dump() is canonical.
void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json polynomial_json(const Polynomial& p) {
  json coefficients = json::array();
  for (int i = 0; i <= p.degree(); ++i) coefficients.push_back(to_string(p.coefficient(i)));
  return {{"coefficients", coefficients}, {"text", p.to_string("c")}};
}

json evaluation_json(const FamilyEvaluation& e) {
  return {{"family", e.family}, {"parameterization", e.parameterization}, {"polynomial", polynomial_json(e.polynomial)}};
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must have the form a..b", 0);
  auto number = [&](const std::string& s, std::size_t at) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer in range", at);
    }
    if (used != s.size()) throw ParseError("expected an integer in range", at + used);
    return v;
  };
  const long a = number(text.substr(0, dots), 0);
  const long b = number(text.substr(dots + 2), dots + 2);
  if (a > b) throw ParseError("empty range " + text, 0);
  if (b - a > 1000) throw ParseError("range too long", 0);
  return {a, b};
}

std::vector<long> range_values(const std::string& text) {
  const auto [a, b] = parse_range(text);
  std::vector<long> values;
  for (long c = a; c <= b; ++c) values.push_back(c);
  return values;
}

ParsedManifold load_manifold(const std::string& text, const Options& opts, std::ostream& err) {
  ParsedManifold parsed = parse_manifold(text);
  if (!opts.quiet)
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return parsed;
}

void check_dimension(int dim) {
  if (dim <= 0 || dim % 4 != 0 || dim > 4 * kMaxWeight)
    throw std::invalid_argument("--dim must be a positive multiple of 4 and at most " + std::to_string(4 * kMaxWeight));
}

void run_pontryagin(const std::string& manifold, const Options& opts, std::ostream& out, std::ostream& err) {
  const ParsedManifold parsed = load_manifold(manifold, opts, err);
  const CharNumberVector numbers = pontryagin_numbers(parsed.model);
  switch (opts.format()) {
    case Format::Json: {
      json values = json::object();
      for (const auto& [part, value] : numbers.values) values[part.key()] = to_string(value);
      emit_json(out, {{"dimension", numbers.dimension}, {"manifold", parsed.model.name()}, {"numbers", values}});
      break;
    }
    case Format::Csv: {
      std::map<std::string, Rational> by_key;
      for (const auto& [part, value] : numbers.values) by_key[part.key()] = value;
      std::string header, row;
      for (const auto& [key, value] : by_key) {
        header += (header.empty() ? "" : ",") + key;
        row += (row.empty() ? "" : ",") + to_string(value);
      }
      out << header << '\n' << row << '\n';
      break;
    }
    case Format::Text:
      for (const auto& [part, value] : numbers.values) out << part.key() << " = " << to_string(value) << '\n';
      break;
  }
}

void run_genus(const std::string& manifold, const std::string& which, const Options& opts, std::ostream& out,
               std::ostream& err) {
  const ParsedManifold parsed = load_manifold(manifold, opts, err);
  const ManifoldModel& m = parsed.model;
  if (m.real_dimension() % 4 != 0) throw std::invalid_argument("genus requires a dimension divisible by 4");
  Rational value;
  if (which == "sign")
    value = signature(m);
  else if (which == "ahat")
    value = ahat(m);
  else if (which == "ahat_t")
    value = twisted_ahat_tangent(m);
  else
    throw std::invalid_argument("--which must be sign, ahat or ahat_t");
  if (opts.format() == Format::Json)
    emit_json(out, {{"genus", which}, {"manifold", m.name()}, {"value", to_string(value)}});
  else
    out << to_string(value) << '\n';
}

void run_elliptic(const std::string& manifold, int q_order, const Options& opts, std::ostream& out,
                  std::ostream& err) {
  const ParsedManifold parsed = load_manifold(manifold, opts, err);
  const ManifoldModel& m = parsed.model;
  if (m.real_dimension() % 4 != 0) throw std::invalid_argument("elliptic genus requires a dimension divisible by 4");
  const int order = q_order >= 0 ? q_order : m.real_dimension() / 4;
  const std::vector<Rational> coefficients = elliptic_q_coefficients(m, order);
  switch (opts.format()) {
    case Format::Json: {
      json list = json::array();
      for (const auto& c : coefficients) list.push_back(to_string(c));
      emit_json(out, {{"coefficients", list},
                      {"manifold", m.name()},
                      {"normalization", "q^(k/2)*phi"},
                      {"q_order", order}});
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < coefficients.size(); ++i) out << (i ? "," : "") << "q^" << i;
      out << '\n';
      for (std::size_t i = 0; i < coefficients.size(); ++i) out << (i ? "," : "") << to_string(coefficients[i]);
      out << '\n';
      break;
    }
    case Format::Text: {
      out << '[';
      for (std::size_t i = 0; i < coefficients.size(); ++i) out << (i ? ", " : "") << to_string(coefficients[i]);
      out << "]\n";
      break;
    }
  }
}

void run_spin(const std::string& manifold, const Options& opts, std::ostream& out, std::ostream& err) {
  const ParsedManifold parsed = load_manifold(manifold, opts, err);
  const bool spin = is_spin(parsed.model);
  if (opts.format() == Format::Json) {
    const auto& cert = parsed.model.metadata().curvature_certificate;
    emit_json(out, {{"curvature_certificate", cert ? json(*cert) : json(nullptr)},
                    {"manifold", parsed.model.name()},
                    {"spin", spin}});
  } else {
    out << (spin ? "true" : "false") << '\n';
  }
}

void run_span(int dim, int q_order, const Options& opts, std::ostream& out) {
  check_dimension(dim);
  const int order = q_order >= 0 ? q_order : dim / 4;
  const EllipticSpan span = elliptic_span(dim, order);
  if (opts.format() == Format::Json) {
    json list = json::array();
    for (const auto& f : span.functionals) list.push_back(f.to_string());
    emit_json(out, {{"dimension", dim}, {"functionals", list}, {"q_order", order}, {"rank", span.rank}});
    return;
  }
  for (std::size_t j = 0; j < span.functionals.size(); ++j)
    out << "ell[" << j << "] = " << span.functionals[j].to_string() << '\n';
  out << "rank = " << span.rank << '\n';
}

void run_member(int dim, const std::string& expr, int q_order, const Options& opts, std::ostream& out) {
  check_dimension(dim);
  const int order = q_order >= 0 ? q_order : dim / 4;
  const FunctionalExpr parsed = parse_functional(expr, dim);
  const Functional f = resolve(parsed, order);
  const EllipticSpan span = elliptic_span(dim, std::max(order, parsed.max_elliptic_index()));
  const bool member = span_membership(f, span.functionals);
  if (opts.format() == Format::Json)
    emit_json(out, {{"dimension", dim},
                    {"functional", f.to_string()},
                    {"in_span", member},
                    {"q_order", order},
                    {"rank", span.rank}});
  else
    out << (member ? "in-span" : "not-in-span") << '\n';
}

void run_scan(const std::string& family, const std::string& expr, const std::string& range, const Options& opts,
              std::ostream& out) {
  const FamilySpec fam = family_by_name(family);
  const std::vector<long> params = range_values(range);
  const Functional f = resolve(parse_functional(expr, fam.dimension), fam.dimension / 4);
  const Polynomial poly = family_polynomial(fam, f);
  std::vector<Rational> values;
  for (long c : params) values.push_back(f(pontryagin_numbers(fam.build(c))));
  switch (opts.format()) {
    case Format::Json: {
      json rows = json::array();
      for (std::size_t i = 0; i < params.size(); ++i)
        rows.push_back({{"c", params[i]}, {"value", to_string(values[i])}});
      emit_json(out, {{"family", fam.name},
                      {"functional", f.to_string()},
                      {"parameterization", fam.parameterization},
                      {"polynomial", polynomial_json(poly)},
                      {"values", rows}});
      break;
    }
    case Format::Csv:
      out << "c,value\n";
      for (std::size_t i = 0; i < params.size(); ++i) out << params[i] << ',' << to_string(values[i]) << '\n';
      break;
    case Format::Text:
      out << "family " << fam.name << " (" << fam.parameterization << ")\n";
      for (std::size_t i = 0; i < params.size(); ++i) out << "c = " << params[i] << ": " << to_string(values[i]) << '\n';
      out << "polynomial: " << poly.to_string("c") << '\n';
      break;
  }
}

void run_verdict(int dim, const std::string& expr, const Options& opts, std::ostream& out) {
  check_dimension(dim);
  const Functional f = resolve(parse_functional(expr, dim), dim / 4);
  const Verdict v = unbounded_verdict(f, designated_families(dim));
  if (opts.format() == Format::Json) {
    json evaluations = json::array();
    for (const auto& e : v.evaluations) evaluations.push_back(evaluation_json(e));
    emit_json(out, {{"dimension", dim},
                    {"evaluations", evaluations},
                    {"functional", f.to_string()},
                    {"verdict", v.unbounded ? "unbounded" : "bounded_on_families"},
                    {"witness", v.witness ? evaluation_json(*v.witness) : json(nullptr)}});
    return;
  }
  if (v.unbounded) {
    out << "unbounded\n";
    out << "witness: " << v.witness->family << " (" << v.witness->parameterization << ")\n";
    out << "polynomial: " << v.witness->polynomial.to_string("c") << '\n';
  } else {
    out << "bounded_on_families\n";
    for (const auto& e : v.evaluations) out << e.family << ": " << e.polynomial.to_string("c") << '\n';
  }
}

void run_distinct(const std::string& family, const std::string& range, const Options& opts, std::ostream& out) {
  const FamilySpec fam = family_by_name(family);
  const DistinctnessCertificate cert = distinct_cobordism_types(fam, range_values(range));
  if (opts.format() == Format::Json) {
    json pairs = json::array();
    for (const auto& s : cert.pairs)
      pairs.push_back({{"first", s.first},
                       {"second", s.second},
                       {"separator", s.separator ? json(s.separator->key()) : json(nullptr)}});
    emit_json(out, {{"distinct", cert.distinct},
                    {"family", fam.name},
                    {"pairs", pairs},
                    {"parameterization", fam.parameterization}});
    return;
  }
  out << (cert.distinct ? "true" : "false") << '\n';
  for (const auto& s : cert.pairs)
    out << "c = " << s.first << " vs c = " << s.second << ": "
        << (s.separator ? s.separator->key() : std::string("not separated")) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic numbers, genera and rational cobordism of projective bundles", "cobord"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_flag("--quiet", opts.quiet, "Suppress informational warnings");
  app.add_flag("--json", opts.json, "Canonical JSON output");
  app.add_flag("--csv", opts.csv, "CSV output where a table is produced");

  std::string manifold, which, expr, family, range;
  int dim = 0;
  int q_order = -1;

  auto* pontryagin = app.add_subcommand("pontryagin", "Pontryagin numbers of a manifold");
  pontryagin->add_option("--manifold,-m", manifold, "Manifold descriptor")->required();

  auto* genus = app.add_subcommand("genus", "Signature, A-hat or twisted A-hat genus");
  genus->add_option("--manifold,-m", manifold, "Manifold descriptor")->required();
  genus->add_option("--which", which, "sign | ahat | ahat_t")->required()->check(CLI::IsMember({"sign", "ahat", "ahat_t"}));

  auto* elliptic = app.add_subcommand("elliptic", "q-coefficients of q^(k/2) times the elliptic genus");
  elliptic->add_option("--manifold,-m", manifold, "Manifold descriptor")->required();
  elliptic->add_option("--q-order", q_order, "Highest q-power (default dim/4)")->check(CLI::NonNegativeNumber);

  auto* spin = app.add_subcommand("spin", "Whether the manifold is spin");
  spin->add_option("--manifold,-m", manifold, "Manifold descriptor")->required();

  auto* span = app.add_subcommand("span", "Functionals spanned by the elliptic genus coefficients");
  span->add_option("--dim", dim, "Dimension 4k")->required();
  span->add_option("--q-order", q_order, "Highest q-power (default dim/4)")->check(CLI::NonNegativeNumber);

  auto* member = app.add_subcommand("member", "Membership of a functional in the elliptic span");
  member->add_option("--dim", dim, "Dimension 4k")->required();
  member->add_option("-f,--functional", expr, "Functional expression")->required();
  member->add_option("--q-order", q_order, "Highest q-power (default dim/4)")->check(CLI::NonNegativeNumber);

  auto* scan = app.add_subcommand("scan", "Evaluate a functional along a family");
  scan->add_option("--family", family, "X12 | Y16 | Z20 | X12xHP:<n> (X12:raw, Z20:raw for literal c)")->required();
  scan->add_option("-f,--functional", expr, "Functional expression")->required();
  scan->add_option("--range", range, "Parameter range a..b")->required();

  auto* verdict = app.add_subcommand("verdict", "Boundedness of a functional on the designated families");
  verdict->add_option("--dim", dim, "Dimension 4k")->required();
  verdict->add_option("-f,--functional", expr, "Functional expression")->required();

  auto* distinct = app.add_subcommand("distinct", "Pairwise distinctness of cobordism classes in a family");
  distinct->add_option("--family", family, "Family name")->required();
  distinct->add_option("--range", range, "Parameter range a..b")->required();

  // "--f" is accepted as a spelling of -f.
  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    if (a == "--f")
      argv.emplace_back("-f");
    else if (a.rfind("--f=", 0) == 0)
      argv.push_back("--functional=" + a.substr(4));
    else
      argv.push_back(a);
  }
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pontryagin->parsed())
      run_pontryagin(manifold, opts, out, err);
    else if (genus->parsed())
      run_genus(manifold, which, opts, out, err);
    else if (elliptic->parsed())
      run_elliptic(manifold, q_order, opts, out, err);
    else if (spin->parsed())
      run_spin(manifold, opts, out, err);
    else if (span->parsed())
      run_span(dim, q_order, opts, out);
    else if (member->parsed())
      run_member(dim, expr, q_order, opts, out);
    else if (scan->parsed())
      run_scan(family, expr, range, opts, out);
    else if (verdict->parsed())
      run_verdict(dim, expr, opts, out);
    else if (distinct->parsed())
      run_distinct(family, range, opts, out);
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace cobord
