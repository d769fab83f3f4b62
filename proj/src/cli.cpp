#include "knotlog/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotlog/error.hpp"
#include "knotlog/fox.hpp"
#include "knotlog/homomorphism.hpp"
#include "knotlog/log_series.hpp"
#include "knotlog/lueck.hpp"
#include "knotlog/mahler.hpp"
#include "knotlog/presentation.hpp"

namespace knotlog {

namespace {

using Json = nlohmann::ordered_json;

struct CommandConfig {
  std::string presentation;
  std::string deleted;
  std::string k2 = "auto";
  long terms = 100;
  long emit_terms = 100;
  long exact_terms = kExactTerms;
  long grid = 65536;
  double floor = 1e-300;
  std::string hom;
  long index = 1;
  std::size_t support_cap = RingLimits{}.max_support;
  std::string poly;
  std::string matrix;
  double tolerance = 0.0;
  std::string x;
  std::string y;
  std::string z;
  std::string format = "text";
  std::string output;
};

void require_positive(long value, const char* what) {
  if (value < 1) throw DomainError(std::string(what) + " must be at least 1");
}

QuadratureConfig quadrature(const CommandConfig& c) {
  if (c.grid < 2 || c.grid % 2 != 0) throw DomainError("--grid must be even and at least 2");
  QuadratureConfig q;
  q.points_per_dim = c.grid;
  q.singularity_floor = c.floor;
  return q;
}

double parse_double(const std::string& text, const char* flag) {
  if (text.empty()) throw DomainError(std::string(flag) + " is required");
  return parse_rational(text).get_d();
}

std::string render_terms(const SeriesReport& r, std::size_t emit) {
  std::ostringstream os;
  os << "k2: " << r.k2 << '\n';
  os << "constant_part: " << format_double(r.constant_part) << '\n';
  std::size_t shown = std::min(emit, r.terms.size());
  os << "terms (showing " << shown << " of " << r.terms.size() << "):\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& t = r.terms[i];
    os << "  n=" << t.n << " term=";
    if (const auto* exact = std::get_if<Rational>(&t.term)) {
      os << rational_display(*exact);
    } else {
      os << format_double(std::get<double>(t.term));
    }
    os << " partial_estimate=" << format_double(t.partial_estimate) << '\n';
  }
  os << "estimate: " << format_double(r.estimate) << '\n';
  if (r.reference) os << "reference: " << format_double(*r.reference) << '\n';
  for (const auto& c : r.caveats) os << "caveat: " << c << '\n';
  return os.str();
}

std::vector<std::vector<std::string>> matrix_strings(const RingMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.emplace_back();
    for (std::size_t j = 0; j < m.cols(); ++j) rows.back().push_back(m.at(i, j).to_string());
  }
  return rows;
}

std::vector<std::vector<std::string>> matrix_strings(const LaurentMatrix& m, const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows; ++i) {
    rows.emplace_back();
    for (std::size_t j = 0; j < m.cols; ++j) rows.back().push_back(m.at(i, j).to_string(names));
  }
  return rows;
}

std::string cmd_fox(const CommandConfig& c) {
  Presentation p = parse_presentation(c.presentation);
  JacobianMatrix f = fox_jacobian(p);
  std::string deleted = c.deleted.empty() ? default_deleted_column(f) : c.deleted;
  RingMatrix a = delete_column(f, deleted);
  if (c.format == "json") {
    Json j;
    j["presentation"] = render(p);
    j["generators"] = p.generators;
    std::vector<std::string> relators;
    for (const auto& r : p.relators) relators.push_back(r.to_string());
    j["relators"] = relators;
    j["columns"] = f.column_labels;
    j["jacobian"] = matrix_strings(f.entries);
    j["deleted"] = deleted;
    j["A"] = matrix_strings(a);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "presentation: " << render(p) << '\n';
  os << "Jacobian (" << f.entries.rows() << " x " << f.entries.cols() << "), columns [";
  for (std::size_t i = 0; i < f.column_labels.size(); ++i) os << (i ? ", " : "") << f.column_labels[i];
  os << "]:\n";
  for (std::size_t i = 0; i < f.entries.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < f.entries.cols(); ++j) os << (j ? ", " : "") << f.entries.at(i, j).to_string();
    os << "]\n";
  }
  os << "deleted column: " << deleted << '\n';
  os << "A = " << (a.rows() == 0 ? "[]" : a.to_string()) << '\n';
  return os.str();
}

std::string series_output(const SeriesReport& r, const CommandConfig& c, const std::function<void(Json&)>& extra = {}) {
  if (c.format == "json") {
    Json j = to_json(r, static_cast<std::size_t>(c.emit_terms));
    if (extra) extra(j);
    return j.dump(2) + "\n";
  }
  return render_terms(r, static_cast<std::size_t>(c.emit_terms));
}

std::string cmd_lueck(const CommandConfig& c) {
  require_positive(c.terms, "--terms");
  Presentation p = parse_presentation(c.presentation);
  JacobianMatrix f = fox_jacobian(p);
  std::string deleted = c.deleted.empty() ? default_deleted_column(f) : c.deleted;
  RingMatrix a = delete_column(f, deleted);
  if (!a.is_square()) {
    throw DomainError("Lueck series needs #relators = #generators - 1, got " +
                      std::to_string(p.relators.size()) + " and " + std::to_string(p.generators.size()));
  }
  Rational k2;
  if (c.k2 == "auto") {
    Rational k = k_bound(a);
    k2 = k * k;
  } else {
    k2 = parse_rational(c.k2);
  }
  RingLimits limits{c.support_cap};
  SeriesReport r = lueck_series_symbolic(a, k2, c.terms, limits);
  r.caveats.push_back("deleted column '" + deleted + "' is assumed nontrivial in the group");
  if (c.format == "json") {
    return series_output(r, c, [&](Json& j) {
      j["deleted"] = deleted;
      j["A"] = matrix_strings(a);
    });
  }
  return "A = " + a.to_string() + "\n" + render_terms(r, static_cast<std::size_t>(c.emit_terms));
}

Eigen::MatrixXcd parse_complex_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows", 1, 1);
  auto n = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw DomainError("matrix must be square");
    for (Eigen::Index col = 0; col < n; ++col) {
      const auto& e = row[static_cast<std::size_t>(col)];
      if (e.is_number()) {
        m(r, col) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, col) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw ParseError("matrix entries must be numbers or [re, im] pairs", 1, 1);
      }
    }
  }
  return m;
}

std::string cmd_lueck_complex(const CommandConfig& c) {
  Eigen::MatrixXcd a = parse_complex_matrix(c.matrix);
  double k2 = 0.0;
  if (c.k2 == "auto") {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a * a.adjoint(), Eigen::EigenvaluesOnly);
    k2 = solver.eigenvalues().maxCoeff();
  } else {
    k2 = parse_rational(c.k2).get_d();
  }
  long terms = c.terms;
  if (c.tolerance > 0) {
    ComplexLueckResult probe = lueck_closed_form_complex(a, k2, 1);
    terms = terms_for_tolerance(probe.eigenvalues, k2, c.tolerance);
  }
  require_positive(terms, "--terms");
  ComplexLueckResult result = lueck_closed_form_complex(a, k2, terms);
  double bound = geometric_tail_bound(result.eigenvalues, k2, terms);
  if (c.format == "json") {
    return series_output(result.report, c, [&](Json& j) {
      j["eigenvalues"] = result.eigenvalues;
      j["tail_bound"] = std::isfinite(bound) ? Json(bound) : Json(nullptr);
    });
  }
  std::ostringstream os;
  os << render_terms(result.report, static_cast<std::size_t>(c.emit_terms));
  os << "eigenvalues of A A*:";
  for (double l : result.eigenvalues) os << ' ' << format_double(l);
  os << "\ntail bound: " << format_double(bound) << '\n';
  return os.str();
}

std::string cmd_mahler(const CommandConfig& c) {
  ParsedLaurent parsed = parse_laurent(c.poly);
  MahlerResult m = mahler_measure(parsed.poly, quadrature(c));
  if (c.format == "json") {
    Json j;
    j["polynomial"] = parsed.poly.to_string(parsed.variables);
    j["variables"] = parsed.variables;
    j["grid"] = c.grid;
    j["value"] = m.value;
    j["active_variables"] = m.active_variables;
    j["evaluations"] = m.evaluations;
    j["clamped"] = m.clamped;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "polynomial: " << parsed.poly.to_string(parsed.variables) << '\n';
  os << "grid: " << c.grid << " points per variable\n";
  os << "m = " << format_double(m.value) << '\n';
  os << "evaluations: " << m.evaluations << ", clamped: " << m.clamped << '\n';
  return os.str();
}

std::string cmd_pipeline(const CommandConfig& c) {
  Presentation p = parse_presentation(c.presentation);
  HomomorphismSpec h = c.hom.empty() ? abelianization(p) : parse_homomorphism(c.hom);
  JacobianMatrix f = fox_jacobian(p);
  std::string deleted = c.deleted.empty() ? default_deleted_column(f) : c.deleted;
  PipelineResult r = mahler_of_presentation(p, deleted, h, quadrature(c));
  double scaled = scale_by_index(r.value, c.index);
  if (c.format == "json") {
    Json j;
    j["presentation"] = render(p);
    j["jacobian"] = matrix_strings(r.jacobian.entries);
    j["deleted"] = deleted;
    j["A"] = matrix_strings(r.reduced);
    j["evaluated"] = matrix_strings(r.evaluated, r.variables);
    j["determinant"] = r.determinant.to_string(r.variables);
    j["mahler_measure"] = r.measure.value;
    j["value"] = r.value;
    j["index"] = c.index;
    j["scaled_value"] = scaled;
    j["evaluations"] = r.measure.evaluations;
    j["clamped"] = r.measure.clamped;
    j["caveats"] = r.caveats;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "presentation: " << render(p) << '\n';
  os << "Jacobian: " << (r.jacobian.entries.rows() == 0 ? "[]" : r.jacobian.entries.to_string()) << '\n';
  os << "deleted column: " << deleted << '\n';
  os << "A = " << (r.reduced.rows() == 0 ? "[]" : r.reduced.to_string()) << '\n';
  os << "h(A) = " << (r.evaluated.rows == 0 ? "[]" : to_string(r.evaluated, r.variables)) << '\n';
  os << "det = " << r.determinant.to_string(r.variables) << '\n';
  os << "m(det) = " << format_double(r.measure.value) << '\n';
  os << "2 m(det) = " << format_double(r.value) << '\n';
  if (c.index != 1) os << "divided by index " << c.index << ": " << format_double(scaled) << '\n';
  for (const auto& cav : r.caveats) os << "caveat: " << cav << '\n';
  return os.str();
}

std::string cmd_logseries(const std::string& kind, const CommandConfig& c) {
  require_positive(c.terms, "--terms");
  if (c.exact_terms < 0) throw DomainError("--exact-terms must be nonnegative");
  if (kind == "lehmer") return series_output(lehmer_ln4(c.terms, c.exact_terms), c);
  if (kind == "ln2") return series_output(ln2_series(c.terms, c.exact_terms), c);
  if (kind == "theorem4") {
    if (c.x.empty()) throw DomainError("--x is required");
    return series_output(theorem4_ln(parse_rational(c.x), c.terms, c.exact_terms), c);
  }
  if (kind == "triple") {
    if (c.k2 == "auto") throw DomainError("--k2 is required");
    return series_output(triple_sum_ln(parse_rational(c.k2), c.terms, c.exact_terms), c);
  }
  if (kind == "genfun") {
    double x = parse_double(c.x, "--x"), y = parse_double(c.y, "--y");
    double closed = genfun_closed(x, y);
    double series = genfun_series(x, y, c.terms);
    if (c.format == "json") {
      Json j;
      j["x"] = x;
      j["y"] = y;
      j["terms"] = c.terms;
      j["series"] = series;
      j["closed_form"] = closed;
      j["difference"] = std::abs(series - closed);
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "truncated series (N=" << c.terms << "): " << format_double(series) << '\n';
    os << "closed form: " << format_double(closed) << '\n';
    os << "difference: " << format_double(std::abs(series - closed)) << '\n';
    return os.str();
  }
  if (kind == "identity") {
    double z = parse_double(c.z, "--z");
    double lhs = lehmer_identity_lhs(z, c.terms);
    double rhs = lehmer_identity_rhs(z);
    if (c.format == "json") {
      Json j;
      j["z"] = z;
      j["terms"] = c.terms;
      j["lhs"] = lhs;
      j["rhs"] = rhs;
      j["difference"] = std::abs(lhs - rhs);
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "truncated sum (J=" << c.terms << "): " << format_double(lhs) << '\n';
    os << "closed form: " << format_double(rhs) << '\n';
    os << "difference: " << format_double(std::abs(lhs - rhs)) << '\n';
    return os.str();
  }
  throw DomainError("unknown logseries kind '" + kind + "'");
}

std::string first_line(const std::string& s) {
  auto nl = s.find('\n');
  return nl == std::string::npos ? s : s.substr(0, nl);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fox calculus, Lueck series and Mahler measures for knot groups", "knotlog"};
  app.require_subcommand(1);
  CommandConfig c;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", c.output, "Write output to this file instead of standard output");
  };

  auto* fox = app.add_subcommand("fox", "Fox Jacobian and reduced matrix A");
  fox->add_option("--presentation", c.presentation, "Presentation such as \"<a,b|a^3=b^2>\"")->required();
  fox->add_option("--delete", c.deleted, "Column to delete (default: last generator)");
  add_format(fox);

  auto* lueck = app.add_subcommand("lueck", "Symbolic Lueck series with exact traces");
  lueck->add_option("--presentation", c.presentation)->required();
  lueck->add_option("--delete", c.deleted);
  lueck->add_option("--k2", c.k2, "k^2 as a rational, or 'auto' for the 1-norm bound");
  lueck->add_option("--terms", c.terms, "Number of series terms N");
  lueck->add_option("--emit-terms", c.emit_terms, "Terms listed in the output");
  lueck->add_option("--support-cap", c.support_cap, "Maximum group ring support size");
  add_format(lueck);

  auto* lc = app.add_subcommand("lueck-complex", "Lueck series for a complex matrix versus 2 ln|det A|");
  lc->add_option("--matrix", c.matrix, "JSON rows, entries are numbers or [re, im]")->required();
  lc->add_option("--k2", c.k2, "k^2, or 'auto' for the largest eigenvalue of A A*");
  lc->add_option("--terms", c.terms);
  lc->add_option("--tolerance", c.tolerance, "Choose N from the geometric tail bound");
  lc->add_option("--emit-terms", c.emit_terms);
  add_format(lc);

  auto* mahler = app.add_subcommand("mahler", "Logarithmic Mahler measure by torus quadrature");
  mahler->add_option("--poly", c.poly, "Laurent polynomial such as \"(t-1)^2\"")->required();
  mahler->add_option("--grid", c.grid, "Even number of midpoints per variable");
  mahler->add_option("--floor", c.floor, "Singularity floor for |p|");
  add_format(mahler);

  auto* pipeline = app.add_subcommand("pipeline", "Presentation to 2 m(det) through a homomorphism");
  pipeline->add_option("--presentation", c.presentation)->required();
  pipeline->add_option("--delete", c.deleted);
  pipeline->add_option("--hom", c.hom, "Images such as \"t=x^1,a=1,b=1\" (default: abelianization)");
  pipeline->add_option("--grid", c.grid);
  pipeline->add_option("--floor", c.floor);
  pipeline->add_option("--index", c.index, "Covering index the value is divided by");
  add_format(pipeline);

  auto* logseries = app.add_subcommand("logseries", "Power series for the logarithm");
  std::string kind;
  logseries->add_option("kind", kind, "lehmer | ln2 | theorem4 | triple | genfun | identity")
      ->required()
      ->check(CLI::IsMember({"lehmer", "ln2", "theorem4", "triple", "genfun", "identity"}));
  logseries->add_option("--terms", c.terms);
  logseries->add_option("--exact-terms", c.exact_terms, "Leading terms computed exactly");
  logseries->add_option("--emit-terms", c.emit_terms);
  logseries->add_option("--x", c.x);
  logseries->add_option("--y", c.y);
  logseries->add_option("--z", c.z);
  logseries->add_option("--k2", c.k2);
  add_format(logseries);

  std::vector<std::string> argv_storage;
  argv_storage.push_back("knotlog");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (c.emit_terms < 0) throw DomainError("--emit-terms must be nonnegative");
    std::string text;
    if (fox->parsed()) {
      text = cmd_fox(c);
    } else if (lueck->parsed()) {
      text = cmd_lueck(c);
    } else if (lc->parsed()) {
      text = cmd_lueck_complex(c);
    } else if (mahler->parsed()) {
      text = cmd_mahler(c);
    } else if (pipeline->parsed()) {
      text = cmd_pipeline(c);
    } else {
      text = cmd_logseries(kind, c);
    }
    if (c.output.empty()) {
      out << text;
    } else {
      std::ofstream file(c.output, std::ios::binary);
      if (!file) throw DomainError("cannot open output file '" + c.output + "'");
      file << text;
      if (!file) throw DomainError("failed writing output file '" + c.output + "'");
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << first_line(e.what()) << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << first_line(e.what()) << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << first_line(e.what()) << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kExitUsage;
  }
}

}  // namespace knotlog
