// kratzel: evaluate Kratzel and Bessel-kernel integrals, dump expansion
// coefficients, and regenerate the reference tables.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kratzel.hpp"

namespace {

using kratzel::Scalar;
using json = nlohmann::json;

enum class ExitCode { ok = 0, evaluation = 1, usage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  double quad_tol = 1e-12;
  std::string format = "csv";
  std::string out;
};

struct EvalOptions {
  std::string integral = "kratzel";
  std::string method = "quadrature";
  std::optional<double> p, nu, a, b;
  double nu_im = 0.0;
  double x_re = 0.0;
  double x_im = 0.0;
  std::size_t terms = 5;
  bool compare_oracle = false;
};

struct CoeffsOptions {
  std::string kind;
  std::optional<double> p, nu, a, b;
  double nu_im = 0.0;
  std::size_t k = 0;
  std::size_t terms = 6;
};

struct TableOptions {
  int id = 0;
  std::string from_json;
};

// Key/value report shared by eval and coeffs for the csv and markdown formats.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(std::string k, std::string v) { fields.emplace_back(std::move(k), std::move(v)); }
};

std::string full(double v) { return kratzel::format_sci(v, 17); }

std::string render_record(const Record& r, const std::string& format) {
  std::string out;
  if (format == "markdown") {
    out = "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : r.fields) out += "| " + k + " | " + v + " |\n";
  } else {
    out = "field,value\n";
    for (const auto& [k, v] : r.fields) out += k + "," + v + "\n";
  }
  return out;
}

kratzel::QuadratureConfig quad_config(const GlobalOptions& g) {
  kratzel::QuadratureConfig cfg;
  cfg.rel_tol = g.quad_tol;
  return cfg;
}

double need(const std::optional<double>& v, const char* flag, const std::string& ctx) {
  if (!v) throw UsageError(ctx + " requires " + flag);
  return *v;
}

struct EvalOutcome {
  Scalar value;
  std::vector<Scalar> terms;  // empty for non-expansion methods
  std::optional<Scalar> oracle;
  Scalar nu;
  std::optional<kratzel::QuadratureReport> report;
};

EvalOutcome run_eval(const EvalOptions& e, const GlobalOptions& g) {
  const auto cfg = quad_config(g);
  const Scalar x(e.x_re, e.x_im);
  const std::string ctx = "eval --integral " + e.integral + " --method " + e.method;
  EvalOutcome r;
  auto take = [&](const kratzel::ExpansionResult& ex) {
    r.value = ex.value;
    r.terms.reserve(ex.terms.size());
    for (const auto& t : ex.terms) r.terms.push_back(ex.prefactor * t);
  };

  if (e.integral == "kratzel") {
    const double p = need(e.p, "--p", ctx);
    Scalar nu;
    if (e.method == "large-nu") {
      nu = kratzel::large_nu_order(p, need(e.a, "--a", ctx), x);
    } else {
      nu = Scalar(need(e.nu, "--nu", ctx), e.nu_im);
    }
    r.nu = nu;
    if (e.method == "quadrature") {
      kratzel::QuadratureReport rep;
      r.value = kratzel::kratzel_quadrature(p, nu, x, cfg, &rep);
      r.report = rep;
    } else if (e.method == "saddle") {
      take(kratzel::expand_F_saddle(kratzel::KratzelParams(p, nu), x, e.terms));
    } else if (e.method == "mb") {
      take(kratzel::expand_F_mb(kratzel::KratzelParams(p, nu), x, e.terms));
    } else if (e.method == "series") {
      r.value = kratzel::F_series(kratzel::KratzelParams(p, nu), x);
    } else if (e.method == "negp-series") {
      if (!(p < 0.0)) throw kratzel::DomainError("negp-series requires p < 0");
      r.value = kratzel::F_series(kratzel::KratzelParams(p, nu), x);
    } else if (e.method == "negp-asym") {
      take(kratzel::expand_F_neg_p(kratzel::KratzelParams(p, nu), x, e.terms));
    } else if (e.method == "large-nu") {
      take(kratzel::expand_F_large_nu(p, *e.a, x, e.terms));
    } else {
      throw UsageError("unknown method " + e.method);
    }
    if (e.compare_oracle) r.oracle = kratzel::kratzel_quadrature(p, nu, x, cfg);
    return r;
  }

  if (e.integral == "whittaker-i" || e.integral == "whittaker-j") {
    const bool is_i = e.integral == "whittaker-i";
    const double a = need(e.a, "--a", ctx);
    const double b = need(e.b, "--b", ctx);
    const double p = need(e.p, "--p", ctx);
    const double nu = is_i ? need(e.nu, "--nu", ctx) : 0.0;
    r.nu = nu;
    auto oracle = [&](kratzel::QuadratureReport* rep) {
      return is_i ? kratzel::whittaker_i_quadrature(a, b, x, p, nu, cfg, rep)
                  : kratzel::whittaker_j_quadrature(a, b, x, p, cfg, rep);
    };
    if (e.method == "quadrature") {
      kratzel::QuadratureReport rep;
      r.value = oracle(&rep);
      r.report = rep;
    } else if (e.method == "saddle") {
      if (is_i) {
        const kratzel::WhittakerParams w{a, b, p, nu};
        take(x.real() > 0.0 ? kratzel::expand_I_pos(w, x, e.terms) : kratzel::expand_I(w, -x, e.terms));
      } else {
        take(kratzel::expand_J(a, b, p, -x, e.terms));
      }
    } else {
      throw UsageError("method " + e.method + " is not available for " + e.integral + " (use quadrature or saddle)");
    }
    if (e.compare_oracle) r.oracle = oracle(nullptr);
    return r;
  }
  throw UsageError("unknown integral " + e.integral);
}

std::string format_eval(const EvalOptions& e, const EvalOutcome& r, const GlobalOptions& g) {
  std::optional<double> rel;
  if (r.oracle) rel = kratzel::relative_error(r.value, *r.oracle);
  if (g.format == "json") {
    json j;
    j["integral"] = e.integral;
    j["method"] = e.method;
    json params = {{"x_re", e.x_re}, {"x_im", e.x_im}, {"nu_re", r.nu.real()}, {"nu_im", r.nu.imag()}};
    if (e.p) params["p"] = *e.p;
    if (e.a) params["a"] = *e.a;
    if (e.b) params["b"] = *e.b;
    if (!r.terms.empty()) params["terms"] = e.terms;
    j["params"] = params;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(std::abs(t));
    j["term_magnitudes"] = terms;
    if (r.oracle) {
      j["oracle_re"] = r.oracle->real();
      j["oracle_im"] = r.oracle->imag();
      j["rel_error"] = *rel;
    }
    if (r.report) j["quadrature"] = {{"levels", r.report->levels}, {"last_change", r.report->last_change},
                                     {"evaluations", r.report->evaluations}};
    j["meta"] = {{"oracle_tol", g.quad_tol}, {"versions", {{"kratzel", kratzel::library_version}}}};
    return j.dump(2) + "\n";
  }
  Record rec;
  rec.add("value_re", full(r.value.real()));
  rec.add("value_im", full(r.value.imag()));
  for (std::size_t k = 0; k < r.terms.size(); ++k)
    rec.add("term_" + std::to_string(k) + "_abs", kratzel::format_sci(std::abs(r.terms[k]), 4));
  if (r.report) {
    rec.add("quad_levels", std::to_string(r.report->levels));
    rec.add("quad_last_change", kratzel::format_sci(r.report->last_change, 4));
  }
  if (r.oracle) {
    rec.add("oracle_re", full(r.oracle->real()));
    rec.add("oracle_im", full(r.oracle->imag()));
    rec.add("rel_error", kratzel::format_sci(*rel, 4));
  }
  return render_record(rec, g.format);
}

std::string run_coeffs(const CoeffsOptions& c, const GlobalOptions& g) {
  const std::string ctx = "coeffs --kind " + c.kind;
  std::vector<Scalar> v;
  json params = json::object();
  if (c.kind == "A") {
    const double p = need(c.p, "--p", ctx);
    v = kratzel::coeffs_A(p, c.terms);
    params = {{"p", p}};
  } else if (c.kind == "B" || c.kind == "c") {
    const double p = need(c.p, "--p", ctx);
    const Scalar nu(need(c.nu, "--nu", ctx), c.nu_im);
    v = c.kind == "B" ? kratzel::coeffs_B(p, nu, c.terms) : kratzel::coeffs_c_mb(p, nu, c.terms);
    params = {{"p", p}, {"nu_re", nu.real()}, {"nu_im", nu.imag()}};
  } else if (c.kind == "C") {
    const double p = need(c.p, "--p", ctx);
    const double a = need(c.a, "--a", ctx);
    const auto s = kratzel::coeffs_C(p, a, c.terms);
    v = s.C;
    params = {{"p", p}, {"a", a}, {"tau_s", s.tau_s}};
  } else if (c.kind == "a") {
    const double nu = need(c.nu, "--nu", ctx);
    for (double x : kratzel::coeffs_a(nu, c.terms)) v.emplace_back(x);
    params = {{"nu", nu}};
  } else if (c.kind == "cr") {
    const double b = need(c.b, "--b", ctx);
    const double p = need(c.p, "--p", ctx);
    for (double x : kratzel::coeffs_cr(b, p, c.k, c.terms)) v.emplace_back(x);
    params = {{"b", b}, {"p", p}, {"k", c.k}};
  } else if (c.kind == "D") {
    const kratzel::WhittakerParams w{need(c.a, "--a", ctx), need(c.b, "--b", ctx), need(c.p, "--p", ctx),
                                     need(c.nu, "--nu", ctx)};
    for (double x : kratzel::coeffs_D(w, c.terms)) v.emplace_back(x);
    params = {{"a", w.a}, {"b", w.b}, {"p", w.p}, {"nu", w.nu}};
  } else {
    throw UsageError("unknown coefficient kind " + c.kind);
  }

  if (g.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
      rows.push_back({{"labels", {{"k", k}}}, {"value_re", v[k].real()}, {"value_im", v[k].imag()}});
    return json{{"kind", c.kind}, {"params", params}, {"rows", rows},
                {"meta", {{"versions", {{"kratzel", kratzel::library_version}}}}}}
               .dump(2) +
           "\n";
  }
  std::string out = g.format == "markdown" ? "| k | value_re | value_im |\n|---|---|---|\n" : "k,value_re,value_im\n";
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string re = kratzel::format_sci(v[k].real(), 9);
    const std::string im = kratzel::format_sci(v[k].imag(), 9);
    out += g.format == "markdown" ? "| " + std::to_string(k) + " | " + re + " | " + im + " |\n"
                                  : std::to_string(k) + "," + re + "," + im + "\n";
  }
  return out;
}

kratzel::OutputFormat output_format(const std::string& f) {
  if (f == "markdown") return kratzel::OutputFormat::markdown;
  if (f == "json") return kratzel::OutputFormat::json;
  return kratzel::OutputFormat::csv;
}

void emit(const std::string& text, const GlobalOptions& g) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + g.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kratzel integral evaluator and reference-table generator", "kratzel"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--quad-tol", g.quad_tol, "Relative tolerance of the quadrature oracle")
      ->check([](const std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          return (v > 1e-15 && v < 1e-2) ? "" : "must lie in (1e-15, 1e-2)";
        } catch (...) {
          return "not a number";
        }
      });
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "markdown", "json"}));
  app.add_option("--out", g.out, "Output file (default stdout)");

  EvalOptions e;
  auto* eval = app.add_subcommand("eval", "Evaluate one integral by one method");
  eval->add_option("--integral", e.integral)->check(CLI::IsMember({"kratzel", "whittaker-i", "whittaker-j"}));
  eval->add_option("--method", e.method)
      ->check(CLI::IsMember({"quadrature", "saddle", "mb", "series", "negp-series", "negp-asym", "large-nu"}));
  eval->add_option("--p", e.p);
  eval->add_option("--nu", e.nu, "Order (real part)");
  eval->add_option("--nu-im", e.nu_im, "Order (imaginary part)");
  eval->add_option("--a", e.a);
  eval->add_option("--b", e.b);
  eval->add_option("--x-re", e.x_re)->required();
  eval->add_option("--x-im", e.x_im);
  eval->add_option("--terms", e.terms, "Truncation index K")->check(CLI::Range(0, 20));
  eval->add_flag("--compare-oracle", e.compare_oracle, "Report |value/oracle - 1|");

  CoeffsOptions c;
  auto* coeffs = app.add_subcommand("coeffs", "Print expansion coefficients");
  coeffs->add_option("--kind", c.kind)->required()->check(CLI::IsMember({"A", "B", "c", "C", "a", "cr", "D"}));
  coeffs->add_option("--p", c.p);
  coeffs->add_option("--nu", c.nu);
  coeffs->add_option("--nu-im", c.nu_im);
  coeffs->add_option("--a", c.a);
  coeffs->add_option("--b", c.b);
  coeffs->add_option("--k", c.k, "Hankel index k for c_r(k)");
  coeffs->add_option("--terms", c.terms, "Highest index")->check(CLI::Range(0, 20));

  TableOptions t;
  auto* table = app.add_subcommand("table", "Regenerate a reference table");
  auto* id_opt = table->add_option("--id", t.id)->check(CLI::Range(1, 5));
  auto* json_opt = table->add_option("--from-json", t.from_json, "Re-render a table saved with --format json");
  id_opt->excludes(json_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : int(ExitCode::usage);
  }

  try {
    if (eval->parsed()) {
      const auto r = run_eval(e, g);
      emit(format_eval(e, r, g), g);
    } else if (coeffs->parsed()) {
      emit(run_coeffs(c, g), g);
    } else {
      kratzel::TableData data;
      if (!t.from_json.empty()) {
        std::ifstream f(t.from_json, std::ios::binary);
        if (!f) throw UsageError("cannot read " + t.from_json);
        try {
          data = kratzel::table_from_json(json::parse(f));
        } catch (const json::exception& ex) {
          throw UsageError(std::string("malformed table json: ") + ex.what());
        }
      } else if (t.id != 0) {
        data = kratzel::build_table(static_cast<kratzel::TableId>(t.id), quad_config(g));
      } else {
        throw UsageError("table requires --id or --from-json");
      }
      emit(kratzel::render(data, output_format(g.format)), g);
      if (data.failed_cells() > 0) {
        std::cerr << "kratzel: " << data.failed_cells() << " table cell(s) failed to evaluate\n";
        return int(ExitCode::evaluation);
      }
    }
  } catch (const UsageError& err) {
    std::cerr << "kratzel: usage error: " << err.what() << "\n";
    return int(ExitCode::usage);
  } catch (const kratzel::Error& err) {
    std::cerr << "kratzel: " << err.what() << "\n";
    return int(ExitCode::evaluation);
  }
  return int(ExitCode::ok);
}
