#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pball/ball.hpp"
#include "pball/output.hpp"
#include "pball/series.hpp"

namespace {

using pball::AsymptoticExpansion;
using pball::BallIntegral;
using pball::InequalityReport;
using pball::OutputRecord;
using pball::PExponent;
using pball::PhiLimitReport;
using pball::QuadResult;

void emit(const OutputRecord& rec, const std::string& format) {
  if (format == "json") {
    std::cout << pball::to_json(rec) << '\n';
  } else {
    std::cout << pball::to_csv(rec);
  }
}

int run_eval(const std::string& function, double p, bool have_x, double x,
             const std::string& format) {
  const PExponent px(p);
  OutputRecord rec;
  rec.command = "eval";
  rec.parameters.emplace_back("function", function);
  rec.parameters.emplace_back("p", pball::format_number(p));
  if (function == "pip") {
    rec.columns = {"p", "value"};
    rec.rows.push_back({"", {p, pball::pi_p(px)}});
  } else {
    if (!have_x) {
      std::cerr << "error: eval " << function << " requires --x\n";
      return 2;
    }
    double v = 0.0;
    if (function == "sinp") {
      v = pball::sin_p(px, x);
    } else if (function == "cosp") {
      v = pball::cos_p(px, x);
    } else if (function == "tanp") {
      v = pball::tan_p(px, x);
    } else if (function == "sincp") {
      v = pball::sinc_p(px, x);
    } else {  // arcsinp
      v = pball::arcsin_p_signed(px, x);
    }
    rec.parameters.emplace_back("x", pball::format_number(x));
    rec.columns = {"p", "x", "value"};
    rec.rows.push_back({"", {p, x, v}});
  }
  emit(rec, format);
  return 0;
}

int run_integral(double p, double q, double tol, int n,
                 const std::string& format) {
  const PExponent px(p);
  QuadResult quad;
  double raw = 0.0;
  double scaled = 0.0;
  if (n == 0) {
    const BallIntegral b = pball::ball_integral(px, q, tol);
    quad = b.quad;
    raw = b.raw;
    scaled = b.value;
  } else {
    quad = pball::phi_integral(px, n, q, tol);
    raw = quad.value;
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    scaled = sgn * std::pow(q, n + 1.0 / p) * raw;
  }
  OutputRecord rec;
  rec.command = "integral";
  rec.parameters = {{"p", pball::format_number(p)},
                    {"q", pball::format_number(q)},
                    {"tol", pball::format_number(tol)},
                    {"n", std::to_string(n)}};
  rec.columns = {"p",       "q",           "n",
                 "raw",     "scaled",      "err_est",
                 "tail_remainder", "subdivisions", "converged"};
  rec.rows.push_back({"",
                      {p, q, static_cast<double>(n), raw, scaled,
                       quad.err_est, quad.tail_remainder,
                       static_cast<double>(quad.subdivisions),
                       quad.converged ? 1.0 : 0.0}});
  rec.status = quad.converged ? OutputRecord::Status::info
                              : OutputRecord::Status::fail;
  emit(rec, format);
  return quad.converged ? 0 : 1;
}

int run_limit_table(double p, const std::vector<double>& q_list, double tol,
                    const std::string& format) {
  const PExponent px(p);
  const double limit = pball::limit_value(px);
  const AsymptoticExpansion e = pball::assemble_expansion(px, 12);
  const double g1 = e.g[1];
  OutputRecord rec;
  rec.command = "limit-table";
  rec.parameters = {{"p", pball::format_number(p)},
                    {"tol", pball::format_number(tol)}};
  rec.columns = {"q", "I_pq", "limit", "gap", "gap_times_q", "predicted_g1"};
  bool converged = true;
  for (double q : q_list) {
    const BallIntegral b = pball::ball_integral(px, q, tol);
    converged = converged && b.quad.converged;
    const double gap = b.value - limit;
    rec.rows.push_back({"", {q, b.value, limit, gap, gap * q, g1}});
  }
  rec.status =
      converged ? OutputRecord::Status::info : OutputRecord::Status::fail;
  emit(rec, format);
  return converged ? 0 : 1;
}

int run_expand(double p, int order, double q, double tol,
               const std::string& format) {
  const PExponent px(p);
  const AsymptoticExpansion e = pball::assemble_expansion(px, 12);
  const BallIntegral ref = pball::ball_integral(px, q, tol);
  OutputRecord rec;
  rec.command = "expand";
  rec.parameters = {{"p", pball::format_number(p)},
                    {"order", std::to_string(order)},
                    {"q", pball::format_number(q)},
                    {"tol", pball::format_number(tol)}};
  rec.columns = {"m", "g_m", "partial_sum", "reference", "residual"};
  for (int m = 0; m <= order; ++m) {
    const double partial =
        pball::evaluate_expansion(e, q, static_cast<std::size_t>(m));
    rec.rows.push_back({"",
                        {static_cast<double>(m), e.g[m], partial, ref.value,
                         ref.value - partial}});
  }
  rec.status = ref.quad.converged ? OutputRecord::Status::info
                                  : OutputRecord::Status::fail;
  emit(rec, format);
  return ref.quad.converged ? 0 : 1;
}

int run_verify(const std::string& suite, double p, std::size_t samples,
               const std::string& format) {
  const PExponent px(p);
  const std::vector<double> q_default = {10.0, 100.0, 1000.0, 10000.0};
  std::vector<InequalityReport> reports;
  const auto want = [&suite](const char* name) {
    return suite == name || suite == "all";
  };
  if (want("jordan")) reports.push_back(pball::verify_jordan(px, samples));
  if (want("bhayo")) reports.push_back(pball::verify_bhayo(px, samples));
  if (want("beta")) reports.push_back(pball::verify_beta_identities());
  if (want("gamma-ratio")) {
    const double pairs[][2] = {{0.0, 0.5}, {1.0, 0.0}, {0.25, 0.75}, {2.0, 1.3}};
    for (const auto& ab : pairs) {
      InequalityReport r = pball::verify_gamma_ratio(ab[0], ab[1], q_default);
      r.suite = "gamma-ratio(a=" + pball::format_number(ab[0]) +
                ",b=" + pball::format_number(ab[1]) + ")";
      reports.push_back(std::move(r));
    }
  }
  if (want("tail")) reports.push_back(pball::verify_tail_bounds(px));
  if (want("monotonic")) reports.push_back(pball::verify_monotonic(px, samples));
  if (want("pythagorean")) {
    reports.push_back(pball::verify_pythagorean(px, samples));
  }
  if (want("symmetry")) reports.push_back(pball::verify_symmetry(px, samples));

  OutputRecord rec;
  rec.command = "verify";
  rec.parameters = {{"suite", suite},
                    {"p", pball::format_number(p)},
                    {"samples", std::to_string(samples)}};
  rec.label_column = "suite";
  rec.columns = {"checked", "violations", "max_slack", "pass"};
  bool all_pass = true;
  for (const InequalityReport& r : reports) {
    all_pass = all_pass && r.pass();
    rec.rows.push_back({r.suite,
                        {static_cast<double>(r.checked),
                         static_cast<double>(r.violations.size()), r.max_slack,
                         r.pass() ? 1.0 : 0.0}});
  }
  rec.status =
      all_pass ? OutputRecord::Status::pass : OutputRecord::Status::fail;
  emit(rec, format);
  if (!all_pass) {
    for (const InequalityReport& r : reports) {
      for (const pball::Violation& v : r.violations) {
        std::cerr << r.suite << ": violation at index " << v.index
                  << " (x=" << pball::format_number(v.x)
                  << ", margin=" << pball::format_number(v.margin) << ")\n";
      }
    }
  }
  return all_pass ? 0 : 1;
}

int run_phi_limit(double p, int n, const std::vector<double>& q_list,
                  const std::string& format) {
  const PExponent px(p);
  const PhiLimitReport r = pball::phi_limit_check(px, n, q_list);
  OutputRecord rec;
  rec.command = "phi-limit";
  rec.parameters = {{"p", pball::format_number(p)},
                    {"n", std::to_string(n)},
                    {"matches", r.matches_derivative ? "derivative" : "gamma"}};
  rec.columns = {"q",
                 "phi",
                 "scaled",
                 "candidate_derivative",
                 "candidate_gamma",
                 "err_derivative",
                 "err_gamma"};
  for (std::size_t i = 0; i < r.q.size(); ++i) {
    rec.rows.push_back(
        {"",
         {r.q[i], r.phi_values[i], r.scaled[i], r.candidate_derivative,
          r.candidate_gamma, std::fabs(r.scaled[i] - r.candidate_derivative),
          std::fabs(r.scaled[i] - r.candidate_gamma)}});
  }
  emit(rec, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pball: generalized p-trigonometric functions and the q -> infinity "
      "behavior of the scaled sinc_p moment I_p(q)"};
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string function;
  double p = 2.0;
  double x = 0.0;
  double q = 100.0;
  double tol = 1e-9;
  int n = 0;
  int order = 2;
  std::size_t samples = 1000;
  std::string suite;
  std::vector<double> q_list = {10.0, 100.0, 1000.0, 10000.0};

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate one function; CSV columns: p[,x],value");
  eval->fallthrough();
  eval->add_option("function", function, "one of sinp cosp tanp sincp arcsinp pip")
      ->required()
      ->check(CLI::IsMember({"sinp", "cosp", "tanp", "sincp", "arcsinp", "pip"}));
  eval->add_option("--p", p, "exponent p > 1")->required();
  CLI::Option* xopt = eval->add_option("--x", x, "argument (not used by pip)");

  CLI::App* integral = app.add_subcommand(
      "integral",
      "quadrature of the Ball integrand (or its n-th log moment); CSV "
      "columns: p,q,n,raw,scaled,err_est,tail_remainder,subdivisions,"
      "converged. scaled is q^{1/p}*raw for n=0 and (-1)^n q^{n+1/p}*raw "
      "otherwise");
  integral->fallthrough();
  integral->add_option("--p", p, "exponent p > 1")->required();
  integral->add_option("--q", q, "moment q > 1")->required();
  integral->add_option("--tol", tol, "absolute tolerance (default 1e-9)");
  integral->add_option("--n", n, "log-moment order (default 0)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* table = app.add_subcommand(
      "limit-table",
      "I_p(q) against its q->infinity limit; CSV columns: "
      "q,I_pq,limit,gap,gap_times_q,predicted_g1");
  table->fallthrough();
  table->add_option("--p", p, "exponent p > 1")->required();
  table->add_option("--q-list", q_list, "comma-separated q values")
      ->delimiter(',');
  table->add_option("--tol", tol, "absolute tolerance (default 1e-9)");

  CLI::App* expand = app.add_subcommand(
      "expand",
      "large-q expansion terms vs quadrature; CSV columns: "
      "m,g_m,partial_sum,reference,residual");
  expand->fallthrough();
  expand->add_option("--p", p, "exponent p > 1")->required();
  expand->add_option("--order", order, "highest term m (default 2, max 6)")
      ->check(CLI::Range(0, 6));
  expand->add_option("--q", q, "evaluation point q > 1 (default 100)");
  expand->add_option("--tol", tol, "reference quadrature tolerance");

  CLI::App* verify = app.add_subcommand(
      "verify",
      "inequality/identity suites; CSV columns: "
      "suite,checked,violations,max_slack,pass");
  verify->fallthrough();
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember({"jordan", "bhayo", "beta", "gamma-ratio", "tail",
                             "monotonic", "pythagorean", "symmetry", "all"}));
  verify->add_option("--p", p, "exponent p > 1 (default 2)");
  verify->add_option("--samples", samples, "grid size (default 1000)");

  CLI::App* philim = app.add_subcommand(
      "phi-limit",
      "scaled log-moment sequence vs the two candidate limit constants; CSV "
      "columns: q,phi,scaled,candidate_derivative,candidate_gamma,"
      "err_derivative,err_gamma");
  philim->fallthrough();
  philim->add_option("--p", p, "exponent p > 1 (default 2)");
  philim->add_option("--n", n, "log-moment order (default 1)")
      ->check(CLI::PositiveNumber);
  philim->add_option("--q-list", q_list, "comma-separated q values")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return run_eval(function, p, xopt->count() > 0, x, format);
    if (*integral) return run_integral(p, q, tol, n, format);
    if (*table) return run_limit_table(p, q_list, tol, format);
    if (*expand) return run_expand(p, order, q, tol, format);
    if (*verify) return run_verify(suite, p, samples, format);
    if (*philim) return run_phi_limit(p, n == 0 ? 1 : n, q_list, format);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
