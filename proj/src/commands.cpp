#include "oddzeta/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include "oddzeta/oracle.hpp"
#include "oddzeta/zeta3_series.hpp"
#include "oddzeta/zeta_odd.hpp"

namespace oddzeta {

namespace {

constexpr long kMaxSignsN = 500;

ExactRational ten_to_minus(int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return ExactRational(BigInt(1), p);
}

// Bounds are shown with a 1% margin so that the rounded text still bounds.
std::string bound_text(const ExactRational& q) { return to_scientific(q * make_rational(101, 100), 2); }

std::string odd_name(long n) { return "zeta(" + std::to_string(2 * n + 1) + ")"; }

ReportTable plan_table(const std::vector<TruncationPlan>& plans) {
  ReportTable t;
  t.title = "Truncation plan";
  t.headers = {"level", "m", "series tail bound", "value error bound"};
  for (const auto& p : plans)
    t.rows.push_back({std::to_string(p.n), std::to_string(p.m), bound_text(p.abs_bound), bound_text(p.value_bound)});
  return t;
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "series") return Method::series;
  if (name == "reduced") return Method::reduced;
  if (name == "ladder") return Method::ladder;
  fail(ErrorKind::invalid_argument, "unknown method '" + std::string(name) + "'");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::reduced: return "reduced";
    case Method::ladder: return "ladder";
  }
  return "?";
}

RunReport cmd_compute(const ComputeArgs& args) {
  require_argument(args.n >= 1, "--n must be at least 1");
  require_argument(args.digits >= 1 && args.digits <= kMaxDigits,
                   "--digits must be between 1 and " + std::to_string(kMaxDigits));
  require_argument(args.method == Method::ladder || args.n == 1,
                   "method '" + std::string(to_string(args.method)) + "' only computes zeta(3); use --n 1");
  require_argument(!args.terms || *args.terms >= 1, "--terms must be at least 1");

  const int d = args.digits;
  const PrecisionContext ctx = make_context(std::max(d + 1, PrecisionContext::kMinDigits));
  RunReport r;
  r.command = "compute";
  r.inputs = {{"n", std::to_string(args.n)}, {"digits", std::to_string(d)}, {"method", std::string(to_string(args.method))}};
  if (args.terms) r.inputs.emplace_back("terms", std::to_string(*args.terms));

  Real value(ctx);
  ExactRational truncation;
  switch (args.method) {
    case Method::series: {
      const TruncationPlan plan = args.terms ? plan_for_terms(1, *args.terms) : plan_terms(ctx, d + 1, 1);
      value = zeta3(ctx, plan);
      truncation = plan.value_bound;
      r.tables.push_back(plan_table({plan}));
      break;
    }
    case Method::reduced: {
      const long m = args.terms ? *args.terms : reduced_terms_for(d + 1);
      value = zeta3_reduced(ctx, m);
      const ExactRational pi_up = pi_upper_bound();
      truncation = reduced_tail_bound(m) * pi_up * pi_up * 8;
      ReportTable t;
      t.title = "Truncation plan";
      t.headers = {"m", "SC + SD tail bound", "value error bound"};
      t.rows.push_back({std::to_string(m), bound_text(reduced_tail_bound(m)), bound_text(truncation)});
      r.tables.push_back(std::move(t));
      break;
    }
    case Method::ladder: {
      const OddZetaLadder ladder = args.terms ? zeta_odd(ctx, args.n, *args.terms) : zeta_odd(ctx, args.n);
      value = ctx.convert(ladder.odd_value(args.n));
      truncation = ladder.level(args.n).error_bound;
      std::vector<TruncationPlan> plans;
      ReportTable terms;
      terms.title = "Terms per level: zeta'(-2n) = t0 - t1 - t2 - t3";
      terms.headers = {"level", "t0", "t1", "t2", "t3", "zeta'(-2n)", "zeta(2n+1)"};
      for (long k = 1; k <= ladder.levels(); ++k) {
        const auto& lv = ladder.level(k);
        plans.push_back(*lv.plan);
        const TermBreakdown& tb = *lv.terms;
        terms.rows.push_back({std::to_string(k), tb.t0.to_fixed(d), tb.t1.to_fixed(d), tb.t2.to_fixed(d),
                              tb.t3.to_fixed(d), lv.deriv_neg_even.to_fixed(d), lv.odd_value.to_fixed(d)});
        if (k < args.n) {
          r.outputs.emplace_back(odd_name(k), lv.odd_value.to_fixed(d));
        }
        r.outputs.emplace_back("zeta'(-" + std::to_string(2 * k) + ")", lv.deriv_neg_even.to_fixed(d));
      }
      r.tables.push_back(plan_table(plans));
      r.tables.push_back(std::move(terms));
      break;
    }
  }
  // Floating-point rounding inside the working precision.
  const ExactRational rounding = ten_to_minus(ctx.working_digits() - 2);
  const ExactRational certified = truncation + rounding + ten_to_minus(d) / 2;
  r.outputs.emplace_back(odd_name(args.n), value.to_fixed(d));
  r.certified_error = bound_text(certified);
  if (certified > ten_to_minus(d))
    r.notes.push_back("The requested term count leaves an error bound above 1E(-" + std::to_string(d) + ").");
  return r;
}

RunReport cmd_tables(const std::vector<TableId>& which) {
  const PrecisionContext ctx = make_context(30);
  RunReport r;
  r.command = "tables";
  std::string names;
  for (TableId id : which) names += (names.empty() ? "" : ",") + std::string(to_string(id));
  r.inputs = {{"which", names}};
  std::size_t discrepant = 0;
  for (TableId id : which) {
    ReportTable t = table_report(ctx, id);
    discrepant += t.discrepancies();
    for (auto& c : table_cell_checks(ctx, id, t)) r.checks.push_back(std::move(c));
    r.tables.push_back(std::move(t));
  }
  r.outputs = {{"tables", std::to_string(which.size())},
               {"cells", std::to_string(r.checks.size())},
               {"discrepant", std::to_string(discrepant)}};
  return r;
}

RunReport cmd_verify(const VerifyOptions& options) { return run_verification(options); }

RunReport cmd_signs(long n_max) {
  require_argument(n_max >= 1 && n_max <= kMaxSignsN, "--n-max must be between 1 and " + std::to_string(kMaxSignsN));
  const PrecisionContext ctx = make_context(30);
  RunReport r;
  r.command = "signs";
  r.inputs = {{"n_max", std::to_string(n_max)}};
  ReportTable t;
  t.title = "zeta'(1-2n) and its sign";
  t.headers = {"n", "zeta'(1-2n)", "psi(2n) - ln(2 pi)", "zeta'(2n) + zeta(2n)(psi(2n) - ln(2 pi))", "bracket sign",
               "sign of zeta'(1-2n)"};
  std::string signs;
  std::string bracket_signs;
  const Real ln2pi = ln_two_pi(ctx);
  for (long n = 1; n <= n_max; ++n) {
    const Real bracket = deriv_bracket(ctx, n);
    const Real deriv = zeta_deriv_neg_odd(ctx, n);
    const char bs = sign_symbol(sign_of(bracket));
    const char ds = sign_symbol(sign_of(deriv));
    signs.push_back(ds);
    bracket_signs.push_back(bs);
    t.rows.push_back({std::to_string(n), deriv.to_scientific(10), (digamma_int(ctx, 2 * n) - ln2pi).to_fixed(7),
                      bracket.to_scientific(10), std::string(1, bs), std::string(1, ds)});
  }
  t.notes.push_back("zeta'(1-2n) carries the bracket's sign times (-1)^(n+1).");
  r.tables.push_back(std::move(t));
  r.outputs = {{"signs", signs}, {"bracket_signs", bracket_signs}};
  r.outputs.emplace_back("zeta'(-1) closed form 1/12 - ln A", oracle::zeta_deriv_minus_one(ctx).to_fixed(25));
  return r;
}

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd zeta values from even-zeta series, with certified truncation bounds"};
  app.require_subcommand(1);

  std::string format = "markdown";
  std::string out_path;
  bool canonical = false;
  auto add_output_options = [&](CLI::App* sub) {
    sub->add_option("--format", format, "markdown, json or plain")
        ->check(CLI::IsMember({"markdown", "json", "plain"}));
    sub->add_option("--out", out_path, "write the report to this file");
    sub->add_flag("--canonical", canonical, "leave timing out of JSON");
  };

  ComputeArgs compute_args;
  std::string method = "ladder";
  long terms = 0;
  CLI::App* compute = app.add_subcommand("compute", "compute zeta(2n+1)");
  compute->add_option("--n", compute_args.n, "compute zeta(2n+1)")->check(CLI::PositiveNumber);
  compute->add_option("--digits", compute_args.digits, "decimals after the point")
      ->check(CLI::Range(1, kMaxDigits));
  compute->add_option("--method", method, "series, reduced or ladder")
      ->check(CLI::IsMember({"series", "reduced", "ladder"}));
  CLI::Option* terms_opt =
      compute->add_option("--terms", terms, "series terms to keep instead of the planned count")
          ->check(CLI::PositiveNumber);
  add_output_options(compute);

  std::vector<std::string> which{"all"};
  CLI::App* tables = app.add_subcommand("tables", "recompute the classic tables");
  tables->add_option("--which", which, "1, 2, 3, 5 or all")->delimiter(',');
  add_output_options(tables);

  std::string level = "quick";
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--inject-fault", inject_fault, "use a wrong constant in one check");
  add_output_options(verify);

  long n_max = 8;
  CLI::App* signs = app.add_subcommand("signs", "signs of zeta'(1-2n)");
  signs->add_option("--n-max", n_max, "largest n")->check(CLI::Range(1L, kMaxSignsN));
  add_output_options(signs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  int exit_code = kExitOk;
  try {
    if (compute->parsed()) {
      compute_args.method = parse_method(method);
      if (terms_opt->count() > 0) compute_args.terms = terms;
      report = cmd_compute(compute_args);
    } else if (tables->parsed()) {
      std::vector<TableId> ids;
      for (const auto& w : which) {
        if (w == "all") {
          ids = {TableId::table1, TableId::table2, TableId::table3, TableId::table5};
          break;
        }
        ids.push_back(parse_table_id(w));
      }
      report = cmd_tables(ids);
      if (report.failures() > 0) exit_code = kExitVerification;
    } else if (verify->parsed()) {
      report = cmd_verify({parse_verify_level(level), inject_fault});
      if (report.failures() > 0) exit_code = kExitVerification;
    } else if (signs->parsed()) {
      report = cmd_signs(n_max);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::invalid_argument:
      case ErrorKind::invalid_precision:
      case ErrorKind::unsupported_constant:
      case ErrorKind::not_found:
        return kExitUsage;
      default:
        return kExitNumeric;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const OutputFormat f = parse_format(format);
  const std::string text = f == OutputFormat::json ? to_json(report, canonical) : render(report, f);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return exit_code;
}

}  // namespace oddzeta
