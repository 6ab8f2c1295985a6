#include "oddzeta/truncation.hpp"

#include <array>
#include <string>

#include "oddzeta/euler_constants.hpp"
#include "oddzeta/printed.hpp"
#include "oddzeta/zeta3_series.hpp"

namespace oddzeta {

namespace {

constexpr long kBoundCutSpan = 20;
constexpr long kFullSeriesTerms = 40;

ExactRational ten_to_minus(int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return ExactRational(BigInt(1), p);
}

// 1 / (2^{4l+6} l^4)
ExactRational majorant_term(long l) {
  const BigInt l2 = BigInt(l) * l;
  return pow2(-(4 * l + 6)) / ExactRational(l2 * l2);
}

// F(l) / (4^l prod_{r=0}^{2n+1} (2l + r))
ExactRational odd_majorant_term(long n, long l) {
  BigInt prod = 1;
  for (long r = 0; r <= 2 * n + 1; ++r) prod *= 2 * l + r;
  return z_bound_F(l) * pow2(-2 * l) / ExactRational(prod);
}

void check_order(long m, long n_cut) {
  require_argument(m >= 1 && n_cut > m,
                   "error bounds require 1 <= m < n_cut, got m=" + std::to_string(m) +
                       ", n_cut=" + std::to_string(n_cut));
}

}  // namespace

ExactRational pi_upper_bound() { return make_rational(355, 113); }

ExactRational truncated_error_sum(long m, long n_cut) {
  check_order(m, n_cut);
  ExactRational s = 0;
  for (long l = m + 1; l <= n_cut; ++l) s += majorant_term(l);
  return s;
}

ExactRational abs_error_bound(long m, long n_cut) {
  // Successive majorant terms shrink by more than 16, so the remainder past
  // n_cut is at most 16/15 of its first term.
  const ExactRational remainder = majorant_term(n_cut + 1) * make_rational(16, 15);
  const ExactRational prefactor = ExactRational(1) + make_rational(2, 2 * m + 1);
  return prefactor * (truncated_error_sum(m, n_cut) + remainder);
}

Real full_series_value(const PrecisionContext& ctx) { return series_sum(ctx, kFullSeriesTerms); }

Real rel_error_bound(const PrecisionContext& ctx, long m, long n_cut) {
  return Real(ctx, truncated_error_sum(m, n_cut)) / full_series_value(ctx);
}

Real tabulated_rel_error(const PrecisionContext& ctx, long m, long n_cut) {
  const Real ae(ctx, truncated_error_sum(m, n_cut));
  return Real(ctx, parse_printed(format_scientific(ae, 2)).value) / full_series_value(ctx);
}

Real conv_ratio(const PrecisionContext& ctx, long l) {
  require_argument(l >= 1, "conv_ratio requires l >= 1, got " + std::to_string(l));
  return z_even(ctx, l) / z_even(ctx, l + 1) * (coeff_C(l) / coeff_C(l + 1));
}

Real conv_ratio_general(const PrecisionContext& ctx, long n, long l) {
  require_argument(n >= 1 && l >= 1, "conv_ratio_general requires n >= 1 and l >= 1");
  const ExactRational factor =
      make_rational(4 * (l + n + 1) * (2 * l + 2 * n + 3), l * (2 * l + 1));
  return z_even(ctx, l) / z_even(ctx, l + 1) * factor;
}

ExactRational odd_series_tail_bound(long n, long m) {
  require_argument(n >= 1 && m >= 1, "odd_series_tail_bound requires n >= 1 and m >= 1");
  ExactRational s = 0;
  for (long l = m + 1; l <= m + kBoundCutSpan; ++l) s += odd_majorant_term(n, l);
  // Ratio of successive majorant terms is below 1/16.
  s += odd_majorant_term(n, m + kBoundCutSpan + 1) * make_rational(16, 15);
  return s;
}

TruncationPlan plan_for_terms(long n, long m) {
  require_argument(n >= 1 && m >= 1, "a truncation plan needs n >= 1 and m >= 1");
  TruncationPlan plan;
  plan.m = m;
  plan.n = n;
  const ExactRational pi_up = pi_upper_bound();
  if (n == 1) {
    plan.abs_bound = abs_error_bound(m, m + kBoundCutSpan);
    plan.value_bound = plan.abs_bound * pi_up * pi_up * 8;
  } else {
    // zeta(2n+1) = (-1)^n pi^{2n} 2^{2n+1} {...}; the series enters the
    // braces with weight 4^{-n}, so its tail is scaled by 2 pi^{2n}.
    plan.abs_bound = odd_series_tail_bound(n, m);
    plan.value_bound = plan.abs_bound * pow(pi_up, static_cast<unsigned long>(2 * n)) * 2;
  }
  return plan;
}

TruncationPlan plan_terms(const PrecisionContext& ctx, int target_digits, long n) {
  require_argument(target_digits >= 1, "target digits must be positive");
  require_argument(n >= 1, "plan_terms requires n >= 1");
  if (target_digits > ctx.digits())
    fail(ErrorKind::precision_mismatch,
         "target of " + std::to_string(target_digits) + " digits exceeds the context's " +
             std::to_string(ctx.digits()));
  const ExactRational goal = ten_to_minus(target_digits);
  for (long m = 1;; ++m) {
    TruncationPlan plan = plan_for_terms(n, m);
    if (plan.value_bound <= goal) {
      plan.target_digits = target_digits;
      return plan;
    }
  }
}

// ---------------------------------------------------------------------------
// Tables

TableId parse_table_id(std::string_view name) {
  if (name == "1" || name == "table1") return TableId::table1;
  if (name == "2" || name == "table2") return TableId::table2;
  if (name == "3" || name == "table3") return TableId::table3;
  if (name == "5" || name == "table5") return TableId::table5;
  fail(ErrorKind::invalid_argument, "unknown table '" + std::string(name) + "'");
}

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::table1: return "table1";
    case TableId::table2: return "table2";
    case TableId::table3: return "table3";
    case TableId::table5: return "table5";
  }
  return "?";
}

std::size_t ReportTable::discrepancies() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == to_string(PrintedMatch::mismatch)) ++n;
  return n;
}

namespace {

// Appends the recomputed cell and records how it compares to `printed`.
void add_cell(ReportTable& table, std::vector<std::string>& row, const Real& value,
              std::string_view printed) {
  const PrintedNumber p = parse_printed(printed);
  const PrintedMatch m = match_printed(value, p);
  std::string shown = matches(m) ? format_like(value, p)
                                 : format_scientific(value, std::max(2, p.significant_digits()));
  table.checks.push_back({table.rows.size(), row.size(), p.text, shown, std::string(to_string(m))});
  row.push_back(std::move(shown));
}

ReportTable bound_table(const PrecisionContext& ctx) {
  struct Row {
    long label;
    long l;  // index actually evaluated
    const char* z;
    const char* f;
    const char* quarter;
  };
  // The last two rows of the classic table are labelled 30 and 42, but their
  // entries are the values at l = 15 and l = 21 (the label is the argument 2l).
  static constexpr std::array<Row, 8> kRows{{
      {1, 1, "0.645", "0.75", "0.25"},
      {2, 2, "8.2E(-2)", "10.4E(-2)", "6.25E(-2)"},
      {3, 3, "1.7E(-2)", "2.2E(-2)", "1.56E(-2)"},
      {4, 4, "4E(-3)", "5E(-3)", "3.9E(-3)"},
      {5, 5, "0.99E(-3)", "1.2E(-3)", "0.97E(-3)"},
      {10, 10, "9.53E(-7)", "10E(-7)", "9.53E(-7)"},
      {30, 15, "9.31E(-10)", "9.96E(-10)", "9.31E(-10)"},
      {42, 21, "2.27E(-13)", "2.38E(-13)", "2.27E(-13)"},
  }};
  ReportTable t;
  t.title = "Z(2l) against its bound F(l) and 2^(-2l)";
  t.headers = {"l", "Z(2l)", "F(l)", "2^(-2l)"};
  for (const Row& r : kRows) {
    std::vector<std::string> row{std::to_string(r.label)};
    add_cell(t, row, z_even(ctx, r.l), r.z);
    add_cell(t, row, Real(ctx, z_bound_F(r.l)), r.f);
    add_cell(t, row, Real(ctx, pow2(-2 * r.l)), r.quarter);
    t.rows.push_back(std::move(row));
  }
  t.notes.push_back(
      "Rows labelled 30 and 42 hold the values at l = 15 and l = 21 (2^(-30) and 2^(-42)) and are "
      "recomputed there. At l = 30 and l = 42 themselves Z(2l) is " +
      format_scientific(z_even(ctx, 30), 3) + " and " + format_scientific(z_even(ctx, 42), 3) + ".");
  return t;
}

ReportTable error_table(const PrecisionContext& ctx) {
  struct Row {
    long m;
    long n;
    const char* ae;
    const char* re;
  };
  static constexpr std::array<Row, 3> kRows{{
      {4, 10, "2.5E(-11)", "7.4E(-9)"},
      {5, 11, "7.4E(-13)", "2.2E(-9)"},
      {6, 12, "2.5E(-14)", "7.4E(-11)"},
  }};
  ReportTable t;
  t.title = "Truncation error after m terms, majorant summed to l = n";
  t.headers = {"m", "n", "AE", "RE"};
  const Real full = full_series_value(ctx);
  std::string unrounded;
  for (const Row& r : kRows) {
    std::vector<std::string> row{std::to_string(r.m), std::to_string(r.n)};
    const Real ae(ctx, truncated_error_sum(r.m, r.n));
    add_cell(t, row, ae, r.ae);
    add_cell(t, row, tabulated_rel_error(ctx, r.m, r.n), r.re);
    t.rows.push_back(std::move(row));
    const Real certified(ctx, abs_error_bound(r.m, r.n));
    t.notes.push_back("m=" + std::to_string(r.m) + ": certified AE including the (1 + 2/(2m+1)) factor " +
                      "and the remainder past n is " + format_scientific(certified, 2) + " (ratio " +
                      (certified / ae).to_fixed(2) + " to the tabulated convention).");
    unrounded += (unrounded.empty() ? "" : ", ") + format_scientific(ae / full, 3);
  }
  t.notes.push_back("RE is the AE as listed (2 significant digits) over the full series value " +
                    format_scientific(full, 3) + "; from the unrounded AE it is " + unrounded +
                    ". Row m=4 lists 7.4E(-9), inconsistent with its own AE and that denominator.");
  return t;
}

ReportTable ratio_table(const PrecisionContext& ctx) {
  static constexpr std::array<const char*, 5> kPrinted{"219", "68", "44", "36", "30"};
  ReportTable t;
  t.title = "Ratio of successive terms R(l)";
  t.headers = {"l", "R(l)"};
  for (std::size_t i = 0; i < kPrinted.size(); ++i) {
    const long l = static_cast<long>(i) + 1;
    std::vector<std::string> row{std::to_string(l)};
    add_cell(t, row, conv_ratio(ctx, l), kPrinted[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable general_ratio_table(const PrecisionContext& ctx) {
  static constexpr std::array<std::array<const char*, 4>, 4> kPrinted{{
      {"219", "376", "575", "815"},
      {"68", "104", "148", "199"},
      {"44", "63", "85", "110"},
      {"36", "48", "62", "78"},
  }};
  ReportTable t;
  t.title = "Ratio of successive terms R(n, l)";
  t.headers = {"l", "n=1", "n=2", "n=3", "n=4"};
  for (std::size_t i = 0; i < kPrinted.size(); ++i) {
    const long l = static_cast<long>(i) + 1;
    std::vector<std::string> row{std::to_string(l)};
    for (std::size_t j = 0; j < kPrinted[i].size(); ++j)
      add_cell(t, row, conv_ratio_general(ctx, static_cast<long>(j) + 1, l), kPrinted[i][j]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

ReportTable table_report(const PrecisionContext& ctx, TableId which) {
  switch (which) {
    case TableId::table1: return bound_table(ctx);
    case TableId::table2: return error_table(ctx);
    case TableId::table3: return ratio_table(ctx);
    case TableId::table5: return general_ratio_table(ctx);
  }
  fail(ErrorKind::invalid_argument, "unknown table selector");
}

}  // namespace oddzeta
