#include <doctest.h>

#include "../test_util.hpp"
#include "oddzeta/euler_constants.hpp"
#include "oddzeta/printed.hpp"
#include "oddzeta/truncation.hpp"
#include "oddzeta/zeta3_series.hpp"
#include "oddzeta/zeta_odd.hpp"

using namespace oddzeta;
using test_util::agree;
using test_util::error_kind_of;

TEST_CASE("pi upper bound") {
  const PrecisionContext c = make_context(20);
  CHECK(Real(c, pi_upper_bound()) > c.constant(Constant::pi));
}

TEST_CASE("tabulated error sums") {
  const PrecisionContext c = make_context(30);
  CHECK(format_scientific(Real(c, truncated_error_sum(4, 10)), 2) == "2.5E(-11)");
  CHECK(format_scientific(Real(c, truncated_error_sum(5, 11)), 2) == "7.4E(-13)");
  CHECK(format_scientific(Real(c, truncated_error_sum(6, 12)), 2) == "2.5E(-14)");
  CHECK(format_scientific(rel_error_bound(c, 5, 11), 2) == "2.2E(-9)");
  CHECK(format_scientific(tabulated_rel_error(c, 6, 12), 2) == "7.4E(-11)");
  CHECK(format_scientific(tabulated_rel_error(c, 4, 10), 2) == "7.4E(-8)");
  CHECK(format_scientific(full_series_value(c), 5) == "3.3746E(-4)");
  CHECK(abs_error_bound(5, 11) > truncated_error_sum(5, 11));
  CHECK(error_kind_of([] { abs_error_bound(5, 5); }) == ErrorKind::invalid_argument);
}

TEST_CASE("convergence ratios") {
  const PrecisionContext c = make_context(30);
  CHECK(conv_ratio(c, 1).to_fixed(0) == "219");
  CHECK(conv_ratio(c, 2).to_fixed(0) == "68");
  CHECK(conv_ratio(c, 4).to_fixed(0) == "36");
  for (long l = 1; l <= 20; ++l) CHECK(agree(conv_ratio_general(c, 1, l), conv_ratio(c, l), 25));
  CHECK(conv_ratio_general(c, 2, 1).to_fixed(0) == "376");
  CHECK(conv_ratio_general(c, 4, 4).to_fixed(0) == "78");
}

TEST_CASE("planning") {
  const PrecisionContext c = make_context(30);
  const TruncationPlan p = plan_terms(c, 20, 1);
  CHECK(p.value_bound <= ExactRational(1, 100000) * ExactRational(1, 1000000000000000L));
  CHECK(p.target_digits == 20);
  CHECK(plan_for_terms(1, p.m - 1).value_bound > p.value_bound);
  const TruncationPlan q = plan_terms(c, 11, 2);
  CHECK(q.n == 2);
  CHECK(q.value_bound <= ExactRational(1, 100000000000L));
  CHECK(plan_for_terms(2, q.m - 1).value_bound > ExactRational(1, 100000000000L));
  CHECK(error_kind_of([&] { plan_terms(c, 31, 1); }) == ErrorKind::precision_mismatch);
  CHECK(error_kind_of([&] { plan_terms(c, 10, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("planned term counts") {
  const PrecisionContext c = make_context(40);
  CHECK(plan_terms(c, 9, 1).m == 5);
  // Four terms leave zeta(5) off by about 5E(-11), so 11 digits need a fifth.
  CHECK(plan_terms(c, 11, 2).m == 5);
  const OddZetaLadder four = zeta_odd(c, 2, 4);
  CHECK(abs(four.odd_value(2) - test_util::ref(four.context(), "zeta5")) > Real(four.context(), 1e-11));
  // The certified plan never asks for fewer terms than the true error needs.
  const Real exact = test_util::ref(c, "zeta3");
  const long planned = plan_terms(c, 30, 1).m;
  long needed = 1;
  while (abs(zeta3(c, needed) - exact) > test_util::tenth_power(c, 30)) ++needed;
  CHECK(planned >= needed);
}

TEST_CASE("bounds grow the plan with n and digits") {
  const PrecisionContext c = make_context(60);
  long prev = 0;
  for (int d = 10; d <= 60; d += 10) {
    const long m = plan_terms(c, d, 3).m;
    CHECK(m >= prev);
    prev = m;
  }
}

TEST_CASE("odd series tail bound holds") {
  const PrecisionContext c = make_context(40);
  for (long n : {2L, 3L, 4L}) {
    for (long m = 1; m <= 6; ++m) {
      Real tail(c);
      for (long l = m + 1; l <= m + 40; ++l) {
        ExactRational w = pow2(-2 * l);
        for (long r = 0; r <= 2 * n + 1; ++r) w /= (2 * l + r);
        tail += z_even(c, l) * w;
      }
      CHECK(tail <= Real(c, odd_series_tail_bound(n, m)));
    }
  }
}

TEST_CASE("table reports") {
  const PrecisionContext c = make_context(30);
  CHECK(parse_table_id("2") == TableId::table2);
  CHECK(parse_table_id("table5") == TableId::table5);
  CHECK(error_kind_of([] { parse_table_id("4"); }) == ErrorKind::invalid_argument);
  const ReportTable t1 = table_report(c, TableId::table1);
  CHECK(t1.rows.size() == 8);
  CHECK(t1.checks.size() == 24);
  CHECK(t1.discrepancies() == 0);
  const ReportTable t2 = table_report(c, TableId::table2);
  CHECK(t2.discrepancies() == 1);
  CHECK(t2.rows.at(0).at(3) == "7.4E(-8)");
  const ReportTable t3 = table_report(c, TableId::table3);
  CHECK(t3.rows.size() == 5);
  CHECK(t3.discrepancies() == 0);
  const ReportTable t5 = table_report(c, TableId::table5);
  CHECK(t5.checks.size() == 16);
  CHECK(t5.discrepancies() == 0);
}
