#include <doctest.h>

#include "../test_util.hpp"
#include "oddzeta/euler_constants.hpp"
#include "oddzeta/printed.hpp"
#include "oddzeta/truncation.hpp"
#include "oddzeta/zeta3_series.hpp"

using namespace oddzeta;
using test_util::agree;
using test_util::ref;

TEST_CASE("series coefficients") {
  CHECK(coeff_C(1) == make_rational(1, 1920));
  CHECK(coeff_C(2) == make_rational(1, 16 * 16 * 2 * 3 * 5 * 7));
  for (long l = 1; l <= 50; ++l) CHECK(coeff_C(l) == coeff_C_partial_fractions(l));
  CHECK(test_util::error_kind_of([] { coeff_C(0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("the constant A") {
  const PrecisionContext c = make_context(30);
  CHECK(const_A(c).to_fixed(11) == "-0.01488677114");
  const Real expect = (ln_two_pi(c) / 3L + ln_three_halves(c) * 9L - make_rational(9, 2)) / 16L;
  CHECK(agree(const_A(c), expect, 30));
}

TEST_CASE("zeta(3) from the series") {
  const PrecisionContext c = make_context(30);
  CHECK(zeta3(c, 5).to_fixed(9) == "1.202056903");
  const TruncationPlan plan = plan_terms(c, 30, 1);
  CHECK(agree(zeta3(c, plan), ref(c, "zeta3"), 29));
  // phi(-2) = -zeta(3) / (8 pi^2)
  const Real pi = c.constant(Constant::pi);
  CHECK(agree(phi_minus2(c, plan.m) * pi * pi * -8L, zeta3(c, plan.m), 29));
  // -0.0152242285287; the printed -0.01522422852 is the sum of A and B at 11 decimals.
  CHECK(phi_minus2(c, 5).to_fixed(13) == "-0.0152242285287");
  CHECK(match_printed(phi_minus2(c, 5), "-0.01522422852") == PrintedMatch::truncated);
  // One more series term lowers phi(-2) by C_2 Z(4).
  const Real step = phi_minus2(c, 1) - phi_minus2(c, 2);
  CHECK(agree(step, z_even(c, 2) * coeff_C(2), 30));
  CHECK(step.to_fixed(11) == "0.00000153131");
}

TEST_CASE("truncated zeta(3) stays inside its bound") {
  const PrecisionContext c = make_context(40);
  const Real exact = ref(c, "zeta3");
  for (long m = 1; m <= 12; ++m) {
    const TruncationPlan p = plan_for_terms(1, m);
    CHECK(abs(zeta3(c, p) - exact) <= Real(c, p.value_bound));
  }
}

TEST_CASE("11-decimal hand evaluation") {
  const PrecisionContext c = make_context(30);
  const FixedDecimalZeta3 fd = zeta3_fixed_decimals(c, 5, 11);
  CHECK(fd.a.to_fixed(11) == "-0.01488677114");
  REQUIRE(fd.terms.size() == 5);
  CHECK(fd.terms[0].to_fixed(11) == "0.00033590316");
  CHECK(fd.terms[4].to_fixed(11) == "0.00000000001");
  CHECK(fd.b.to_fixed(11) == "-0.00033745738");
  CHECK(fd.a_plus_b.to_fixed(11) == "-0.01522422852");
  CHECK(fd.zeta3.to_fixed(9) == "1.202056902");
  const Real off = abs(fd.zeta3 - ref(c, "zeta3"));
  CHECK(off > test_util::tenth_power(c, 10));
  CHECK(off < test_util::tenth_power(c, 8));
}

TEST_CASE("partial-fraction pieces") {
  const PrecisionContext c = make_context(30);
  const ReducedParts p = reduced_parts(c, 5);
  CHECK(p.sa.sign() > 0);
  CHECK(p.sb.sign() < 0);
  CHECK(p.sc.sign() > 0);
  CHECK(p.sd.sign() < 0);
  CHECK(matches(match_printed(p.sa, "0.003414596")));
  CHECK(matches(match_printed(p.sb, "-0.006851765")));
  CHECK(matches(match_printed(p.sc, "0.005150182")));
  CHECK(matches(match_printed(p.sd, "-0.001375556")));
  for (long m : {1L, 3L, 5L, 10L}) {
    const ReducedParts q = reduced_parts(c, m);
    const Real gap = abs(q.sum() - series_sum(c, m));
    CHECK(gap <= Real(c, reduced_tail_bound(m) + abs_error_bound(m, m + 40)));
  }
}

TEST_CASE("reduced form of zeta(3)") {
  const PrecisionContext c = make_context(30);
  const long m = reduced_terms_for(30);
  CHECK(agree(zeta3_reduced(c, m), zeta3(c, plan_terms(c, 30, 1)), 28));
  CHECK(reduced_terms_for(9) > 5);
  CHECK(zeta3_reduced(c, reduced_terms_for(9)).to_fixed(9) == "1.202056903");
}

TEST_CASE("slow product form") {
  const PrecisionContext c = make_context(20);
  const auto [sc, sd] = slow_products(c, 1500);
  CHECK(format_scientific(sc, 4) == "5.145E(-3)");
  const ReducedParts exact = reduced_parts(c, 200);
  CHECK(abs(sc - exact.sc) < Real(c, 1e-5));
  CHECK(abs(sd - exact.sd) < Real(c, 1e-5));
}

TEST_CASE("logarithmic identities") {
  const PrecisionContext c = make_context(40);
  for (LogIdentity id : {LogIdentity::odd_denominator, LogIdentity::index_denominator}) {
    for (long m : {5L, 10L, 20L}) {
      const auto [lhs, rhs] = log_identity(c, id, m);
      CHECK(abs(lhs - rhs) < Real(c, pow2(-2 * m)));
    }
    const auto [lhs, rhs] = log_identity(c, id, 60);
    CHECK(agree(lhs, rhs, 30));
  }
  CHECK(parse_log_identity("index_denominator") == LogIdentity::index_denominator);
  CHECK(test_util::error_kind_of([] { parse_log_identity("other"); }) == ErrorKind::invalid_argument);
}
