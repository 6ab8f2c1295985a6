#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "../test_util.hpp"
#include "oddzeta/euler_constants.hpp"
#include "oddzeta/printed.hpp"

using namespace oddzeta;
using test_util::agree;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  CHECK(bernoulli(30) == make_rational(8615841276005L, 14322));
  for (unsigned n = 2; n <= 40; ++n) CHECK(bernoulli(n) == test_oracle::bernoulli_double_sum(n));
  const auto table = bernoulli_table(20);
  REQUIRE(table.size() == 21);
  CHECK(table[20] == bernoulli(20));
}

TEST_CASE("even Bernoulli signs alternate") {
  for (unsigned k = 1; k <= 40; ++k) CHECK(sgn(bernoulli(2 * k)) == (k % 2 == 1 ? 1 : -1));
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_neg_int(0) == make_rational(-1, 2));
  CHECK(zeta_neg_int(1) == make_rational(-1, 12));
  CHECK(zeta_neg_int(3) == make_rational(1, 120));
  CHECK(zeta_neg_int(5) == make_rational(-1, 252));
  for (unsigned n = 2; n <= 20; n += 2) CHECK(zeta_neg_int(n) == 0);
}

TEST_CASE("zeta at even integers") {
  const PrecisionContext c = make_context(40);
  const Real pi = c.constant(Constant::pi);
  CHECK(agree(zeta_even(c, 1), pi * pi / 6L, 40));
  CHECK(agree(zeta_even(c, 2), pow(pi, 4) / 90L, 40));
  CHECK(match_printed(zeta_even(c, 1) - 1L, "0.645") != PrintedMatch::mismatch);
  CHECK(agree(zeta_even(c, 5) - 1L, z_even(c, 5), 40));
}

TEST_CASE("Z(2l) keeps relative precision for large l") {
  const PrecisionContext c = make_context(30);
  for (long l : {10L, 42L, 100L}) {
    const Real z = z_even(c, l);
    const Real direct = oracle::dirichlet_zeta_minus_one(c, Real(c, 2 * l));
    CHECK(abs(z / direct - 1L) < test_util::tenth_power(c, 28));
  }
  CHECK(format_scientific(z_even(c, 2), 2) == "8.2E(-2)");
  CHECK(format_scientific(z_even(c, 10), 3) == "9.54E(-7)");
  CHECK(format_scientific(z_even(c, 42), 3) == "5.17E(-26)");
  CHECK(format_scientific(z_even(c, 21), 3) == "2.27E(-13)");
}

TEST_CASE("upper bound F") {
  CHECK(z_bound_F(1) == make_rational(3, 4));
  CHECK(z_bound_F(2) == make_rational(1, 16) * make_rational(5, 3));
  const PrecisionContext c = make_context(30);
  CHECK(format_scientific(Real(c, z_bound_F(2)), 3) == "1.04E(-1)");
}

TEST_CASE("zeta at negative odd integers") {
  const PrecisionContext c = make_context(30);
  for (long n = 1; n <= 12; ++n)
    CHECK(agree(zeta_neg_odd(c, n), Real(c, zeta_neg_int(static_cast<unsigned>(2 * n - 1))), 28));
  CHECK(test_util::error_kind_of([&] { zeta_neg_odd(c, 0); }) == ErrorKind::invalid_argument);
  CHECK(test_util::error_kind_of([&] { zeta_even(c, 0); }) == ErrorKind::invalid_argument);
}
