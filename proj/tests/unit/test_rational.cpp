#include <doctest.h>

#include "../test_util.hpp"
#include "oddzeta/rational.hpp"

using namespace oddzeta;

TEST_CASE("canonical form") {
  const ExactRational q = make_rational(6, -8);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 4);
  CHECK(to_string(q) == "-3/4");
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK(test_util::error_kind_of([] { make_rational(1, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("powers") {
  CHECK(pow2(-3) == make_rational(1, 8));
  CHECK(pow2(5) == 32);
  CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(pow(make_rational(2, 3), 0) == 1);
}

TEST_CASE("scientific rendering") {
  CHECK(to_scientific(make_rational(1, 3), 3) == "3.33e-01");
  CHECK(to_scientific(ExactRational(12345), 2) == "1.2e+04");
}
