#include <doctest.h>

#include "rdl/ratio.hpp"

using rdl::Ratio;

TEST_CASE("ratio arithmetic stays reduced") {
  Ratio a(8, 12);
  CHECK(a.num == 2);
  CHECK(a.den == 3);
  CHECK(a == Ratio(2, 3));
  CHECK(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
  CHECK(Ratio(3, 4) - Ratio(1, 5) == Ratio(11, 20));
  CHECK(Ratio(2, 3) * Ratio(3, 4) == Ratio(1, 2));
  CHECK(Ratio(2, 3) / Ratio(4, 3) == Ratio(1, 2));
  CHECK(Ratio(-4, 8) == Ratio(1, -2));
}

TEST_CASE("ratio comparisons") {
  CHECK(Ratio(1, 3) < Ratio(1, 2));
  CHECK(Ratio(2, 3) > Ratio(1, 2));
  CHECK(Ratio(5, 10) <= Ratio(1, 2));
  CHECK(Ratio(7, 9).to_double() == doctest::Approx(7.0 / 9.0));
}

TEST_CASE("ratio guards") {
  CHECK_THROWS_AS(Ratio(1, 0), rdl::ParamError);
  CHECK_THROWS_AS(Ratio(1, 2) / Ratio(0, 5), rdl::ParamError);
}
