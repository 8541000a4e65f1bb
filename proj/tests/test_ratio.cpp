#include <doctest.h>

#include <limits>

#include "lexsel/error.hpp"
#include "lexsel/ratio.hpp"

using lexsel::Ratio;

TEST_CASE("ratio normalises sign and common factors") {
  Ratio r(4, 6);
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);
  Ratio neg(3, -9);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 3);
  CHECK(Ratio(0, 5) == Ratio(0));
  CHECK_THROWS_AS(Ratio(1, 0), lexsel::Error);
}

TEST_CASE("ratio arithmetic is exact") {
  CHECK(Ratio(1, 3) + Ratio(1, 6) == Ratio(1, 2));
  CHECK(Ratio(1, 2) - Ratio(3, 4) == Ratio(-1, 4));
  CHECK(Ratio(2, 3) * Ratio(9, 4) == Ratio(3, 2));
  CHECK(Ratio(2, 3) / Ratio(4, 9) == Ratio(3, 2));
  Ratio acc;
  for (int i = 0; i < 10; ++i) acc += Ratio(1, 10);
  CHECK(acc == Ratio(1));
}

TEST_CASE("ratio ordering uses cross multiplication") {
  CHECK(Ratio(2, 3) > Ratio(3, 5));
  CHECK(Ratio(6, 8) == Ratio(3, 4));
  CHECK(Ratio(-1, 2) < Ratio(0));
  CHECK((Ratio(4, 5) <=> Ratio(8, 10)) == std::strong_ordering::equal);
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() - 1;
  CHECK(Ratio(big - 1, big) < Ratio(big, big + 1));
}

TEST_CASE("ratio formatting") {
  CHECK(Ratio(2, 3).str() == "2/3");
  CHECK(Ratio(1).str() == "1");
  CHECK(Ratio(2, 3).decimal() == "0.666667");
  CHECK(Ratio(1).decimal() == "1.000000");
  CHECK(Ratio(-1, 8).decimal(3) == "-0.125");
}

TEST_CASE("ratio from decimal text") {
  CHECK(Ratio::from_double(0.5) == Ratio(1, 2));
  CHECK(Ratio::from_double(0.1) == Ratio(1, 10));
  CHECK(Ratio::from_double(2.0) == Ratio(2));
  CHECK(Ratio::from_double(0.75) == Ratio(3, 4));
}

TEST_CASE("ratio overflow is reported") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Ratio(big) * Ratio(big), lexsel::Error);
}
