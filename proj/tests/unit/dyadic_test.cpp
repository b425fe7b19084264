#include "hoising/dyadic.hpp"

#include <gtest/gtest.h>

namespace hoising {
namespace {

TEST(Dyadic, NormalizesSoEqualValuesCompareEqual) {
  EXPECT_EQ(Dyadic::from_parts(2, 2), Dyadic::from_parts(1, 1));
  EXPECT_EQ(Dyadic::from_parts(0, 5), Dyadic(0));
  EXPECT_EQ(Dyadic::from_parts(3, -2), Dyadic(12));
}

TEST(Dyadic, ArithmeticIsExact) {
  const auto eighth = Dyadic::from_parts(1, 3);
  Dyadic sum;
  for (int i = 0; i < 8; ++i) sum += eighth;
  EXPECT_EQ(sum, Dyadic(1));
  EXPECT_EQ(eighth.scaled_pow2(3), Dyadic(1));
  EXPECT_EQ(eighth * Dyadic::from_parts(1, 1), Dyadic::from_parts(1, 4));
  EXPECT_EQ(Dyadic::from_parts(1, 1) - Dyadic::from_parts(3, 2), Dyadic::from_parts(-1, 2));
  EXPECT_DOUBLE_EQ(Dyadic::from_parts(-3, 4).to_double(), -0.1875);
  EXPECT_EQ(Dyadic::from_parts(-3, 4).to_string(), "-3/16");
}

}  // namespace
}  // namespace hoising
