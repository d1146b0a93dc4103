#include "theta/bignat.hpp"

#include <string>

#include <gtest/gtest.h>

#include "theta/errors.hpp"
#include "unit/property.hpp"

namespace theta {
namespace {

TEST(BigNat, DefaultIsZero) {
  BigNat z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_EQ(z.bit_length(), 0u);
}

TEST(BigNat, ParseRejectsMalformedInput) {
  for (const char* bad : {"", "-1", "+1", "12a", " 1", "1,000", "01", "1e3"}) {
    EXPECT_THROW(BigNat::parse(bad), DomainError) << bad;
  }
  EXPECT_EQ(BigNat::parse("0"), BigNat(0));
}

TEST(BigNat, SubtractionNeverGoesNegative) {
  EXPECT_EQ(BigNat(10) - BigNat(4), BigNat(6));
  EXPECT_THROW(BigNat(3) - BigNat(4), DomainError);
}

TEST(BigNat, ShiftAndBitLength) {
  const BigNat v = BigNat::parse("1267650600228229401496703205376");  // 2^100
  EXPECT_EQ(v.bit_length(), 101u);
  EXPECT_EQ(v.shifted_right(90), BigNat(1024));
  EXPECT_THROW(v.to_u64(), DomainError);
  EXPECT_EQ(BigNat(12345).to_u64(), 12345u);
}

TEST(BigNat, DecimalRoundTripProperty) {
  for (int trial = 0; trial < 200; ++trial) {
    std::string digits(1, static_cast<char>('1' + testing::uniform(0, 8)));
    const auto len = testing::uniform(0, 300);
    for (std::uint64_t i = 0; i < len; ++i) digits.push_back(static_cast<char>('0' + testing::uniform(0, 9)));
    EXPECT_EQ(BigNat::parse(digits).to_string(), digits);
  }
}

TEST(BigNat, OrderingFollowsValue) {
  EXPECT_LT(BigNat(41), BigNat(206));
  EXPECT_GT(BigNat::parse("149796873605"), BigNat::parse("10699776686"));
}

}  // namespace
}  // namespace theta
