#include "theta/applications.hpp"

#include <gtest/gtest.h>

#include "theta/errors.hpp"
#include "theta/exact.hpp"

namespace theta::applications {
namespace {

using asymptotics::SeriesConfig;

Real rel(const Real& a, const Real& b) { return abs(a - b) / abs(b); }
Real lit(const char* text) { return Real::parse(text, 50); }

TEST(DistributionTable, RowsMatchExactAndPublished) {
  const auto rows = distribution_table(15, SeriesConfig::defaults());
  ASSERT_EQ(rows.size(), 15u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.exact, exact::theta(row.s));
    if (row.s <= 13) EXPECT_EQ(row.exact.to_string(), published::kThetaExact[row.s - 1]);
  }
  EXPECT_FALSE(rows[0].approx.has_value());
  EXPECT_FALSE(rows[0].rel_error.has_value());

  EXPECT_EQ(rows[4].exact, BigNat(41));
  EXPECT_LT(rel(*rows[4].approx, lit("43.04")), lit("0.01"));
  EXPECT_EQ(rows[12].exact.to_string(), "823059745");
  EXPECT_LT(rel(*rows[12].approx, lit("871052794.3")), lit("0.01"));

  EXPECT_EQ(rows[14].exact.to_string(), "149796873605");
  EXPECT_NE(rows[14].note.find("1.604966503e11"), std::string::npos);
  for (std::size_t i = 0; i < 14; ++i) EXPECT_TRUE(rows[i].note.empty());
}

TEST(DistributionTable, ApproximantOverestimates) {
  const auto rows = distribution_table(200, SeriesConfig::defaults());
  for (const auto& row : rows) {
    if (row.s < 2) continue;
    EXPECT_GT(row.rel_error->sign(), 0) << row.s;
    EXPECT_GT(*row.approx, Real::from_integer(row.exact, 50)) << row.s;
  }
}

TEST(DistributionTable, RejectsOutOfRange) {
  EXPECT_THROW(distribution_table(1, SeriesConfig::defaults()), DomainError);
  EXPECT_THROW(distribution_table(1001, SeriesConfig::defaults()), DomainError);
}

TEST(Seating, Instance) {
  const auto inst = SeatingInstance::make(4);
  EXPECT_EQ(inst.group_sizes, (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(inst.total_people(), 10u);
  EXPECT_THROW(SeatingInstance::make(0), DomainError);
}

TEST(Seating, FormulaExamples) {
  EXPECT_EQ(seating_count_formula(1), BigNat(1));
  EXPECT_EQ(seating_count_formula(2), BigNat(4));
  EXPECT_EQ(seating_count_formula(3), BigNat(108));
  EXPECT_EQ(seating_count_formula(4), BigNat(27648));  // 4·12·24·24
}

TEST(Seating, FormulaMatchesEnumeration) {
  for (std::uint64_t s = 1; s <= kSeatingBruteforceMax; ++s) {
    EXPECT_EQ(seating_bruteforce(s), seating_count_formula(s)) << s;
  }
  EXPECT_THROW(seating_bruteforce(5), DomainError);
  EXPECT_THROW(seating_bruteforce(0), DomainError);
}

TEST(DiscrepancyReport, KeyFindings) {
  const auto report = discrepancy_report(200, SeriesConfig::defaults());
  ASSERT_NE(report.find("theta15.computed"), nullptr);
  EXPECT_EQ(report.find("theta15.computed")->value, "149796873605");
  EXPECT_EQ(report.find("theta15.published")->value, "1.604966503e11");
  EXPECT_EQ(report.find("theta15.one_plus_15_theta14")->value, "160496650291");
  EXPECT_EQ(report.find("theta15.discrepancy")->value, "true");

  const auto gap_limit = Real::parse(report.find("ratio.gap_to_limit_reference(200)")->value, 30);
  const auto gap_const = Real::parse(report.find("ratio.gap_to_series_constant(200)")->value, 30);
  EXPECT_LT(gap_limit, Real::parse("0.01", 30));
  EXPECT_GT(gap_const, Real::parse("0.05", 30));
  EXPECT_EQ(report.find("ratio.monotone_decreasing_from")->value, "5");
  EXPECT_EQ(report.find("ratio.monotone_decreasing_from_3")->value, "false");

  EXPECT_EQ(report.find("seating.N(2)")->value, "4");
  EXPECT_EQ(report.find("seating.theta(3)")->value, "3");
  EXPECT_EQ(report.find("seating.equal(2)")->value, "false");
  EXPECT_EQ(report.find("seating.N_bruteforce(4)")->value, "27648");
  EXPECT_EQ(report.find("missing.key"), nullptr);
  for (const auto& e : report.entries) EXPECT_FALSE(e.provenance.empty()) << e.key;
}

TEST(DiscrepancyReport, DeterministicAndValidated) {
  const auto a = discrepancy_report(30, SeriesConfig::defaults());
  const auto b = discrepancy_report(30, SeriesConfig::defaults());
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].key, b.entries[i].key);
    EXPECT_EQ(a.entries[i].value, b.entries[i].value);
  }
  EXPECT_THROW(discrepancy_report(14, SeriesConfig::defaults()), DomainError);
}

}  // namespace
}  // namespace theta::applications
