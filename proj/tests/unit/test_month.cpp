#include "attnscope/month.hpp"

#include "oracle_data.hpp"
#include "test_support.hpp"

using attnscope::Errc;
using attnscope::Month;

TEST(Month, ParseAndPrintRoundTrip) {
  for (const char* s : {"1970-01", "2006-12", "2021-03", "9999-12"}) {
    EXPECT_EQ(Month::parse(s).to_string(), s);
  }
}

TEST(Month, RejectsMalformedText) {
  for (const char* s : {"", "2006", "2006-13", "2006-00", "2006-1", "06-01", "2006/01", "2006-01-01", "abcd-ef"}) {
    EXPECT_ERRC(Month::parse(s), Errc::ParseError);
  }
}

TEST(Month, ArithmeticCrossesYearBoundaries) {
  const Month m = Month::parse("2006-11");
  EXPECT_EQ((m + 2).to_string(), "2007-01");
  EXPECT_EQ((m + -11).to_string(), "2005-12");
  EXPECT_EQ(Month::parse("2008-02") - m, 15);
  EXPECT_LT(m, m + 1);
  EXPECT_EQ(m.year(), 2006);
  EXPECT_EQ(m.month(), 11u);
}

TEST(Month, BucketMatchesUtcCalendar) {
  for (const auto& c : oracle::kBucketCases) {
    const Month m = attnscope::bucket_month(c.epoch);
    EXPECT_EQ(m.year(), c.year) << c.epoch;
    EXPECT_EQ(m.month(), c.month) << c.epoch;
  }
}

TEST(Month, PreEpochTimestampRejected) {
  EXPECT_ERRC(attnscope::bucket_month(-1), Errc::PreEpochTimestamp);
}
