#include "attnscope/month.hpp"

#include <chrono>
#include <cstdio>

#include "attnscope/error.hpp"

namespace attnscope {

Month Month::from_year_month(int year, unsigned month) {
  if (year < 0 || year > 9999 || month < 1 || month > 12) {
    throw Error(Errc::InvalidArgument, "month out of range");
  }
  return Month(year * 12 + static_cast<int>(month) - 1);
}

Month Month::parse(std::string_view text) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.size() != 7 || text[4] != '-') {
    throw Error(Errc::ParseError, "expected YYYY-MM, got '" + std::string(text) + "'");
  }
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u}) {
    if (!digit(text[i])) {
      throw Error(Errc::ParseError, "expected YYYY-MM, got '" + std::string(text) + "'");
    }
  }
  const int year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 +
                   (text[3] - '0');
  const unsigned month = static_cast<unsigned>((text[5] - '0') * 10 + (text[6] - '0'));
  if (month < 1 || month > 12) {
    throw Error(Errc::ParseError, "month field out of range in '" + std::string(text) + "'");
  }
  return from_year_month(year, month);
}

std::string Month::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u", year(), month());
  return buf;
}

Month bucket_month(std::int64_t epoch_seconds) {
  if (epoch_seconds < 0) {
    throw Error(Errc::PreEpochTimestamp, "timestamp " + std::to_string(epoch_seconds));
  }
  using namespace std::chrono;
  const sys_days day = floor<days>(sys_seconds{seconds{epoch_seconds}});
  const year_month_day ymd{day};
  return Month::from_year_month(static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()));
}

}  // namespace attnscope
