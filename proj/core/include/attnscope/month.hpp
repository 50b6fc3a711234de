#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace attnscope {

/// A proleptic-Gregorian calendar month, printed as "YYYY-MM".
/// Stored as a running month index so that differences and successors are
/// plain integer arithmetic.
class Month {
 public:
  constexpr Month() = default;

  static Month from_year_month(int year, unsigned month);
  /// Parses "YYYY-MM"; throws Errc::ParseError on anything else.
  static Month parse(std::string_view text);

  int year() const noexcept { return index_ / 12; }
  unsigned month() const noexcept { return static_cast<unsigned>(index_ % 12) + 1; }
  int index() const noexcept { return index_; }

  Month operator+(int months) const noexcept { return Month(index_ + months); }
  int operator-(Month other) const noexcept { return index_ - other.index_; }

  std::string to_string() const;

  friend constexpr auto operator<=>(Month, Month) = default;

 private:
  constexpr explicit Month(int index) : index_(index) {}
  int index_ = 1970 * 12;
};

/// UTC calendar month of an epoch instant; throws Errc::PreEpochTimestamp
/// for negative input.
Month bucket_month(std::int64_t epoch_seconds);

}  // namespace attnscope
