#ifndef BIBENCH_DATES_HPP_
#define BIBENCH_DATES_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace bibench {

// Calendar date used for citation events and observation cutoffs.
struct Date {
  int year = 0;
  int month = 1;
  int day = 1;
  auto operator<=>(const Date&) const = default;
};

// Parses a strict YYYY-MM-DD date. Rejects calendar-impossible values
// (month 13, April 31, Feb 29 outside leap years).
std::optional<Date> parse_date(std::string_view text);

std::string format_date(const Date& d);

// Days since 1970-01-01; negative before the epoch.
long to_epoch_days(const Date& d);
Date from_epoch_days(long epoch_days);

}  // namespace bibench

#endif  // BIBENCH_DATES_HPP_
