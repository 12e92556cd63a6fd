#include "bibench/dates.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

namespace bibench {

namespace {

bool parse_int_field(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::chrono::year_month_day to_ymd(const Date& d) {
  return std::chrono::year_month_day{std::chrono::year{d.year},
                                     std::chrono::month{unsigned(d.month)},
                                     std::chrono::day{unsigned(d.day)}};
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0, m = 0, d = 0;
  if (!parse_int_field(text.substr(0, 4), y) ||
      !parse_int_field(text.substr(5, 2), m) ||
      !parse_int_field(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  Date date{y, m, d};
  if (!to_ymd(date).ok()) return std::nullopt;
  return date;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

long to_epoch_days(const Date& d) {
  return std::chrono::sys_days(to_ymd(d)).time_since_epoch().count();
}

Date from_epoch_days(long epoch_days) {
  std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{epoch_days}}};
  return Date{int(ymd.year()), int(unsigned(ymd.month())),
              int(unsigned(ymd.day()))};
}

}  // namespace bibench
