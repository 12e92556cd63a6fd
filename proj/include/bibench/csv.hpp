#ifndef BIBENCH_CSV_HPP_
#define BIBENCH_CSV_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bibench {

// Minimal RFC-4180-style CSV helpers shared by the readers and writers.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view value);
std::string join_csv(std::span<const std::string> fields);

// Fixed-point with the given number of decimals ("%.2f" etc.).
std::string format_fixed(double v, int decimals);

// Table statistic: whole values print as integers, everything else with two
// decimals. Matches how quartile tables mix integer quartiles with real
// means and variances.
std::string format_stat(double v);

// Shortest representation that parses back to the identical double.
std::string format_full(double v);

}  // namespace bibench

#endif  // BIBENCH_CSV_HPP_
