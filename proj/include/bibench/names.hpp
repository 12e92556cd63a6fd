#ifndef BIBENCH_NAMES_HPP_
#define BIBENCH_NAMES_HPP_

#include <string>
#include <string_view>

namespace bibench {

// Uppercases, folds Latin diacritics to ASCII and drops everything that is
// not a letter (apostrophes, hyphens, periods, whitespace):
// "D'Angelo" -> "DANGELO", "Müller" -> "MULLER".
std::string normalize_name(std::string_view raw);

// First letter of each alphabetic run, normalized:
// "Maria Anna" -> "MA", "M.A." -> "MA", "Édouard" -> "E".
std::string extract_initials(std::string_view given);

struct NameParts {
  std::string surname;
  std::string given;
};

// Splits a byline author string into surname and given part. The expected
// shapes are "Surname, Initials" and "Surname Initials"; without a comma the
// last whitespace-separated token is taken as the given part.
NameParts split_author(std::string_view raw);

}  // namespace bibench

#endif  // BIBENCH_NAMES_HPP_
