#include "bibench/names.hpp"

#include <cctype>
#include <cstdint>

namespace bibench {

namespace {

// Decodes one UTF-8 code point starting at s[i]; advances i past it.
// Malformed bytes decode as U+FFFD and advance by one.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return std::uint8_t(s[k]); };
  std::uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return k < s.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    std::uint32_t cp = (b0 & 0x1Fu) << 6 | (byte(i + 1) & 0x3Fu);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    std::uint32_t cp = (b0 & 0x0Fu) << 12 | (byte(i + 1) & 0x3Fu) << 6 |
                       (byte(i + 2) & 0x3Fu);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    std::uint32_t cp = (b0 & 0x07u) << 18 | (byte(i + 1) & 0x3Fu) << 12 |
                       (byte(i + 2) & 0x3Fu) << 6 | (byte(i + 3) & 0x3Fu);
    i += 4;
    return cp;
  }
  i += 1;
  return 0xFFFD;
}

// Maps one code point to its folded ASCII uppercase letters, or "" when the
// code point carries no letter content. Covers ASCII, Latin-1 supplement and
// Latin Extended-A, which is what European author names need.
std::string fold_letter(std::uint32_t cp) {
  if (cp < 0x80) {
    char c = char(cp);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return std::string(1, char(std::toupper(static_cast<unsigned char>(c))));
    }
    return "";
  }
  struct Range {
    std::uint32_t lo, hi;
    const char* out;
  };
  // Latin-1 supplement, upper and lower halves.
  static const Range kLatin1[] = {
      {0xC0, 0xC5, "A"}, {0xC6, 0xC6, "AE"}, {0xC7, 0xC7, "C"},
      {0xC8, 0xCB, "E"}, {0xCC, 0xCF, "I"},  {0xD0, 0xD0, "D"},
      {0xD1, 0xD1, "N"}, {0xD2, 0xD6, "O"},  {0xD8, 0xD8, "O"},
      {0xD9, 0xDC, "U"}, {0xDD, 0xDD, "Y"},  {0xDE, 0xDE, "TH"},
      {0xDF, 0xDF, "SS"},
      {0xE0, 0xE5, "A"}, {0xE6, 0xE6, "AE"}, {0xE7, 0xE7, "C"},
      {0xE8, 0xEB, "E"}, {0xEC, 0xEF, "I"},  {0xF0, 0xF0, "D"},
      {0xF1, 0xF1, "N"}, {0xF2, 0xF6, "O"},  {0xF8, 0xF8, "O"},
      {0xF9, 0xFC, "U"}, {0xFD, 0xFD, "Y"},  {0xFE, 0xFE, "TH"},
      {0xFF, 0xFF, "Y"},
  };
  // Latin Extended-A, grouped by base letter.
  static const Range kLatinExtA[] = {
      {0x100, 0x105, "A"},  {0x106, 0x10D, "C"}, {0x10E, 0x111, "D"},
      {0x112, 0x11B, "E"},  {0x11C, 0x123, "G"}, {0x124, 0x127, "H"},
      {0x128, 0x131, "I"},  {0x132, 0x133, "IJ"}, {0x134, 0x135, "J"},
      {0x136, 0x138, "K"},  {0x139, 0x142, "L"}, {0x143, 0x14B, "N"},
      {0x14C, 0x151, "O"},  {0x152, 0x153, "OE"}, {0x154, 0x159, "R"},
      {0x15A, 0x161, "S"},  {0x162, 0x167, "T"}, {0x168, 0x173, "U"},
      {0x174, 0x175, "W"},  {0x176, 0x178, "Y"}, {0x179, 0x17E, "Z"},
  };
  for (const auto& r : kLatin1) {
    if (cp >= r.lo && cp <= r.hi) return r.out;
  }
  for (const auto& r : kLatinExtA) {
    if (cp >= r.lo && cp <= r.hi) return r.out;
  }
  return "";
}

}  // namespace

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    out += fold_letter(decode_utf8(raw, i));
  }
  return out;
}

std::string extract_initials(std::string_view given) {
  std::string out;
  bool in_run = false;
  std::size_t i = 0;
  while (i < given.size()) {
    std::string folded = fold_letter(decode_utf8(given, i));
    if (folded.empty()) {
      in_run = false;
    } else {
      if (!in_run) out += folded[0];
      in_run = true;
    }
  }
  return out;
}

NameParts split_author(std::string_view raw) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  raw = trim(raw);
  std::size_t comma = raw.rfind(',');
  if (comma != std::string_view::npos) {
    return NameParts{std::string(trim(raw.substr(0, comma))),
                     std::string(trim(raw.substr(comma + 1)))};
  }
  std::size_t space = raw.rfind(' ');
  if (space != std::string_view::npos) {
    return NameParts{std::string(trim(raw.substr(0, space))),
                     std::string(trim(raw.substr(space + 1)))};
  }
  return NameParts{std::string(raw), ""};
}

}  // namespace bibench
