#include "scimap/strings.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>

namespace scimap {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

} // namespace

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_ws = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out += ' ';
    in_ws = false;
    out += c;
  }
  return out;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

namespace {

// Two-byte UTF-8 sequences (Latin-1 supplement and Latin Extended-A) mapped
// to ASCII. Keyed by the code point.
const std::map<uint32_t, const char*>& fold_table() {
  static const std::map<uint32_t, const char*> table = {
      {0xC0, "a"}, {0xC1, "a"}, {0xC2, "a"}, {0xC3, "a"}, {0xC4, "a"},
      {0xC5, "a"}, {0xC6, "ae"}, {0xC7, "c"}, {0xC8, "e"}, {0xC9, "e"},
      {0xCA, "e"}, {0xCB, "e"}, {0xCC, "i"}, {0xCD, "i"}, {0xCE, "i"},
      {0xCF, "i"}, {0xD1, "n"}, {0xD2, "o"}, {0xD3, "o"}, {0xD4, "o"},
      {0xD5, "o"}, {0xD6, "o"}, {0xD8, "o"}, {0xD9, "u"}, {0xDA, "u"},
      {0xDB, "u"}, {0xDC, "u"}, {0xDD, "y"}, {0xDF, "ss"},
      {0xE0, "a"}, {0xE1, "a"}, {0xE2, "a"}, {0xE3, "a"}, {0xE4, "a"},
      {0xE5, "a"}, {0xE6, "ae"}, {0xE7, "c"}, {0xE8, "e"}, {0xE9, "e"},
      {0xEA, "e"}, {0xEB, "e"}, {0xEC, "i"}, {0xED, "i"}, {0xEE, "i"},
      {0xEF, "i"}, {0xF1, "n"}, {0xF2, "o"}, {0xF3, "o"}, {0xF4, "o"},
      {0xF5, "o"}, {0xF6, "o"}, {0xF8, "o"}, {0xF9, "u"}, {0xFA, "u"},
      {0xFB, "u"}, {0xFC, "u"}, {0xFD, "y"}, {0xFF, "y"},
      {0x100, "a"}, {0x101, "a"}, {0x106, "c"}, {0x107, "c"},
      {0x10C, "c"}, {0x10D, "c"}, {0x110, "d"}, {0x111, "d"},
      {0x112, "e"}, {0x113, "e"}, {0x11A, "e"}, {0x11B, "e"},
      {0x11E, "g"}, {0x11F, "g"}, {0x130, "i"}, {0x131, "i"},
      {0x141, "l"}, {0x142, "l"}, {0x143, "n"}, {0x144, "n"},
      {0x147, "n"}, {0x148, "n"}, {0x150, "o"}, {0x151, "o"},
      {0x152, "oe"}, {0x153, "oe"}, {0x158, "r"}, {0x159, "r"},
      {0x15A, "s"}, {0x15B, "s"}, {0x15E, "s"}, {0x15F, "s"},
      {0x160, "s"}, {0x161, "s"}, {0x164, "t"}, {0x165, "t"},
      {0x16E, "u"}, {0x16F, "u"}, {0x170, "u"}, {0x171, "u"},
      {0x179, "z"}, {0x17A, "z"}, {0x17B, "z"}, {0x17C, "z"},
      {0x17D, "z"}, {0x17E, "z"},
  };
  return table;
}

} // namespace

std::string ascii_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  const auto& table = fold_table();
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out += static_cast<char>(c);
      ++i;
      continue;
    }
    uint32_t cp = 0;
    size_t len = 0;
    if ((c >> 5) == 0x6 && i + 1 < s.size()) {
      cp = (c & 0x1F) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
      cp = (c & 0x0F) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6 |
           (static_cast<unsigned char>(s[i + 2]) & 0x3F);
      len = 3;
    } else {
      ++i; // stray byte
      continue;
    }
    auto it = table.find(cp);
    if (it != table.end()) {
      out += it->second;
    } else if (cp == 0x2013 || cp == 0x2014) {
      out += '-'; // en/em dash
    }
    // other non-ASCII code points are dropped
    i += len;
  }
  return out;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

bool parse_long(std::string_view s, long long& out) {
  std::string t = trim(s);
  if (t.empty()) return false;
  auto first = t.data();
  auto last = t.data() + t.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

} // namespace scimap
