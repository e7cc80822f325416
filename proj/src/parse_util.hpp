#pragma once

// Small helpers shared by the text format parsers.  Internal to src/.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "qtlink/errors.hpp"

namespace qtlink::detail {

// Removes '#' comments (to end of line), keeping line structure.
inline std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      in_comment = false;
      out.push_back(c);
    } else if (c == '#') {
      in_comment = true;
    } else if (!in_comment) {
      out.push_back(c);
    }
  }
  return out;
}

inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
        c == '\v') {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

inline bool try_parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

inline long long parse_int(std::string_view token, std::string_view what) {
  long long v = 0;
  if (!try_parse_int(token, v)) {
    throw ParseError("expected integer for " + std::string(what) + ", got '" +
                     std::string(token) + "'");
  }
  return v;
}

}  // namespace qtlink::detail
