#include "deckforge/text_util.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <set>

namespace deckforge {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
char lower_ch(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
char upper_ch(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

const std::set<std::string>& small_words() {
  static const std::set<std::string> words = {"a",  "an", "and", "as",  "at", "but", "by",
                                              "for", "from", "in", "of", "on", "or", "the",
                                              "to",  "with"};
  return words;
}

bool is_vowel(char c) {
  c = lower_ch(c);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), lower_ch);
  return out;
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), upper_ch);
  return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  const std::string h = to_lower(haystack);
  const std::string n = to_lower(needle);
  return h.find(n) != std::string::npos;
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

std::string title_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::string word;
  bool first_word = true;
  auto flush = [&] {
    if (word.empty()) return;
    if (first_word || small_words().count(to_lower(word)) == 0) {
      word[0] = upper_ch(word[0]);
    } else {
      word = to_lower(word);
    }
    out += word;
    word.clear();
    first_word = false;
  };
  for (char c : s) {
    if (is_space(c)) {
      flush();
      out += c;
    } else {
      word += c;
    }
  }
  flush();
  return out;
}

std::string a_an(std::string_view s) {
  if (s.empty()) return std::string(s);
  return (is_vowel(s.front()) ? "an " : "a ") + std::string(s);
}

std::string pluralize(std::string_view s) {
  std::string w(s);
  if (w.empty()) return w;
  auto ends_with = [&](std::string_view suf) {
    return w.size() >= suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") || ends_with("sh")) {
    return w + "es";
  }
  if (w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  return w + "s";
}

std::string gerund(std::string_view s) {
  std::string w(s);
  if (w.empty()) return w;
  auto ends_with = [&](std::string_view suf) {
    return w.size() >= suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with("ie")) return w.substr(0, w.size() - 2) + "ying";
  if (ends_with("e") && !ends_with("ee") && !ends_with("oe") && !ends_with("ye")) {
    return w.substr(0, w.size() - 1) + "ing";
  }
  return w + "ing";
}

std::string wikihow_action_from_title(std::string_view title) {
  std::string t = trim(title);
  const std::string low = to_lower(t);
  size_t strip = 0;
  if (low.rfind("how to ", 0) == 0) {
    strip = 7;
  } else {
    // "<number> ways to "
    size_t i = 0;
    while (i < low.size() && std::isdigit(static_cast<unsigned char>(low[i]))) ++i;
    if (i > 0 && low.compare(i, 9, " ways to ") == 0) strip = i + 9;
  }
  return to_lower(t.substr(strip));
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string format_double6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";  // canonical zero
  return s;
}

std::string base64_encode(const unsigned char* data, size_t len) {
  static const char table[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 3 <= len; i += 3) {
    const uint32_t n = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out += table[(n >> 18) & 63];
    out += table[(n >> 12) & 63];
    out += table[(n >> 6) & 63];
    out += table[n & 63];
  }
  if (i + 1 == len) {
    const uint32_t n = data[i] << 16;
    out += table[(n >> 18) & 63];
    out += table[(n >> 12) & 63];
    out += "==";
  } else if (i + 2 == len) {
    const uint32_t n = (data[i] << 16) | (data[i + 1] << 8);
    out += table[(n >> 18) & 63];
    out += table[(n >> 12) & 63];
    out += table[(n >> 6) & 63];
    out += '=';
  }
  return out;
}

}  // namespace deckforge
