#include <string_view>

#include "ndict/json.hpp"

namespace ndict {

namespace {

[[noreturn]] void fail(std::size_t at, const char* msg) {
  throw Error(Errc::Syntax, msg, at);
}

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Length of the UTF-8 sequence starting at i, 0 when malformed.
int utf8_len(std::string_view t, std::size_t i) {
  const unsigned char c = static_cast<unsigned char>(t[i]);
  int len;
  unsigned cp;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return 0;
  }
  if (i + static_cast<std::size_t>(len) > t.size()) return 0;
  for (int j = 1; j < len; ++j) {
    const unsigned char cc = static_cast<unsigned char>(t[i + j]);
    if ((cc & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (cc & 0x3F);
  }
  if (len == 2 && cp < 0x80) return 0;
  if (len == 3 && cp < 0x800) return 0;
  if (len == 4 && cp < 0x10000) return 0;
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

std::size_t scan_string_token(std::string_view t, std::size_t i) {
  const std::size_t n = t.size();
  ++i;  // opening quote
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(t[i]);
    if (c == '"') return i + 1;
    if (c == '\\') {
      if (i + 1 >= n) fail(n, "unterminated escape");
      const char e = t[i + 1];
      switch (e) {
        case '"':
        case '\\':
        case '/':
        case 'b':
        case 'f':
        case 'n':
        case 'r':
        case 't':
          i += 2;
          break;
        case 'u': {
          if (i + 6 > n) fail(n, "truncated \\u escape");
          for (std::size_t j = i + 2; j < i + 6; ++j) {
            const char h = t[j];
            const bool hex = (h >= '0' && h <= '9') || (h >= 'a' && h <= 'f') ||
                             (h >= 'A' && h <= 'F');
            if (!hex) fail(j, "bad \\u escape digit");
          }
          i += 6;
          break;
        }
        default:
          fail(i + 1, "bad escape character");
      }
    } else if (c < 0x20) {
      fail(i, "raw control character in string");
    } else if (c < 0x80) {
      ++i;
    } else {
      const int len = utf8_len(t, i);
      if (len == 0) fail(i, "invalid UTF-8 sequence");
      i += static_cast<std::size_t>(len);
    }
  }
  fail(n, "unterminated string");
}

std::size_t scan_number_token(std::string_view t, std::size_t i) {
  const std::size_t n = t.size();
  if (t[i] == '-') ++i;
  if (i >= n || t[i] < '0' || t[i] > '9') fail(i, "expected digit");
  if (t[i] == '0') {
    ++i;
  } else {
    while (i < n && t[i] >= '0' && t[i] <= '9') ++i;
  }
  if (i < n && t[i] == '.') {
    ++i;
    if (i >= n || t[i] < '0' || t[i] > '9') fail(i, "expected fraction digit");
    while (i < n && t[i] >= '0' && t[i] <= '9') ++i;
  }
  if (i < n && (t[i] == 'e' || t[i] == 'E')) {
    ++i;
    if (i < n && (t[i] == '+' || t[i] == '-')) ++i;
    if (i >= n || t[i] < '0' || t[i] > '9') fail(i, "expected exponent digit");
    while (i < n && t[i] >= '0' && t[i] <= '9') ++i;
  }
  return i;
}

std::size_t scan_literal(std::string_view t, std::size_t i, std::string_view word) {
  if (t.substr(i, word.size()) != word) fail(i, "bad literal");
  return i + word.size();
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::vector<char> stack;
  std::size_t i = 0;
  const std::size_t n = text.size();

  enum class Expect { Value, ValueOrEnd, KeyOrEnd, Key, Colon, CommaOrEnd };
  Expect ex = Expect::Value;
  bool done = false;

  auto value_finished = [&] {
    if (stack.empty())
      done = true;
    else
      ex = Expect::CommaOrEnd;
  };

  while (!done) {
    while (i < n && is_ws(text[i])) ++i;
    if (i >= n) fail(n, "unexpected end of input");
    const char c = text[i];
    switch (ex) {
      case Expect::Value:
      case Expect::ValueOrEnd: {
        if (c == ']' && ex == Expect::ValueOrEnd) {
          out.push_back({TokenKind::ArrayEnd, i, i + 1});
          stack.pop_back();
          ++i;
          value_finished();
          break;
        }
        if (c == '{') {
          out.push_back({TokenKind::ObjectStart, i, i + 1});
          stack.push_back('{');
          ++i;
          ex = Expect::KeyOrEnd;
        } else if (c == '[') {
          out.push_back({TokenKind::ArrayStart, i, i + 1});
          stack.push_back('[');
          ++i;
          ex = Expect::ValueOrEnd;
        } else if (c == '"') {
          const std::size_t end = scan_string_token(text, i);
          out.push_back({TokenKind::String, i, end});
          i = end;
          value_finished();
        } else if (c == '-' || (c >= '0' && c <= '9')) {
          const std::size_t end = scan_number_token(text, i);
          out.push_back({TokenKind::Number, i, end});
          i = end;
          value_finished();
        } else if (c == 't') {
          const std::size_t end = scan_literal(text, i, "true");
          out.push_back({TokenKind::True, i, end});
          i = end;
          value_finished();
        } else if (c == 'f') {
          const std::size_t end = scan_literal(text, i, "false");
          out.push_back({TokenKind::False, i, end});
          i = end;
          value_finished();
        } else if (c == 'n') {
          const std::size_t end = scan_literal(text, i, "null");
          out.push_back({TokenKind::Null, i, end});
          i = end;
          value_finished();
        } else {
          fail(i, "expected value");
        }
        break;
      }
      case Expect::KeyOrEnd:
        if (c == '}') {
          out.push_back({TokenKind::ObjectEnd, i, i + 1});
          stack.pop_back();
          ++i;
          value_finished();
          break;
        }
        [[fallthrough]];
      case Expect::Key: {
        if (c != '"') fail(i, "expected object key");
        const std::size_t end = scan_string_token(text, i);
        out.push_back({TokenKind::String, i, end});
        i = end;
        ex = Expect::Colon;
        break;
      }
      case Expect::Colon:
        if (c != ':') fail(i, "expected ':'");
        ++i;
        ex = Expect::Value;
        break;
      case Expect::CommaOrEnd: {
        const char open = stack.back();
        if (c == ',') {
          ++i;
          ex = open == '{' ? Expect::Key : Expect::Value;
        } else if (c == '}' && open == '{') {
          out.push_back({TokenKind::ObjectEnd, i, i + 1});
          stack.pop_back();
          ++i;
          value_finished();
        } else if (c == ']' && open == '[') {
          out.push_back({TokenKind::ArrayEnd, i, i + 1});
          stack.pop_back();
          ++i;
          value_finished();
        } else {
          fail(i, open == '{' ? "expected ',' or '}'" : "expected ',' or ']'");
        }
        break;
      }
    }
  }
  while (i < n && is_ws(text[i])) ++i;
  if (i != n) fail(i, "trailing characters after document");
  return out;
}

}  // namespace ndict
