#include <cstdint>
#include <string>
#include <vector>

#include "ndict/json.hpp"
#include "ndict/numio.hpp"

namespace ndict {

namespace {

unsigned hex_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
  return static_cast<unsigned>(c - 'A' + 10);
}

void append_codepoint(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes the contents of a string token (span includes the quotes). The
// tokenizer already validated escape syntax and raw UTF-8.
std::string unescape(std::string_view text, const Token& tok) {
  std::string out;
  out.reserve(tok.end - tok.begin);
  std::size_t i = tok.begin + 1;
  const std::size_t end = tok.end - 1;
  while (i < end) {
    const char c = text[i];
    if (c != '\\') {
      out += c;
      ++i;
      continue;
    }
    const char e = text[i + 1];
    switch (e) {
      case '"': out += '"'; i += 2; break;
      case '\\': out += '\\'; i += 2; break;
      case '/': out += '/'; i += 2; break;
      case 'b': out += '\b'; i += 2; break;
      case 'f': out += '\f'; i += 2; break;
      case 'n': out += '\n'; i += 2; break;
      case 'r': out += '\r'; i += 2; break;
      case 't': out += '\t'; i += 2; break;
      default: {  // \uXXXX
        unsigned cp = 0;
        for (std::size_t j = i + 2; j < i + 6; ++j) cp = (cp << 4) | hex_digit(text[j]);
        i += 6;
        if (cp >= 0xD800 && cp <= 0xDBFF) {
          if (i + 6 <= end && text[i] == '\\' && text[i + 1] == 'u') {
            unsigned lo = 0;
            for (std::size_t j = i + 2; j < i + 6; ++j) lo = (lo << 4) | hex_digit(text[j]);
            if (lo >= 0xDC00 && lo <= 0xDFFF) {
              cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
              i += 6;
            } else {
              throw Error(Errc::Syntax, "unpaired surrogate escape", i - 6);
            }
          } else {
            throw Error(Errc::Syntax, "unpaired surrogate escape", i - 6);
          }
        } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
          throw Error(Errc::Syntax, "unpaired surrogate escape", i - 6);
        }
        append_codepoint(out, cp);
      }
    }
  }
  return out;
}

struct NumberClass {
  enum Kind { IntK, UIntK, FloatK } kind;
  std::int64_t i;
  std::uint64_t u;
  double f;
};

NumberClass classify_number(std::string_view lexeme) {
  const bool integral = lexeme.find_first_of(".eE") == std::string_view::npos;
  if (integral) {
    if (lexeme == "-0") return {NumberClass::FloatK, 0, 0, -0.0};
    try {
      auto v = parse_int(lexeme);
      if (std::holds_alternative<std::int64_t>(v))
        return {NumberClass::IntK, std::get<std::int64_t>(v), 0, 0};
      return {NumberClass::UIntK, 0, std::get<std::uint64_t>(v), 0};
    } catch (const Error& e) {
      if (e.code() != Errc::OutOfRange) throw;
    }
  }
  return {NumberClass::FloatK, 0, 0, parse_float(lexeme)};
}

class Builder {
 public:
  Builder(std::string_view text, const std::vector<Token>& toks,
          const ParseOptions& opts)
      : text_(text), toks_(toks), opts_(opts) {}

  Node build() {
    if (toks_[0].kind != TokenKind::ObjectStart)
      throw Error(Errc::TopLevelNotObject, "top level must be a JSON object",
                  toks_[0].begin);
    pos_ = 0;
    return object(1);
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  std::string_view lexeme(const Token& t) const {
    return text_.substr(t.begin, t.end - t.begin);
  }

  Key make_key(const Token& tok) {
    std::string s = unescape(text_, tok);
    if (!opts_.key_inference) return Key::of_text(std::move(s));
    return infer_key(s);
  }

  Node object(int depth) {
    if (depth > opts_.max_depth)
      throw Error(Errc::DepthExceeded, "nesting deeper than max_depth",
                  cur().begin);
    Node node;
    ++pos_;  // ObjectStart
    while (cur().kind != TokenKind::ObjectEnd) {
      const Token& key_tok = cur();
      Key key = make_key(key_tok);
      ++pos_;
      if (Entry* existing = node.find(key)) {
        if (opts_.duplicates == ParseOptions::OnDuplicate::Error)
          throw Error(Errc::DuplicateKey, "duplicate key " + key.describe(),
                      key_tok.begin);
        existing->value = value(depth);
        continue;
      }
      Value v = value(depth);
      node.put(key, Entry{std::move(v), std::nullopt});
    }
    ++pos_;  // ObjectEnd
    return node;
  }

  Value value(int depth) {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::ObjectStart:
        return Value::of_node(object(depth + 1));
      case TokenKind::ArrayStart:
        return array();
      case TokenKind::String: {
        std::string s = unescape(text_, t);
        ++pos_;
        return Value::of_text(std::move(s));
      }
      case TokenKind::Number: {
        const NumberClass nc = classify_number(lexeme(t));
        ++pos_;
        switch (nc.kind) {
          case NumberClass::IntK: return Value::of_int(nc.i);
          case NumberClass::UIntK: return Value::of_uint(nc.u);
          default: return Value::of_float(nc.f);
        }
      }
      case TokenKind::True:
        ++pos_;
        return Value::of_bool(true);
      case TokenKind::False:
        ++pos_;
        return Value::of_bool(false);
      case TokenKind::Null:
        throw Error(Errc::BadValue, "JSON null is not representable", t.begin);
      default:
        throw Error(Errc::Syntax, "unexpected token", t.begin);
    }
  }

  Value array() {
    const std::size_t at = cur().begin;
    ++pos_;  // ArrayStart
    std::vector<NumberClass> nums;
    std::vector<bool> bools;
    bool any_bool = false;
    bool any_num = false;
    while (cur().kind != TokenKind::ArrayEnd) {
      const Token& t = cur();
      switch (t.kind) {
        case TokenKind::Number:
          nums.push_back(classify_number(lexeme(t)));
          any_num = true;
          ++pos_;
          break;
        case TokenKind::True:
        case TokenKind::False:
          bools.push_back(t.kind == TokenKind::True);
          any_bool = true;
          ++pos_;
          break;
        case TokenKind::ArrayStart:
          throw Error(Errc::UnsupportedArray, "nested arrays are not supported",
                      t.begin);
        case TokenKind::ObjectStart:
          throw Error(Errc::UnsupportedArray,
                      "objects inside arrays are not supported", t.begin);
        case TokenKind::Null:
          throw Error(Errc::UnsupportedArray, "null inside array", t.begin);
        default:
          throw Error(Errc::UnsupportedArray,
                      "array elements must be numbers or booleans", t.begin);
      }
      if (any_bool && any_num)
        throw Error(Errc::UnsupportedArray, "heterogeneous array", at);
    }
    ++pos_;  // ArrayEnd
    if (any_bool) return Value::of_array(Array::of_bools(std::move(bools)));
    return Value::of_array(make_numeric_array(nums));
  }

  static Array make_numeric_array(const std::vector<NumberClass>& nums) {
    bool any_float = false;
    bool any_neg = false;
    bool any_big_uint = false;
    for (const auto& n : nums) {
      if (n.kind == NumberClass::FloatK) any_float = true;
      if (n.kind == NumberClass::IntK && n.i < 0) any_neg = true;
      if (n.kind == NumberClass::UIntK) any_big_uint = true;
    }
    if (any_float || (any_neg && any_big_uint)) {
      std::vector<double> out;
      out.reserve(nums.size());
      for (const auto& n : nums) {
        switch (n.kind) {
          case NumberClass::IntK: out.push_back(static_cast<double>(n.i)); break;
          case NumberClass::UIntK: out.push_back(static_cast<double>(n.u)); break;
          default: out.push_back(n.f);
        }
      }
      return Array::of_floats(std::move(out));
    }
    if (any_big_uint) {
      std::vector<std::uint64_t> out;
      out.reserve(nums.size());
      for (const auto& n : nums) {
        out.push_back(n.kind == NumberClass::IntK
                          ? static_cast<std::uint64_t>(n.i)
                          : n.u);
      }
      return Array::of_uints(std::move(out));
    }
    std::vector<std::int64_t> out;
    out.reserve(nums.size());
    for (const auto& n : nums) out.push_back(n.i);
    return Array::of_ints(std::move(out));
  }

  std::string_view text_;
  const std::vector<Token>& toks_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Key infer_key(std::string_view text) {
  try {
    auto v = parse_int(text);
    if (std::holds_alternative<std::int64_t>(v))
      return Key::of_int(std::get<std::int64_t>(v));
    return Key::of_uint(std::get<std::uint64_t>(v));
  } catch (const Error&) {
  }
  if (is_json_number(text)) {
    try {
      return Key::of_float(parse_float(text));
    } catch (const Error&) {
    }
  }
  return Key::of_text(text);
}

Node deserialize(std::string_view text, const ParseOptions& opts) {
  if (opts.max_depth < 1)
    throw Error(Errc::BadOptions, "max_depth must be >= 1");
  const std::vector<Token> toks = tokenize(text);
  Builder b(text, toks, opts);
  return b.build();
}

}  // namespace ndict
