#include "ndict/key.hpp"

#include <bit>
#include <cmath>

namespace ndict {

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Int: return "Int";
    case Tag::UInt: return "UInt";
    case Tag::Float: return "Float";
    case Tag::Bool: return "Bool";
    case Tag::Text: return "Text";
    case Tag::Array: return "Array";
    case Tag::Node: return "Node";
  }
  return "?";
}

Key Key::of_float(double v) {
  if (!std::isfinite(v))
    throw Error(Errc::BadKey, "float keys must be finite");
  if (v == 0.0) v = 0.0;  // -0.0 canonicalizes to +0.0
  return Key(v);
}

Key Key::of_text(std::string v) {
  if (!is_valid_utf8(v))
    throw Error(Errc::BadKey, "text keys must be valid UTF-8");
  return Key(std::move(v));
}

std::size_t Key::Hash::operator()(const Key& k) const {
  std::size_t h;
  switch (k.tag()) {
    case Tag::Int:
      h = std::hash<std::int64_t>{}(k.as_int());
      break;
    case Tag::UInt:
      h = std::hash<std::uint64_t>{}(k.as_uint());
      break;
    case Tag::Float:
      h = std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(k.as_float()));
      break;
    case Tag::Bool:
      h = k.as_bool() ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull;
      break;
    default:
      h = std::hash<std::string_view>{}(k.as_text());
      break;
  }
  // Mix in the tag so Int 1 / UInt 1 / Bool true land apart.
  return h ^ (static_cast<std::size_t>(k.tag()) * 0xff51afd7ed558ccdull);
}

std::string Key::describe() const {
  switch (tag()) {
    case Tag::Int: return std::string("Int ") + std::to_string(as_int());
    case Tag::UInt: return std::string("UInt ") + std::to_string(as_uint());
    case Tag::Float: return std::string("Float ") + std::to_string(as_float());
    case Tag::Bool: return as_bool() ? "Bool true" : "Bool false";
    default: return std::string("Text \"") + as_text() + "\"";
  }
}

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
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
      return false;
    }
    if (i + static_cast<std::size_t>(len) > n) return false;
    for (int j = 1; j < len; ++j) {
      const unsigned char cc = static_cast<unsigned char>(s[i + j]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    i += static_cast<std::size_t>(len);
  }
  return true;
}

}  // namespace ndict
