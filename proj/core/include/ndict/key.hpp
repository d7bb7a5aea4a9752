#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "ndict/error.hpp"

namespace ndict {

enum class Tag : std::uint8_t { Int, UInt, Float, Bool, Text, Array, Node };

const char* tag_name(Tag t);

/// A typed scalar key. Float keys must be finite and -0.0 is canonicalized
/// to +0.0 so every key has a single stored form. Keys of different tags are
/// distinct even when numerically equal: Int 1, UInt 1 and Float 1.0 are
/// three different keys.
class Key {
 public:
  static Key of_int(std::int64_t v) { return Key(v); }
  static Key of_uint(std::uint64_t v) { return Key(v); }
  static Key of_bool(bool v) { return Key(v); }
  static Key of_float(double v);
  static Key of_text(std::string v);
  static Key of_text(std::string_view v) { return of_text(std::string(v)); }
  static Key of_text(const char* v) { return of_text(std::string(v)); }

  Tag tag() const { return static_cast<Tag>(v_.index()); }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  std::uint64_t as_uint() const { return std::get<std::uint64_t>(v_); }
  double as_float() const { return std::get<double>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }

  bool operator==(const Key& other) const = default;

  struct Hash {
    std::size_t operator()(const Key& k) const;
  };

  /// Debug rendering ("Int 3", "Text \"a\""), used in diagnostics.
  std::string describe() const;

 private:
  template <class T>
  explicit Key(T v) : v_(std::move(v)) {}

  std::variant<std::int64_t, std::uint64_t, double, bool, std::string> v_;
};

/// True when `s` is well-formed UTF-8 (no overlongs, surrogates, or
/// code points beyond U+10FFFF).
bool is_valid_utf8(std::string_view s);

}  // namespace ndict
