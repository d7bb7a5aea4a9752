#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ndict/key.hpp"

namespace ndict {

class Node;
class Value;

/// Homogeneous array of scalars. The element tag is fixed at construction;
/// all elements share it.
class Array {
 public:
  static Array of_ints(std::vector<std::int64_t> v) { return Array(std::move(v)); }
  static Array of_uints(std::vector<std::uint64_t> v) { return Array(std::move(v)); }
  static Array of_floats(std::vector<double> v) { return Array(std::move(v)); }
  static Array of_bools(std::vector<bool> v) { return Array(std::move(v)); }

  Tag elem_tag() const { return static_cast<Tag>(v_.index()); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  const std::vector<std::int64_t>& ints() const { return std::get<0>(v_); }
  const std::vector<std::uint64_t>& uints() const { return std::get<1>(v_); }
  const std::vector<double>& floats() const { return std::get<2>(v_); }
  const std::vector<bool>& bools() const { return std::get<3>(v_); }

 private:
  template <class T>
  explicit Array(T v) : v_(std::move(v)) {}

  std::variant<std::vector<std::int64_t>, std::vector<std::uint64_t>,
               std::vector<double>, std::vector<bool>>
      v_;
};

/// A tagged value: numeric/bool/text scalar, homogeneous Array, or a nested
/// Node. Float scalars may be any binary64 including NaN/Inf; non-finite
/// values are only rejected at serialization time.
class Value {
 public:
  static Value of_int(std::int64_t v) { return Value(v); }
  static Value of_uint(std::uint64_t v) { return Value(v); }
  static Value of_float(double v) { return Value(v); }
  static Value of_bool(bool v) { return Value(v); }
  static Value of_text(std::string v);
  static Value of_text(std::string_view v) { return of_text(std::string(v)); }
  static Value of_text(const char* v) { return of_text(std::string(v)); }
  static Value of_array(Array v) { return Value(std::move(v)); }
  static Value of_node(Node v);

  Value(const Value& other);
  Value(Value&&) noexcept = default;
  Value& operator=(const Value& other);
  Value& operator=(Value&&) noexcept = default;
  ~Value() = default;

  Tag tag() const;
  bool is_numeric() const {
    Tag t = tag();
    return t == Tag::Int || t == Tag::UInt || t == Tag::Float;
  }
  bool is_node() const { return tag() == Tag::Node; }

  std::int64_t as_int() const { return expect<std::int64_t>(Tag::Int); }
  std::uint64_t as_uint() const { return expect<std::uint64_t>(Tag::UInt); }
  double as_float() const { return expect<double>(Tag::Float); }
  bool as_bool() const { return expect<bool>(Tag::Bool); }
  const std::string& as_text() const { return expect<std::string>(Tag::Text); }
  const Array& as_array() const { return expect<Array>(Tag::Array); }
  const Node& as_node() const;
  Node& as_node();

  /// Numeric value widened to double (Int/UInt/Float only).
  double to_double() const;

 private:
  template <class T>
  explicit Value(T v) : v_(std::move(v)) {}

  template <class T>
  const T& expect(Tag want) const {
    if (tag() != want)
      throw Error(Errc::TypeMismatch, std::string("value is ") +
                                          tag_name(tag()) + ", wanted " +
                                          tag_name(want));
    return std::get<T>(v_);
  }

  std::variant<std::int64_t, std::uint64_t, double, bool, std::string, Array,
               std::unique_ptr<Node>>
      v_;
};

/// What a key maps to: a value plus optional metadata. Metadata is any
/// Value (including a Node) and survives value replacement.
struct Entry {
  Value value;
  std::optional<Value> metadata;
};

}  // namespace ndict
