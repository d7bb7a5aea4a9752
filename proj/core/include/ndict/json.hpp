#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ndict/node.hpp"
#include "ndict/policy.hpp"

namespace ndict {

enum class TokenKind : std::uint8_t {
  ObjectStart,
  ObjectEnd,
  ArrayStart,
  ArrayEnd,
  String,
  Number,
  True,
  False,
  Null,
};

/// One lexical element of a JSON document: kind plus the byte span of its
/// lexeme (string spans include the quotes). No value is materialized.
struct Token {
  TokenKind kind;
  std::size_t begin;
  std::size_t end;
};

/// Single-pass tokenizer for RFC 8259 documents (UTF-8 only). Accepts any
/// top-level value. Throws Syntax with the offset of the first offending
/// byte.
std::vector<Token> tokenize(std::string_view text);

struct SerializeOptions {
  /// 0 = compact; 1..8 = that many spaces per nesting level, one element
  /// per line, ": " after keys.
  int indent = 0;
  /// Emit keys in sorted_keys order instead of insertion order.
  bool sort_keys = false;
  FloatPolicy sort_policy = {};
  FloatFormat float_format = FloatFormat::shortest();
  enum class NonFinite { Error, AsNull };
  NonFinite nonfinite = NonFinite::Error;
};

/// Renders a Node as RFC 8259 JSON text. Keys become JSON strings: Text
/// verbatim (escaped), Int/UInt in decimal, Float via format_float, Bool as
/// "true"/"false". Two keys rendering to the same string throw
/// KeyCollision. Output is deterministic for fixed (node, options).
std::string serialize(const Node& node, const SerializeOptions& opts = {});

/// Renders a single value with the same rules serialize applies to entry
/// values (scalars unquoted except Text).
std::string serialize_value(const Value& value, const SerializeOptions& opts = {});

/// The key inference rule applied to object keys (and CLI path segments):
/// integer-looking text becomes Int/UInt, JSON-number text becomes Float,
/// anything else stays Text.
Key infer_key(std::string_view text);

struct ParseOptions {
  /// Re-type object keys that parse as integers (Int/UInt) or JSON numbers
  /// (Float); off leaves every key as Text.
  bool key_inference = false;
  int max_depth = 128;
  enum class OnDuplicate { Error, LastWins };
  OnDuplicate duplicates = OnDuplicate::Error;
};

/// Builds a Node from JSON text. The top level must be an object. Numbers
/// without fraction/exponent parse as Int/UInt when in range, otherwise as
/// Float; arrays must be homogeneous scalars (integers promote when mixed
/// with floats); null, nested arrays, and heterogeneous arrays are
/// rejected.
Node deserialize(std::string_view text, const ParseOptions& opts = {});

}  // namespace ndict
