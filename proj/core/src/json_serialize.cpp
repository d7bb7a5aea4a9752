#include <cmath>
#include <unordered_set>

#include "ndict/json.hpp"
#include "ndict/numio.hpp"

namespace ndict {

namespace {

void check_options(const SerializeOptions& opts) {
  if (opts.indent < 0 || opts.indent > 8)
    throw Error(Errc::BadOptions, "indent must be 0 (compact) or 1..8");
}

void escape_into(std::string& out, std::string_view s) {
  out += '"';
  for (char raw : s) {
    const unsigned char c = static_cast<unsigned char>(raw);
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
          static const char hex[] = "0123456789abcdef";
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xF];
        } else {
          out += raw;
        }
    }
  }
  out += '"';
}

struct Writer {
  std::string out;
  const SerializeOptions& opts;

  void newline_indent(int level) {
    out += '\n';
    out.append(static_cast<std::size_t>(level * opts.indent), ' ');
  }

  void write_float(double d) {
    if (!std::isfinite(d)) {
      if (opts.nonfinite == SerializeOptions::NonFinite::AsNull) {
        out += "null";
        return;
      }
      throw Error(Errc::NonFinite, "non-finite float value in node");
    }
    out += format_float(d, opts.float_format);
  }

  std::string render_key(const Key& k) {
    switch (k.tag()) {
      case Tag::Int: return std::to_string(k.as_int());
      case Tag::UInt: return std::to_string(k.as_uint());
      case Tag::Float: return format_float(k.as_float(), opts.float_format);
      case Tag::Bool: return k.as_bool() ? "true" : "false";
      default: return std::string(k.as_text());
    }
  }

  void write_array(const Array& a, int level) {
    if (a.empty()) {
      out += "[]";
      return;
    }
    out += '[';
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ',';
      if (opts.indent) newline_indent(level + 1);
      switch (a.elem_tag()) {
        case Tag::Int: out += std::to_string(a.ints()[i]); break;
        case Tag::UInt: out += std::to_string(a.uints()[i]); break;
        case Tag::Float: write_float(a.floats()[i]); break;
        default: out += a.bools()[i] ? "true" : "false"; break;
      }
    }
    if (opts.indent) newline_indent(level);
    out += ']';
  }

  void write_value(const Value& v, int level) {
    switch (v.tag()) {
      case Tag::Int: out += std::to_string(v.as_int()); break;
      case Tag::UInt: out += std::to_string(v.as_uint()); break;
      case Tag::Float: write_float(v.as_float()); break;
      case Tag::Bool: out += v.as_bool() ? "true" : "false"; break;
      case Tag::Text: escape_into(out, v.as_text()); break;
      case Tag::Array: write_array(v.as_array(), level); break;
      case Tag::Node: write_node(v.as_node(), level); break;
    }
  }

  void write_node(const Node& node, int level) {
    if (node.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    std::unordered_set<std::string> seen;
    seen.reserve(node.size());
    bool first = true;
    auto emit = [&](const Key& key, const Entry& entry) {
      std::string rk = render_key(key);
      if (!seen.insert(rk).second)
        throw Error(Errc::KeyCollision,
                    "distinct keys render to the same JSON string \"" + rk +
                        "\" (" + key.describe() + ")");
      if (!first) out += ',';
      first = false;
      if (opts.indent) newline_indent(level + 1);
      escape_into(out, rk);
      out += opts.indent ? ": " : ":";
      write_value(entry.value, level + 1);
    };
    if (opts.sort_keys) {
      for (const Key& key : node.sorted_keys(opts.sort_policy))
        emit(key, *node.find(key));
    } else {
      for (const auto& [key, entry] : node) emit(key, entry);
    }
    if (opts.indent) newline_indent(level);
    out += '}';
  }
};

}  // namespace

std::string serialize(const Node& node, const SerializeOptions& opts) {
  check_options(opts);
  Writer w{{}, opts};
  w.out.reserve(64);
  w.write_node(node, 0);
  return std::move(w.out);
}

std::string serialize_value(const Value& value, const SerializeOptions& opts) {
  check_options(opts);
  Writer w{{}, opts};
  w.write_value(value, 0);
  return std::move(w.out);
}

}  // namespace ndict
