#include "ndict/merge.hpp"

#include <string>
#include <vector>

#include "ndict/numio.hpp"
#include "numeric_sum.hpp"

namespace ndict {

namespace {

std::string render_path(const std::vector<const Key*>& path) {
  std::string out;
  for (const Key* k : path) {
    out += '/';
    std::string seg;
    switch (k->tag()) {
      case Tag::Int: seg = std::to_string(k->as_int()); break;
      case Tag::UInt: seg = std::to_string(k->as_uint()); break;
      case Tag::Float: seg = format_float(k->as_float()); break;
      case Tag::Bool: seg = k->as_bool() ? "true" : "false"; break;
      default: seg = k->as_text(); break;
    }
    for (char c : seg) {
      if (c == '/' || c == '\\') out += '\\';
      out += c;
    }
  }
  return out;
}

[[noreturn]] void conflict(const std::vector<const Key*>& path, const std::string& why) {
  std::string p = render_path(path);
  throw Error(Errc::MergeConflict, "conflict at " + p + ": " + why).with_path(p);
}

std::size_t value_leaves(const Value& v) {
  return v.is_node() ? v.as_node().leaf_count() : 1;
}

bool arrays_identical(const Array& a, const Array& b) {
  if (a.size() != b.size() || a.empty() != b.empty()) return false;
  if (a.empty()) return true;
  if (a.elem_tag() != b.elem_tag()) return false;
  switch (a.elem_tag()) {
    case Tag::Int: return a.ints() == b.ints();
    case Tag::UInt: return a.uints() == b.uints();
    case Tag::Float: return a.floats() == b.floats();
    default: return a.bools() == b.bools();
  }
}

bool numeric_elems(const Array& a) {
  return a.elem_tag() != Tag::Bool || a.empty();
}

Value elementwise_sum(const Array& a, const Array& b) {
  std::vector<Value> sums;
  const std::size_t n = a.size();
  sums.reserve(n);
  auto elem = [](const Array& arr, std::size_t i) {
    switch (arr.elem_tag()) {
      case Tag::Int: return Value::of_int(arr.ints()[i]);
      case Tag::UInt: return Value::of_uint(arr.uints()[i]);
      default: return Value::of_float(arr.floats()[i]);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    sums.push_back(detail::add_numeric(elem(a, i), elem(b, i)));
  bool any_float = false;
  bool any_neg = false;
  bool any_big = false;
  for (const Value& v : sums) {
    if (v.tag() == Tag::Float) any_float = true;
    if (v.tag() == Tag::Int && v.as_int() < 0) any_neg = true;
    if (v.tag() == Tag::UInt) any_big = true;
  }
  if (any_float || (any_neg && any_big)) {
    std::vector<double> out;
    out.reserve(n);
    for (const Value& v : sums) out.push_back(v.to_double());
    return Value::of_array(Array::of_floats(std::move(out)));
  }
  if (any_big) {
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (const Value& v : sums)
      out.push_back(v.tag() == Tag::Int ? static_cast<std::uint64_t>(v.as_int())
                                        : v.as_uint());
    return Value::of_array(Array::of_uints(std::move(out)));
  }
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (const Value& v : sums) out.push_back(v.as_int());
  return Value::of_array(Array::of_ints(std::move(out)));
}

Value concat_arrays(const Array& a, const Array& b,
                    const std::vector<const Key*>& path) {
  if (a.empty()) return Value::of_array(b);
  if (b.empty()) return Value::of_array(a);
  if (a.elem_tag() == Tag::Bool && b.elem_tag() == Tag::Bool) {
    std::vector<bool> out = a.bools();
    out.insert(out.end(), b.bools().begin(), b.bools().end());
    return Value::of_array(Array::of_bools(std::move(out)));
  }
  if (!numeric_elems(a) || !numeric_elems(b))
    conflict(path, "cannot concatenate Bool array with numeric array");
  if (a.elem_tag() == b.elem_tag() && a.elem_tag() != Tag::Float) {
    if (a.elem_tag() == Tag::Int) {
      std::vector<std::int64_t> out = a.ints();
      out.insert(out.end(), b.ints().begin(), b.ints().end());
      return Value::of_array(Array::of_ints(std::move(out)));
    }
    std::vector<std::uint64_t> out = a.uints();
    out.insert(out.end(), b.uints().begin(), b.uints().end());
    return Value::of_array(Array::of_uints(std::move(out)));
  }
  auto widen = [](const Array& arr, std::vector<double>& out) {
    for (std::size_t i = 0; i < arr.size(); ++i) {
      switch (arr.elem_tag()) {
        case Tag::Int: out.push_back(static_cast<double>(arr.ints()[i])); break;
        case Tag::UInt: out.push_back(static_cast<double>(arr.uints()[i])); break;
        default: out.push_back(arr.floats()[i]); break;
      }
    }
  };
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  widen(a, out);
  widen(b, out);
  return Value::of_array(Array::of_floats(std::move(out)));
}

class Merger {
 public:
  Merger(const MergePolicy& policy) : policy_(policy) {}

  MergeReport run(Node& into, const Node& from) {
    rec(into, from);
    return report_;
  }

 private:
  void rec(Node& a, const Node& b) {
    for (const auto& [key, eb] : b) {
      Entry* ea = a.find(key);
      if (!ea) {
        report_.added += value_leaves(eb.value);
        a.put(key, eb);  // deep copy, metadata included
        continue;
      }
      path_.push_back(&key);
      combine(*ea, eb);
      if (!ea->metadata && eb.metadata) ea->metadata = eb.metadata;
      path_.pop_back();
    }
  }

  void combine(Entry& ea, const Entry& eb) {
    Value& va = ea.value;
    const Value& vb = eb.value;
    if (va.is_node() && vb.is_node()) {
      rec(va.as_node(), vb.as_node());
      return;
    }
    if (va.is_numeric() && vb.is_numeric()) {
      va = detail::add_numeric(va, vb);
      ++report_.summed;
      return;
    }
    if (va.tag() == vb.tag() && (va.tag() == Tag::Text || va.tag() == Tag::Bool)) {
      const bool same = va.tag() == Tag::Text ? va.as_text() == vb.as_text()
                                              : va.as_bool() == vb.as_bool();
      if (same) return;
      switch (policy_.scalar_conflict) {
        case MergePolicy::OnScalarConflict::Error:
          conflict(path_, "scalar values differ");
        case MergePolicy::OnScalarConflict::KeepLeft:
          break;
        case MergePolicy::OnScalarConflict::KeepRight:
          va = vb;
          break;
      }
      ++report_.conflicts_resolved;
      return;
    }
    if (va.tag() == Tag::Array && vb.tag() == Tag::Array) {
      const Array& aa = va.as_array();
      const Array& ab = vb.as_array();
      if (arrays_identical(aa, ab) &&
          policy_.array_rule != MergePolicy::ArrayRule::Concat &&
          policy_.array_rule != MergePolicy::ArrayRule::ElementwiseSum) {
        return;
      }
      switch (policy_.array_rule) {
        case MergePolicy::ArrayRule::ElementwiseSum:
          if (!numeric_elems(aa) || !numeric_elems(ab))
            conflict(path_, "elementwise sum needs numeric arrays");
          if (aa.size() != ab.size())
            conflict(path_, "elementwise sum needs equal lengths");
          va = elementwise_sum(aa, ab);
          ++report_.summed;
          return;
        case MergePolicy::ArrayRule::Concat:
          va = concat_arrays(aa, ab, path_);
          ++report_.summed;
          return;
        case MergePolicy::ArrayRule::Error:
          conflict(path_, "array values collide");
        case MergePolicy::ArrayRule::KeepLeft:
          ++report_.conflicts_resolved;
          return;
        case MergePolicy::ArrayRule::KeepRight:
          va = vb;
          ++report_.conflicts_resolved;
          return;
      }
      return;
    }
    // Mismatched tags.
    switch (policy_.type_conflict) {
      case MergePolicy::OnTypeConflict::Error:
        conflict(path_, std::string("type mismatch: ") + tag_name(va.tag()) +
                            " vs " + tag_name(vb.tag()));
      case MergePolicy::OnTypeConflict::KeepLeft:
        break;
      case MergePolicy::OnTypeConflict::KeepRight:
        va = vb;
        break;
    }
    ++report_.conflicts_resolved;
  }

  const MergePolicy& policy_;
  MergeReport report_;
  std::vector<const Key*> path_;
};

}  // namespace

MergeReport merge(Node& into, const Node& from, const MergePolicy& policy) {
  Merger m(policy);
  return m.run(into, from);
}

Node merge_chunks(std::span<const std::string_view> texts,
                  const MergePolicy& policy, const ParseOptions& parse_opts) {
  Node acc;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      Node chunk = deserialize(texts[i], parse_opts);
      merge(acc, chunk, policy);
    } catch (const Error& e) {
      Error wrapped(e.code(),
                    "chunk " + std::to_string(i) + ": " + e.what(), e.offset());
      wrapped.with_chunk(static_cast<int>(i)).with_path(e.path());
      throw wrapped;
    }
  }
  return acc;
}

}  // namespace ndict
