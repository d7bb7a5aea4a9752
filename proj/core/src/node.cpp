#include "ndict/node.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ndict/numio.hpp"
#include "numeric_sum.hpp"

namespace ndict {

namespace {

void require_path(const Path& path) {
  if (path.empty()) throw Error(Errc::BadPath, "path must be non-empty");
}

// Exact comparison of an int64 with a finite double.
int cmp_int_double(std::int64_t i, double d) {
  if (d >= 9223372036854775808.0) return -1;
  if (d < -9223372036854775808.0) return 1;
  const std::int64_t t = static_cast<std::int64_t>(d);
  if (i != t) return i < t ? -1 : 1;
  const double frac = d - static_cast<double>(t);
  if (frac > 0) return -1;
  if (frac < 0) return 1;
  return 0;
}

int cmp_uint_double(std::uint64_t u, double d) {
  if (d >= 18446744073709551616.0) return -1;
  if (d < 0.0) return 1;
  const std::uint64_t t = static_cast<std::uint64_t>(d);
  if (u != t) return u < t ? -1 : 1;
  const double frac = d - static_cast<double>(t);
  if (frac > 0) return -1;
  if (frac < 0) return 1;
  return 0;
}

int key_class(const Key& k) {
  switch (k.tag()) {
    case Tag::Bool: return 0;
    case Tag::Text: return 2;
    default: return 1;
  }
}

int from_ordering(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

}  // namespace

int compare_keys(const Key& a, const Key& b, const FloatCompare& cmp) {
  const int ca = key_class(a);
  const int cb = key_class(b);
  if (ca != cb) return ca < cb ? -1 : 1;
  switch (a.tag()) {
    case Tag::Bool: {
      const int x = a.as_bool() ? 1 : 0;
      const int y = b.as_bool() ? 1 : 0;
      return x - y;
    }
    case Tag::Text: {
      const int r = a.as_text().compare(b.as_text());
      return r < 0 ? -1 : r > 0 ? 1 : 0;
    }
    default:
      break;
  }
  const bool fa = a.tag() == Tag::Float;
  const bool fb = b.tag() == Tag::Float;
  if (fa && fb) return from_ordering(compare_floats(a.as_float(), b.as_float(), cmp));
  if (!fa && !fb) {
    // Integer pairs compare mathematically, tolerance never applies.
    if (a.tag() == Tag::Int && b.tag() == Tag::Int) {
      return a.as_int() < b.as_int() ? -1 : a.as_int() > b.as_int() ? 1 : 0;
    }
    if (a.tag() == Tag::UInt && b.tag() == Tag::UInt) {
      return a.as_uint() < b.as_uint() ? -1 : a.as_uint() > b.as_uint() ? 1 : 0;
    }
    if (a.tag() == Tag::Int) {
      if (a.as_int() < 0) return -1;
      const std::uint64_t ua = static_cast<std::uint64_t>(a.as_int());
      return ua < b.as_uint() ? -1 : ua > b.as_uint() ? 1 : 0;
    }
    if (b.as_int() < 0) return 1;
    const std::uint64_t ub = static_cast<std::uint64_t>(b.as_int());
    return a.as_uint() < ub ? -1 : a.as_uint() > ub ? 1 : 0;
  }
  // Mixed integer/float. Exact mode compares true mathematical values;
  // tolerance modes compare in double precision.
  if (cmp.mode() == FloatCompare::Mode::Exact) {
    if (fa) {
      const int r = b.tag() == Tag::Int ? cmp_int_double(b.as_int(), a.as_float())
                                        : cmp_uint_double(b.as_uint(), a.as_float());
      return -r;
    }
    return a.tag() == Tag::Int ? cmp_int_double(a.as_int(), b.as_float())
                               : cmp_uint_double(a.as_uint(), b.as_float());
  }
  const double da = fa ? a.as_float()
                       : (a.tag() == Tag::Int ? static_cast<double>(a.as_int())
                                              : static_cast<double>(a.as_uint()));
  const double db = fb ? b.as_float()
                       : (b.tag() == Tag::Int ? static_cast<double>(b.as_int())
                                              : static_cast<double>(b.as_uint()));
  return from_ordering(compare_floats(da, db, cmp));
}

const Entry* Node::find(const Key& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &items_[it->second].second;
}

Entry* Node::find(const Key& key) {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &items_[it->second].second;
}

Entry& Node::append(const Key& key, Entry entry) {
  index_.emplace(key, items_.size());
  items_.emplace_back(key, std::move(entry));
  return items_.back().second;
}

Entry& Node::put(const Key& key, Entry entry) {
  if (Entry* e = find(key)) {
    *e = std::move(entry);
    return *e;
  }
  return append(key, std::move(entry));
}

Node& Node::descend(std::span<const Key> prefix, bool overwrite_nonnode) {
  Node* cur = this;
  for (const Key& k : prefix) {
    Entry* e = cur->find(k);
    if (!e) {
      e = &cur->append(k, Entry{Value::of_node(Node{}), std::nullopt});
    } else if (!e->value.is_node()) {
      if (!overwrite_nonnode)
        throw Error(Errc::PathConflict,
                    "key " + k.describe() + " holds a non-Node value");
      e->value = Value::of_node(Node{});
    }
    cur = &e->value.as_node();
  }
  return *cur;
}

void Node::set(const Path& path, Value value, bool overwrite_nonnode) {
  require_path(path);
  Node& parent = descend({path.data(), path.size() - 1}, overwrite_nonnode);
  if (Entry* e = parent.find(path.back())) {
    e->value = std::move(value);
  } else {
    parent.append(path.back(), Entry{std::move(value), std::nullopt});
  }
}

const Entry* Node::get(const Path& path) const {
  require_path(path);
  const Node* cur = this;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Entry* e = cur->find(path[i]);
    if (!e || !e->value.is_node()) return nullptr;
    cur = &e->value.as_node();
  }
  return cur->find(path.back());
}

const Value& Node::add_number(const Path& path, const Value& delta) {
  require_path(path);
  if (!delta.is_numeric())
    throw Error(Errc::TypeMismatch,
                std::string("delta is ") + tag_name(delta.tag()) +
                    ", wanted Int, UInt or Float");
  Node& parent = descend({path.data(), path.size() - 1}, false);
  Entry* e = parent.find(path.back());
  if (!e) return parent.append(path.back(), Entry{delta, std::nullopt}).value;
  if (!e->value.is_numeric())
    throw Error(Errc::TypeMismatch,
                std::string("existing value is ") + tag_name(e->value.tag()) +
                    ", cannot accumulate");
  e->value = detail::add_numeric(e->value, delta);
  return e->value;
}

void Node::hist_add(std::span<const Key> prefix, std::span<const double> coords,
                    std::span<const double> widths, const Value& weight) {
  if (coords.size() != widths.size() || coords.empty())
    throw Error(Errc::DimensionMismatch,
                "coords and widths must have the same nonzero length");
  Path path(prefix.begin(), prefix.end());
  path.reserve(prefix.size() + coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double c = coords[i];
    const double w = widths[i];
    if (!std::isfinite(c) || !std::isfinite(w) || w <= 0.0)
      throw Error(Errc::BadBin, "widths must be finite and positive, coords finite");
    const double label = std::floor(c / w) * w;
    if (!std::isfinite(label))
      throw Error(Errc::BadBin, "bin label is not finite");
    path.push_back(Key::of_float(label));
  }
  add_number(path, weight);
}

std::optional<Entry> Node::remove(const Path& path) {
  require_path(path);
  Node* cur = this;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Entry* e = cur->find(path[i]);
    if (!e || !e->value.is_node()) return std::nullopt;
    cur = &e->value.as_node();
  }
  auto it = cur->index_.find(path.back());
  if (it == cur->index_.end()) return std::nullopt;
  const std::size_t pos = it->second;
  std::optional<Entry> out = std::move(cur->items_[pos].second);
  cur->items_.erase(cur->items_.begin() + static_cast<std::ptrdiff_t>(pos));
  cur->index_.erase(it);
  for (auto& [k, idx] : cur->index_) {
    if (idx > pos) --idx;
  }
  return out;
}

void Node::set_metadata(const Path& path, Value meta) {
  require_path(path);
  Node* cur = this;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Entry* e = cur->find(path[i]);
    if (!e || !e->value.is_node())
      throw Error(Errc::NoSuchEntry, "no entry at path");
    cur = &e->value.as_node();
  }
  Entry* e = cur->find(path.back());
  if (!e) throw Error(Errc::NoSuchEntry, "no entry at path");
  e->metadata = std::move(meta);
}

const Value* Node::get_metadata(const Path& path) const {
  const Entry* e = get(path);
  if (!e || !e->metadata) return nullptr;
  return &*e->metadata;
}

std::size_t Node::leaf_count() const {
  std::size_t n = 0;
  for (const auto& [k, e] : items_) {
    n += e.value.is_node() ? e.value.as_node().leaf_count() : 1;
  }
  return n;
}

std::size_t Node::depth() const {
  std::size_t best = 0;
  for (const auto& [k, e] : items_) {
    const std::size_t d = 1 + (e.value.is_node() ? e.value.as_node().depth() : 0);
    best = std::max(best, d);
  }
  return best;
}

namespace {

// Stable merge sort; safe even when the tolerance comparison is not
// transitive (insertion order is kept for compare-equal runs).
void merge_sort(std::vector<const Key*>& keys, std::vector<const Key*>& tmp,
                std::size_t lo, std::size_t hi, const FloatCompare& cmp) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort(keys, tmp, lo, mid, cmp);
  merge_sort(keys, tmp, mid, hi, cmp);
  std::size_t i = lo, j = mid, o = lo;
  while (i < mid && j < hi) {
    if (compare_keys(*keys[j], *keys[i], cmp) < 0)
      tmp[o++] = keys[j++];
    else
      tmp[o++] = keys[i++];
  }
  while (i < mid) tmp[o++] = keys[i++];
  while (j < hi) tmp[o++] = keys[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            keys.begin() + static_cast<std::ptrdiff_t>(lo));
}

}  // namespace

std::vector<Key> Node::sorted_keys(const FloatPolicy& policy) const {
  std::vector<const Key*> ptrs;
  ptrs.reserve(items_.size());
  for (const auto& [k, e] : items_) ptrs.push_back(&k);
  std::vector<const Key*> tmp(ptrs.size());
  merge_sort(ptrs, tmp, 0, ptrs.size(), policy.compare);
  std::vector<Key> out;
  out.reserve(ptrs.size());
  for (const Key* p : ptrs) out.push_back(*p);
  return out;
}

namespace {

bool value_equal(const Value& a, const Value& b, const FloatPolicy& policy);

bool array_equal(const Array& a, const Array& b, const FloatPolicy& policy) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;  // element tags of empty arrays are vacuous
  if (a.elem_tag() != b.elem_tag()) return false;
  switch (a.elem_tag()) {
    case Tag::Int: return a.ints() == b.ints();
    case Tag::UInt: return a.uints() == b.uints();
    case Tag::Bool: return a.bools() == b.bools();
    case Tag::Float: {
      for (std::size_t i = 0; i < a.floats().size(); ++i) {
        if (compare_floats(a.floats()[i], b.floats()[i], policy.compare) != 0)
          return false;
      }
      return true;
    }
    default: return false;
  }
}

bool value_equal(const Value& a, const Value& b, const FloatPolicy& policy) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::Int: return a.as_int() == b.as_int();
    case Tag::UInt: return a.as_uint() == b.as_uint();
    case Tag::Bool: return a.as_bool() == b.as_bool();
    case Tag::Text: return a.as_text() == b.as_text();
    case Tag::Float:
      return compare_floats(a.as_float(), b.as_float(), policy.compare) == 0;
    case Tag::Array: return array_equal(a.as_array(), b.as_array(), policy);
    case Tag::Node: return deep_equal(a.as_node(), b.as_node(), policy);
  }
  return false;
}

}  // namespace

bool deep_equal(const Node& a, const Node& b, const FloatPolicy& policy) {
  if (a.size() != b.size()) return false;
  for (const auto& [key, ea] : a) {
    const Entry* eb = b.find(key);
    if (!eb) return false;
    if (!value_equal(ea.value, eb->value, policy)) return false;
    if (ea.metadata.has_value() != eb->metadata.has_value()) return false;
    if (ea.metadata && !value_equal(*ea.metadata, *eb->metadata, policy))
      return false;
  }
  return true;
}

}  // namespace ndict
