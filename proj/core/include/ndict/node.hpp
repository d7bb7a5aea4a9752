#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ndict/policy.hpp"
#include "ndict/value.hpp"

namespace ndict {

/// A non-empty key sequence addressing a nested location.
using Path = std::vector<Key>;

/// Ordered mapping from typed scalar keys to entries. Iteration follows
/// insertion order; lookups are hashed. Nesting is by value: a Node owns
/// its subtree, so the structure is always a tree.
class Node {
 public:
  using Item = std::pair<Key, Entry>;
  using const_iterator = std::vector<Item>::const_iterator;

  Node() = default;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<Item>& items() const { return items_; }

  /// Single-key lookup; nullptr when absent.
  const Entry* find(const Key& key) const;
  Entry* find(const Key& key);

  /// Replaces the whole entry under `key`, or appends it to the order.
  Entry& put(const Key& key, Entry entry);

  /// Stores `value` at `path`, creating intermediate Nodes for missing
  /// prefix keys. An existing entry keeps its metadata and its position in
  /// the parent's order. When an intermediate key holds a non-Node value,
  /// throws PathConflict unless overwrite_nonnode is set, in which case the
  /// value is replaced by a fresh Node.
  void set(const Path& path, Value value, bool overwrite_nonnode = false);

  /// Entry at `path`, or nullptr when any key on the path is missing or an
  /// intermediate value is not a Node. Never mutates.
  const Entry* get(const Path& path) const;

  /// Adds a numeric delta at `path`, initializing an absent target to the
  /// delta. Int+Int and UInt+UInt stay integral while the sum fits,
  /// promoting to Float on overflow; any Float operand makes the sum Float.
  /// Returns the stored result.
  const Value& add_number(const Path& path, const Value& delta);

  /// Multi-dimensional histogram accumulation: per dimension i the bin key
  /// is Float(floor(coords[i]/widths[i]) * widths[i]), and `weight` is
  /// added at prefix ++ bin keys.
  void hist_add(std::span<const Key> prefix, std::span<const double> coords,
                std::span<const double> widths, const Value& weight);

  /// Removes and returns the entry at `path`; nullopt when absent. Emptied
  /// intermediate Nodes are left in place.
  std::optional<Entry> remove(const Path& path);

  /// Attaches metadata to the existing entry at `path` (throws NoSuchEntry
  /// when absent).
  void set_metadata(const Path& path, Value meta);
  const Value* get_metadata(const Path& path) const;

  /// Number of non-Node values reachable from this node.
  std::size_t leaf_count() const;
  /// Longest key-path length; 0 for an empty node.
  std::size_t depth() const;

  /// Keys in Bool < numeric < Text order; numeric keys compare by
  /// mathematical value with Floats under policy.compare. Compare-equal
  /// keys keep their relative insertion order.
  std::vector<Key> sorted_keys(const FloatPolicy& policy = {}) const;

 private:
  Node& descend(std::span<const Key> prefix, bool overwrite_nonnode);
  Entry& append(const Key& key, Entry entry);

  std::vector<Item> items_;
  std::unordered_map<Key, std::size_t, Key::Hash> index_;
};

/// Structural equality: identical key sets and recursively equal values,
/// Floats compared under policy.compare, everything else exactly. Insertion
/// order is ignored. Metadata must match under the same rule.
bool deep_equal(const Node& a, const Node& b, const FloatPolicy& policy = {});

/// Total order on keys used by sorted_keys; exposed for tests and tools.
/// Returns <0, 0, >0.
int compare_keys(const Key& a, const Key& b, const FloatCompare& cmp);

}  // namespace ndict
