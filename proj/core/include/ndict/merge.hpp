#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "ndict/json.hpp"
#include "ndict/node.hpp"

namespace ndict {

/// Conflict resolution for deep merges. Numeric leaves always sum (under
/// the same promotion rules as add_number). Everything else is a conflict
/// resolved by policy or reported as MergeConflict with the full key path.
struct MergePolicy {
  enum class Numeric { Sum };
  enum class OnScalarConflict { Error, KeepLeft, KeepRight };
  enum class ArrayRule { ElementwiseSum, Concat, Error, KeepLeft, KeepRight };
  enum class OnTypeConflict { Error, KeepLeft, KeepRight };

  Numeric numeric = Numeric::Sum;
  OnScalarConflict scalar_conflict = OnScalarConflict::Error;
  ArrayRule array_rule = ArrayRule::ElementwiseSum;
  OnTypeConflict type_conflict = OnTypeConflict::Error;
};

struct MergeReport {
  std::uint64_t added = 0;
  std::uint64_t summed = 0;
  std::uint64_t conflicts_resolved = 0;
};

/// Recursively merges `from` into `into`: children merge by key, keys
/// absent from `into` are deep-copied in `from`'s order, numeric leaves
/// sum. `into`'s metadata wins; `from`'s is adopted only where `into` had
/// none.
MergeReport merge(Node& into, const Node& from, const MergePolicy& policy = {});

/// Left-to-right fold of merge over deserialized chunks, starting from an
/// empty Node. Parse and merge errors are rethrown with the chunk index
/// attached.
Node merge_chunks(std::span<const std::string_view> texts,
                  const MergePolicy& policy = {},
                  const ParseOptions& parse_opts = {});

}  // namespace ndict
