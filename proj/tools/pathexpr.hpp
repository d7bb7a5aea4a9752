#pragma once

#include <string_view>

#include <ndict/node.hpp>

namespace ndict::cli {

/// Parses a /-separated path expression ("/a/2.0/b") into a Path under key
/// inference. "\/" escapes a literal slash inside a segment, "\\" a
/// backslash. Throws Error(BadPath) on malformed expressions.
ndict::Path parse_path_expr(std::string_view expr);

}  // namespace ndict::cli
