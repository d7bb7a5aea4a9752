#include "pathexpr.hpp"

#include <string>

#include <ndict/error.hpp>
#include <ndict/json.hpp>

namespace ndict::cli {

ndict::Path parse_path_expr(std::string_view expr) {
  if (expr.empty() || expr[0] != '/')
    throw Error(Errc::BadPath, "path expression must start with '/'");
  ndict::Path path;
  std::string seg;
  std::size_t i = 1;
  auto flush = [&] {
    path.push_back(infer_key(seg));
    seg.clear();
  };
  while (i < expr.size()) {
    const char c = expr[i];
    if (c == '\\') {
      if (i + 1 >= expr.size() || (expr[i + 1] != '/' && expr[i + 1] != '\\'))
        throw Error(Errc::BadPath, "bad escape in path expression");
      seg += expr[i + 1];
      i += 2;
    } else if (c == '/') {
      flush();
      ++i;
    } else {
      seg += c;
      ++i;
    }
  }
  flush();
  return path;
}

}  // namespace ndict::cli
