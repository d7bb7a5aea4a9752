#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndict {

enum class Errc {
  // model
  BadKey,
  BadValue,
  BadPath,
  PathConflict,
  TypeMismatch,
  DimensionMismatch,
  BadBin,
  NoSuchEntry,
  // numeric text i/o
  NonFinite,
  Overflow,
  OutOfRange,
  // json
  Syntax,
  KeyCollision,
  TopLevelNotObject,
  UnsupportedArray,
  DepthExceeded,
  DuplicateKey,
  // merge
  MergeConflict,
  // configuration
  BadOptions,
};

const char* errc_name(Errc c);

/// Every failure in the library is reported as an Error carrying an Errc.
/// Syntax errors carry the byte offset of the first offending byte; merge
/// conflicts carry the key path; chunk-level errors carry the chunk index.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }
  int chunk_index() const noexcept { return chunk_; }
  const std::string& path() const noexcept { return path_; }

  Error& with_chunk(int idx) {
    chunk_ = idx;
    return *this;
  }
  Error& with_path(std::string p) {
    path_ = std::move(p);
    return *this;
  }

 private:
  Errc code_;
  std::size_t offset_ = no_offset;
  int chunk_ = -1;
  std::string path_;
};

}  // namespace ndict
