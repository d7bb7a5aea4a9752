#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ndict::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConflict = 3;
inline constexpr int kExitNotFound = 4;
inline constexpr int kExitIo = 5;

struct MergeArgs {
  std::vector<std::string> files;
  std::string out;  // empty = stdout
  std::string policy = "sum";
  int indent = 0;
  bool sort_keys = false;
  int sig_digits = 0;  // 0 = shortest
  bool no_key_inference = false;
};

struct GetArgs {
  std::string file;
  std::string expr;
};

struct PrintArgs {
  std::string file;
  int indent = 0;
  bool sort_keys = false;
};

struct StatsArgs {
  std::string file;
};

struct DemoArgs {
  std::string out_dir;
  std::uint64_t chunks = 4;
  std::uint64_t events_per_chunk = 1000;
  std::uint64_t seed = 1;
};

int cmd_merge(const MergeArgs& args);
int cmd_get(const GetArgs& args);
int cmd_print(const PrintArgs& args);
int cmd_stats(const StatsArgs& args);
int cmd_demo(const DemoArgs& args);

}  // namespace ndict::cli
