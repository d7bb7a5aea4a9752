#include "commands.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string_view>

#include <ndict/json.hpp>
#include <ndict/merge.hpp>
#include <ndict/numio.hpp>

#include "demo.hpp"
#include "pathexpr.hpp"

namespace ndict::cli {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(ss).str();
}

int parse_exit_code(const Error& e) {
  switch (e.code()) {
    case Errc::MergeConflict:
      return kExitConflict;
    case Errc::Syntax:
    case Errc::TopLevelNotObject:
    case Errc::UnsupportedArray:
    case Errc::DepthExceeded:
    case Errc::DuplicateKey:
    case Errc::BadValue:
      return kExitParse;
    default:
      return kExitUsage;
  }
}

void diagnose(const std::string& context, const Error& e) {
  std::cerr << "ndict: " << context;
  if (e.offset() != Error::no_offset) std::cerr << ": byte " << e.offset();
  std::cerr << ": " << e.what() << '\n';
}

SerializeOptions output_options(int indent, bool sort_keys, int sig_digits) {
  SerializeOptions opts;
  opts.indent = indent;
  opts.sort_keys = sort_keys;
  opts.float_format =
      sig_digits ? FloatFormat::sig_digits(sig_digits) : FloatFormat::shortest();
  return opts;
}

int write_payload(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload << '\n';
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "ndict: cannot write " << out_path << '\n';
    return kExitIo;
  }
  out << payload << '\n';
  return out.good() ? kExitOk : kExitIo;
}

bool numeric_key(const Key& k) {
  return k.tag() == Tag::Int || k.tag() == Tag::UInt || k.tag() == Tag::Float;
}

// Identity lookup first; numeric segments fall back to mathematical-value
// matching so /2.0 finds a key whose JSON rendering was "2".
const Entry* resolve(const Node& root, const Path& path) {
  const Node* cur = &root;
  const Entry* e = nullptr;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Key& key = path[i];
    e = cur->find(key);
    if (!e && numeric_key(key)) {
      for (const auto& [k, entry] : *cur) {
        if (numeric_key(k) && compare_keys(k, key, FloatCompare::exact()) == 0) {
          e = &entry;
          break;
        }
      }
    }
    if (!e) return nullptr;
    if (i + 1 < path.size()) {
      if (!e->value.is_node()) return nullptr;
      cur = &e->value.as_node();
    }
  }
  return e;
}

}  // namespace

int cmd_merge(const MergeArgs& args) {
  if (args.files.empty()) {
    std::cerr << "ndict: merge needs at least one input file\n";
    return kExitUsage;
  }
  MergePolicy policy;
  if (args.policy == "sum") {
    policy = MergePolicy{};
  } else if (args.policy == "left") {
    policy.scalar_conflict = MergePolicy::OnScalarConflict::KeepLeft;
    policy.array_rule = MergePolicy::ArrayRule::KeepLeft;
    policy.type_conflict = MergePolicy::OnTypeConflict::KeepLeft;
  } else if (args.policy == "right") {
    policy.scalar_conflict = MergePolicy::OnScalarConflict::KeepRight;
    policy.array_rule = MergePolicy::ArrayRule::KeepRight;
    policy.type_conflict = MergePolicy::OnTypeConflict::KeepRight;
  } else {
    std::cerr << "ndict: unknown --policy " << args.policy << '\n';
    return kExitUsage;
  }

  std::vector<std::string> contents;
  contents.reserve(args.files.size());
  for (const std::string& f : args.files) {
    auto text = read_file(f);
    if (!text) {
      std::cerr << "ndict: cannot read " << f << '\n';
      return kExitParse;
    }
    contents.push_back(std::move(*text));
  }
  std::vector<std::string_view> views(contents.begin(), contents.end());

  ParseOptions popts;
  popts.key_inference = !args.no_key_inference;

  try {
    Node result = merge_chunks(views, policy, popts);
    std::string payload =
        serialize(result, output_options(args.indent, args.sort_keys, args.sig_digits));
    return write_payload(args.out, payload);
  } catch (const Error& e) {
    const std::string context = e.chunk_index() >= 0 &&
                                        e.chunk_index() < static_cast<int>(args.files.size())
                                    ? args.files[static_cast<std::size_t>(e.chunk_index())]
                                    : "merge";
    diagnose(context, e);
    return parse_exit_code(e);
  }
}

int cmd_get(const GetArgs& args) {
  Path path;
  try {
    path = parse_path_expr(args.expr);
  } catch (const Error& e) {
    diagnose("path expression", e);
    return kExitUsage;
  }
  auto text = read_file(args.file);
  if (!text) {
    std::cerr << "ndict: cannot read " << args.file << '\n';
    return kExitParse;
  }
  try {
    ParseOptions popts;
    popts.key_inference = true;
    Node node = deserialize(*text, popts);
    const Entry* e = resolve(node, path);
    if (!e) return kExitNotFound;
    const Value& v = e->value;
    switch (v.tag()) {
      case Tag::Int: std::cout << v.as_int() << '\n'; break;
      case Tag::UInt: std::cout << v.as_uint() << '\n'; break;
      case Tag::Float: std::cout << format_float(v.as_float()) << '\n'; break;
      case Tag::Bool: std::cout << (v.as_bool() ? "true" : "false") << '\n'; break;
      case Tag::Text: std::cout << v.as_text() << '\n'; break;
      default: std::cout << serialize_value(v) << '\n'; break;
    }
    return kExitOk;
  } catch (const Error& e) {
    diagnose(args.file, e);
    return parse_exit_code(e);
  }
}

int cmd_print(const PrintArgs& args) {
  auto text = read_file(args.file);
  if (!text) {
    std::cerr << "ndict: cannot read " << args.file << '\n';
    return kExitParse;
  }
  try {
    ParseOptions popts;
    popts.key_inference = true;
    Node node = deserialize(*text, popts);
    std::string payload =
        serialize(node, output_options(args.indent, args.sort_keys, 0));
    std::cout << payload << '\n';
    return kExitOk;
  } catch (const Error& e) {
    diagnose(args.file, e);
    return parse_exit_code(e);
  }
}

namespace {

void count_tags(const Node& node, std::array<std::uint64_t, 6>& counts) {
  for (const auto& [key, entry] : node) {
    const Tag t = entry.value.tag();
    if (t == Tag::Node) {
      count_tags(entry.value.as_node(), counts);
    } else {
      ++counts[static_cast<std::size_t>(t)];
    }
  }
}

}  // namespace

int cmd_stats(const StatsArgs& args) {
  auto text = read_file(args.file);
  if (!text) {
    std::cerr << "ndict: cannot read " << args.file << '\n';
    return kExitParse;
  }
  try {
    ParseOptions popts;
    popts.key_inference = true;
    Node node = deserialize(*text, popts);
    std::array<std::uint64_t, 6> counts{};
    count_tags(node, counts);
    std::cout << "leaf_count " << node.leaf_count() << '\n'
              << "depth " << node.depth() << '\n'
              << "values Int:" << counts[0] << " UInt:" << counts[1]
              << " Float:" << counts[2] << " Bool:" << counts[3]
              << " Text:" << counts[4] << " Array:" << counts[5] << '\n';
    return kExitOk;
  } catch (const Error& e) {
    diagnose(args.file, e);
    return parse_exit_code(e);
  }
}

int cmd_demo(const DemoArgs& args) {
  if (args.chunks < 1 || args.events_per_chunk < 1) {
    std::cerr << "ndict: --chunks and --events-per-chunk must be >= 1\n";
    return kExitUsage;
  }
  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) {
    std::cerr << "ndict: cannot create " << args.out_dir << ": " << ec.message()
              << '\n';
    return kExitIo;
  }
  std::mt19937_64 rng(args.seed);
  for (std::uint64_t c = 0; c < args.chunks; ++c) {
    Node chunk;
    demo_accumulate(chunk, rng, args.events_per_chunk);
    char name[32];
    std::snprintf(name, sizeof name, "chunk-%04" PRIu64 ".json", c);
    const std::filesystem::path out_path =
        std::filesystem::path(args.out_dir) / name;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "ndict: cannot write " << out_path.string() << '\n';
      return kExitIo;
    }
    out << serialize(chunk) << '\n';
    if (!out.good()) {
      std::cerr << "ndict: write failed for " << out_path.string() << '\n';
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace ndict::cli
