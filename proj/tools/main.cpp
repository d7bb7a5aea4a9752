#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nested typed-key dictionaries with JSON I/O"};
  app.require_subcommand(1);

  ndict::cli::MergeArgs margs;
  CLI::App* merge = app.add_subcommand("merge", "merge JSON chunk files");
  merge->add_option("files", margs.files, "input chunk files")->required();
  merge->add_option("-o,--out", margs.out, "output file (default stdout)");
  merge->add_option("--policy", margs.policy, "sum|left|right")
      ->check(CLI::IsMember({"sum", "left", "right"}));
  merge->add_option("--indent", margs.indent, "spaces per level (0 = compact)")
      ->check(CLI::Range(0, 8));
  merge->add_flag("--sort-keys", margs.sort_keys, "sorted key order");
  merge->add_option("--sig-digits", margs.sig_digits,
                    "significant digits for floats (default shortest)")
      ->check(CLI::Range(1, 17));
  merge->add_flag("--no-key-inference", margs.no_key_inference,
                  "keep all object keys as text");

  ndict::cli::GetArgs gargs;
  CLI::App* get = app.add_subcommand("get", "print the value at a path");
  get->add_option("file", gargs.file, "input file")->required();
  get->add_option("expr", gargs.expr, "path expression, e.g. /a/b")->required();

  ndict::cli::PrintArgs pargs;
  CLI::App* print = app.add_subcommand("print", "re-serialize a file");
  print->add_option("file", pargs.file, "input file")->required();
  print->add_option("--indent", pargs.indent, "spaces per level (0 = compact)")
      ->check(CLI::Range(0, 8));
  print->add_flag("--sort-keys", pargs.sort_keys, "sorted key order");

  ndict::cli::StatsArgs sargs;
  CLI::App* stats = app.add_subcommand("stats", "summarize a file");
  stats->add_option("file", sargs.file, "input file")->required();

  ndict::cli::DemoArgs dargs;
  CLI::App* demo =
      app.add_subcommand("demo", "generate demo histogram chunk files");
  demo->add_option("out_dir", dargs.out_dir, "output directory")->required();
  demo->add_option("--chunks", dargs.chunks, "number of chunk files");
  demo->add_option("--events-per-chunk", dargs.events_per_chunk,
                   "events per chunk");
  demo->add_option("--seed", dargs.seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ndict::cli::kExitUsage;
  }

  if (*merge) return ndict::cli::cmd_merge(margs);
  if (*get) return ndict::cli::cmd_get(gargs);
  if (*print) return ndict::cli::cmd_print(pargs);
  if (*stats) return ndict::cli::cmd_stats(sargs);
  if (*demo) return ndict::cli::cmd_demo(dargs);
  return ndict::cli::kExitUsage;
}
