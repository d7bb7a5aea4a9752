#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <ndict/json.hpp>
#include <ndict/node.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NDICT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d(NDICT_TEST_TMPDIR);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("cli merge") {
  const auto a = write_file("a.json", R"({"n":1})");
  const auto b = write_file("b.json", R"({"n":2})");
  const auto res = run_cli("merge " + a.string() + " " + b.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out == "{\"n\":3}\n");

  SUBCASE("three files, nested") {
    const auto c = write_file("c.json", R"({"n":3,"sub":{"x":1.5}})");
    const auto res3 =
        run_cli("merge " + a.string() + " " + b.string() + " " + c.string());
    CHECK(res3.exit_code == 0);
    CHECK(res3.out == "{\"n\":6,\"sub\":{\"x\":1.5}}\n");
  }

  SUBCASE("parse errors exit 2") {
    const auto bad = write_file("bad.json", R"([1,2,)");
    const auto r = run_cli("merge " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    const auto missing = run_cli("merge " + (scratch() / "nope.json").string());
    CHECK(missing.exit_code == 2);
  }

  SUBCASE("conflicts exit 3 under sum policy") {
    const auto x = write_file("x.json", R"({"tag":"run1"})");
    const auto y = write_file("y.json", R"({"tag":"run2"})");
    const auto r = run_cli("merge " + x.string() + " " + y.string() + " --policy sum");
    CHECK(r.exit_code == 3);
    const auto rl =
        run_cli("merge " + x.string() + " " + y.string() + " --policy left");
    CHECK(rl.exit_code == 0);
    CHECK(rl.out == "{\"tag\":\"run1\"}\n");
    const auto rr =
        run_cli("merge " + x.string() + " " + y.string() + " --policy right");
    CHECK(rr.exit_code == 0);
    CHECK(rr.out == "{\"tag\":\"run2\"}\n");
  }

  SUBCASE("usage errors exit 1") {
    CHECK(run_cli("merge").exit_code == 1);
    CHECK(run_cli("frobnicate x").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
  }

  SUBCASE("flags: indent, sort, sig-digits, out") {
    const auto f = write_file("f.json", R"({"b":0.333333333333,"a":1})");
    const auto r = run_cli("merge " + f.string() + " --indent 2 --sort-keys --sig-digits 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\n  \"a\": 1,\n  \"b\": 0.333\n}\n");
    const auto outfile = (scratch() / "out.json").string();
    const auto r2 = run_cli("merge " + f.string() + " --out " + outfile);
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.empty());
    CHECK(slurp(outfile) == "{\"b\":0.333333333333,\"a\":1}\n");
  }

  SUBCASE("no-key-inference keeps numeric spellings distinct") {
    const auto g = write_file("g.json", R"({"2":1})");
    const auto h = write_file("h.json", R"({"2.0":1})");
    const auto with = run_cli("merge " + g.string() + " " + h.string());
    // With inference, Int 2 and Float 2.0 are distinct keys but render the
    // same, so serialization reports a collision.
    CHECK(with.exit_code == 1);
    const auto without = run_cli("merge " + g.string() + " " + h.string() +
                                 " --no-key-inference");
    CHECK(without.exit_code == 0);
    CHECK(without.out == "{\"2\":1,\"2.0\":1}\n");
  }
}

TEST_CASE("cli get") {
  const auto f = write_file("get.json", R"({"a":{"b":3},"2":{"l":[1,2]},"t":"hi"})");
  auto r = run_cli("get " + f.string() + " /a/b");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");

  r = run_cli("get " + f.string() + " /a/z");
  CHECK(r.exit_code == 4);
  CHECK(r.out.empty());

  r = run_cli("get " + f.string() + " /a");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"b\":3}\n");

  r = run_cli("get " + f.string() + " /2/l");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[1,2]\n");

  r = run_cli("get " + f.string() + " /t");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "hi\n");

  SUBCASE("numeric path segments match by value") {
    // The file's "2" re-infers to Int 2; /2.0 must still find it.
    const auto r20 = run_cli("get " + f.string() + " /2.0");
    CHECK(r20.exit_code == 0);
    CHECK(r20.out == "{\"l\":[1,2]}\n");
  }

  SUBCASE("escaped slash in segment") {
    const auto g = write_file("slash.json", R"({"a/b":5})");
    const auto rs = run_cli("get " + g.string() + " /a\\\\/b");
    CHECK(rs.exit_code == 0);
    CHECK(rs.out == "5\n");
  }

  SUBCASE("bad expression exits 1, bad file exits 2") {
    CHECK(run_cli("get " + f.string() + " noslash").exit_code == 1);
    const auto bad = write_file("badget.json", "{");
    CHECK(run_cli("get " + bad.string() + " /a").exit_code == 2);
  }
}

TEST_CASE("cli print") {
  const auto f = write_file("p.json", R"({"a":1,"b":{"c":[1,2]}})");
  auto r = run_cli("print " + f.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"a\":1,\"b\":{\"c\":[1,2]}}\n");

  const auto indented = run_cli("print " + f.string() + " --indent 2");
  CHECK(indented.exit_code == 0);
  // Re-parsing both forms yields the same node.
  const auto back = ndict::deserialize(indented.out);
  const auto flat = ndict::deserialize(r.out);
  CHECK(ndict::deep_equal(back, flat));

  SUBCASE("print is idempotent") {
    const auto f2 = write_file("p2.json", indented.out);
    const auto again = run_cli("print " + f2.string() + " --indent 2");
    CHECK(again.out == indented.out);
  }
}

TEST_CASE("cli stats") {
  const auto f = write_file("s.json", R"({"a":1,"b":{"c":[1,2]}})");
  const auto r = run_cli("stats " + f.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "leaf_count 2\n"
        "depth 2\n"
        "values Int:1 UInt:0 Float:0 Bool:0 Text:0 Array:1\n");
}

TEST_CASE("cli demo") {
  const auto dir = (scratch() / "demo").string();
  const auto r = run_cli("demo " + dir + " --chunks 4 --events-per-chunk 250 --seed 7");
  CHECK(r.exit_code == 0);
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  REQUIRE(files.size() == 4);

  SUBCASE("merged chunks conserve the event count") {
    std::string args = "merge";
    for (const auto& f : files) args += " " + f;
    const auto merged = run_cli(args);
    CHECK(merged.exit_code == 0);
    ndict::ParseOptions popts;
    popts.key_inference = true;
    const ndict::Node n = ndict::deserialize(merged.out, popts);
    std::int64_t total = 0;
    for (const auto& [k, e] : n)
      for (const auto& [k2, e2] : e.value.as_node())
        total += e2.value.as_int();
    CHECK(total == 1000);
  }

  SUBCASE("same seed reproduces byte-identical files") {
    const auto dir2 = (scratch() / "demo2").string();
    const auto r2 =
        run_cli("demo " + dir2 + " --chunks 4 --events-per-chunk 250 --seed 7");
    CHECK(r2.exit_code == 0);
    for (int i = 0; i < 4; ++i) {
      const std::string name = "chunk-000" + std::to_string(i) + ".json";
      CHECK(slurp(fs::path(dir) / name) == slurp(fs::path(dir2) / name));
    }
  }

  SUBCASE("chunked generation equals one monolithic run") {
    const auto dir3 = (scratch() / "demo3").string();
    const auto r3 =
        run_cli("demo " + dir3 + " --chunks 1 --events-per-chunk 1000 --seed 7");
    CHECK(r3.exit_code == 0);
    std::string args = "merge";
    for (const auto& f : files) args += " " + f;
    const auto merged = run_cli(args);
    ndict::ParseOptions popts;
    popts.key_inference = true;
    const ndict::Node chunked = ndict::deserialize(merged.out, popts);
    const ndict::Node single = ndict::deserialize(
        slurp(fs::path(dir3) / "chunk-0000.json"), popts);
    CHECK(ndict::deep_equal(chunked, single));
  }

  SUBCASE("bad parameters exit 1, unwritable target exits 5") {
    CHECK(run_cli("demo " + dir + " --chunks 0").exit_code == 1);
    CHECK(run_cli("demo /proc/nope/demo").exit_code == 5);
  }
}
