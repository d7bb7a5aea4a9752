#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include <ndict/json.hpp>
#include <ndict/merge.hpp>
#include <ndict/node.hpp>
#include <ndict/numio.hpp>

namespace {

using namespace ndict;

std::vector<double> random_doubles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const double d = std::bit_cast<double>(rng());
    if (std::isfinite(d)) out.push_back(d);
  }
  return out;
}

Node histogram_node(std::size_t events, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Node node;
  const Value one = Value::of_int(1);
  const double widths[2] = {0.05, 0.25};
  for (std::size_t i = 0; i < events; ++i) {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 4.0;
    const double y = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 10.0 - 5.0;
    const double coords[2] = {x, y};
    node.hist_add({}, coords, widths, one);
  }
  return node;
}

void BM_add_number(benchmark::State& state) {
  Node node;
  const Path path = {Key::of_text("runs"), Key::of_text("count")};
  const Value one = Value::of_int(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(node.add_number(path, one));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_add_number);

void BM_hist_add_2d(benchmark::State& state) {
  Node node;
  std::mt19937_64 rng(5);
  const Value one = Value::of_int(1);
  const double widths[2] = {0.05, 0.25};
  for (auto _ : state) {
    const double coords[2] = {
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * 4.0,
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * 10.0};
    node.hist_add({}, coords, widths, one);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_hist_add_2d);

void BM_format_float_shortest(benchmark::State& state) {
  const auto xs = random_doubles(4096, 17);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(format_float(xs[i++ & 4095]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_format_float_shortest);

void BM_parse_float_shortest_texts(benchmark::State& state) {
  const auto xs = random_doubles(4096, 23);
  std::vector<std::string> texts;
  texts.reserve(xs.size());
  for (double x : xs) texts.push_back(format_float(x));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_float(texts[i++ & 4095]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_parse_float_shortest_texts);

void BM_serialize_histogram(benchmark::State& state) {
  const Node node = histogram_node(static_cast<std::size_t>(state.range(0)), 29);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize(node));
  }
}
BENCHMARK(BM_serialize_histogram)->Arg(1000)->Arg(100000);

void BM_deserialize_histogram(benchmark::State& state) {
  const Node node = histogram_node(static_cast<std::size_t>(state.range(0)), 31);
  const std::string text = serialize(node);
  ParseOptions opts;
  opts.key_inference = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(deserialize(text, opts));
  }
}
BENCHMARK(BM_deserialize_histogram)->Arg(1000)->Arg(100000);

void BM_tokenize_histogram(benchmark::State& state) {
  const Node node = histogram_node(static_cast<std::size_t>(state.range(0)), 37);
  const std::string text = serialize(node);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tokenize(text));
  }
}
BENCHMARK(BM_tokenize_histogram)->Arg(100000);

void BM_merge_histograms(benchmark::State& state) {
  const Node a = histogram_node(static_cast<std::size_t>(state.range(0)), 41);
  const Node b = histogram_node(static_cast<std::size_t>(state.range(0)), 43);
  for (auto _ : state) {
    Node into = a;
    benchmark::DoNotOptimize(merge(into, b));
  }
}
BENCHMARK(BM_merge_histograms)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
