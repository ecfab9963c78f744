// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>

#include "sufficere/decide_dollar.hpp"
#include "sufficere/decide_general.hpp"
#include "sufficere/oracle.hpp"
#include "sufficere/stg.hpp"
#include "sufficere/suffix_tree.hpp"

namespace sufficere {
namespace {

std::string fibonacci_word(std::size_t len) {
  std::string prev = "a";
  std::string s = "ab";
  while (s.size() < len) {
    std::string next = s + prev;
    prev = std::move(s);
    s = std::move(next);
  }
  s.resize(len);
  return s;
}

std::string random_word(std::size_t len) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> letter(0, 3);
  std::string s(len, 'a');
  for (char& c : s) c = static_cast<char>('a' + letter(rng));
  return s;
}

void set_counters(benchmark::State& state, std::size_t nodes) {
  state.counters["nodes"] = static_cast<double>(nodes);
  state.counters["ns_per_node"] = benchmark::Counter(
      static_cast<double>(nodes),
      benchmark::Counter::kIsIterationInvariantRate |
          benchmark::Counter::kInvert);
  state.SetComplexityN(static_cast<std::int64_t>(nodes));
}

void BM_BuildOnline(benchmark::State& state) {
  const std::string s = random_word(static_cast<std::size_t>(state.range(0)));
  std::size_t nodes = 0;
  for (auto _ : state) {
    const SuffixTree st = build_suffix_tree_online(s);
    nodes = st.size();
    benchmark::DoNotOptimize(nodes);
  }
  set_counters(state, nodes);
}
BENCHMARK(BM_BuildOnline)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Complexity(benchmark::oN);

void BM_DecideFibonacci(benchmark::State& state) {
  const AnnotatedTree t = to_annotated(
      build_suffix_tree_online(fibonacci_word(state.range(0))));
  for (auto _ : state) {
    const Verdict v = decide_suffix_tree(t, DecideOptions{false, false});
    benchmark::DoNotOptimize(v.is_suffix_tree);
  }
  set_counters(state, t.size());
}
BENCHMARK(BM_DecideFibonacci)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_DecideRandom(benchmark::State& state) {
  const AnnotatedTree t =
      to_annotated(build_suffix_tree_online(random_word(state.range(0))));
  for (auto _ : state) {
    const Verdict v = decide_suffix_tree(t, DecideOptions{false, false});
    benchmark::DoNotOptimize(v.is_suffix_tree);
  }
  set_counters(state, t.size());
}
BENCHMARK(BM_DecideRandom)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

// Verification rebuilds the suffix tree of the answer.
void BM_DecideVerified(benchmark::State& state) {
  const AnnotatedTree t =
      to_annotated(build_suffix_tree_online(random_word(state.range(0))));
  for (auto _ : state) {
    const Verdict v = decide_suffix_tree(t);
    benchmark::DoNotOptimize(v.is_suffix_tree);
  }
  set_counters(state, t.size());
}
BENCHMARK(BM_DecideVerified)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)
    ->Unit(benchmark::kMillisecond);

void BM_DecideDollar(benchmark::State& state) {
  const AnnotatedTree t = to_annotated(
      build_suffix_tree_online(random_word(state.range(0)), true));
  for (auto _ : state) {
    const Verdict v = decide_dollar(t, DollarOptions{false});
    benchmark::DoNotOptimize(v.is_suffix_tree);
  }
  set_counters(state, t.size());
}
BENCHMARK(BM_DecideDollar)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_Oracle(benchmark::State& state) {
  const AnnotatedTree t = to_annotated(
      build_suffix_tree(random_word(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_decide(t));
  }
  state.counters["nodes"] = static_cast<double>(t.size());
}
BENCHMARK(BM_Oracle)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sufficere

BENCHMARK_MAIN();
