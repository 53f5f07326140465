#include <benchmark/benchmark.h>

#include <random>

#include "artin/batch.hpp"
#include "artin/garside_oracle.hpp"

using namespace artin;

namespace {

Presentation triangle345() { return parse_presentation("gens: s t u\nm s t 3\nm t u 4\nm s u 5\n"); }
Presentation sufficiently_large() { return parse_presentation("gens: a b c\nm a b 2\nm a c 3\n"); }

std::vector<Word> identity_words(const Presentation& p, int n) {
  std::vector<Word> out;
  for (int seed = 1; seed <= n; ++seed) out.push_back(gen_identity_word(p, seed, 1 + seed % 12, seed % 7));
  return out;
}

void solve(benchmark::State& state, const Presentation& p, Exec exec) {
  const auto words = identity_words(p, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch_solve(p, words, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SolveLargeSerial(benchmark::State& s) { solve(s, triangle345(), Exec::Serial); }
void BM_SolveLargeParallel(benchmark::State& s) { solve(s, triangle345(), Exec::Parallel); }
void BM_SolveAmalgamSerial(benchmark::State& s) { solve(s, sufficiently_large(), Exec::Serial); }
void BM_SolveAmalgamParallel(benchmark::State& s) { solve(s, sufficiently_large(), Exec::Parallel); }

void BM_Verify(benchmark::State& state) {
  const Presentation p = triangle345();
  std::vector<Trace> traces;
  for (const auto& r : batch_solve(p, identity_words(p, static_cast<int>(state.range(0))), Exec::Serial))
    traces.push_back(r.solution->trace);
  for (auto _ : state) benchmark::DoNotOptimize(batch_verify(p, traces, Exec::Parallel));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Geodesics(benchmark::State& state) {
  const Presentation p = triangle345();
  std::mt19937_64 rng(5);
  const std::string letters = "sStTuU";
  std::vector<Word> words;
  for (int i = 0; i < state.range(0); ++i) {
    std::string w;
    while (w.size() < 40) w.push_back(letters[rng() % letters.size()]);
    words.push_back(Word(w));
  }
  for (auto _ : state) benchmark::DoNotOptimize(batch_geodesics(p, words, Exec::Parallel));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SolveLargeSerial)->Arg(256);
BENCHMARK(BM_SolveLargeParallel)->Arg(256);
BENCHMARK(BM_SolveAmalgamSerial)->Arg(256);
BENCHMARK(BM_SolveAmalgamParallel)->Arg(256);
BENCHMARK(BM_Verify)->Arg(256);
BENCHMARK(BM_Geodesics)->Arg(128);

BENCHMARK_MAIN();
