#include <benchmark/benchmark.h>

#include <random>

#include "alexmod/coverings.hpp"

using namespace alexmod;

namespace {

IntMatrix random_matrix(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-50, 50);
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
  return a;
}

Word random_word(int len, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> g(1, 4), e(-3, 3);
  std::vector<Syllable> syls;
  for (int i = 0; i < len; ++i) {
    int ex = e(rng);
    if (ex != 0) syls.push_back({g(rng), ex});
  }
  return Word::reduce(syls);
}

void bm_snf(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(bm_snf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_fox_derivative(benchmark::State& state) {
  Word w = random_word(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fox_derivative(w, 1));
}
BENCHMARK(bm_fox_derivative)->Arg(16)->Arg(64)->Arg(256);

void bm_regular_expand(benchmark::State& state) {
  int s = static_cast<int>(state.range(0));
  std::vector<long> idx(s, 2);
  BranchedCover cover = make_cover(idx);
  CrowellSequence cs = crowell_sequence(cover.gamma, cover.psi);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        regular_expand(cs.alexander.matrix.transposed()));
}
BENCHMARK(bm_regular_expand)->Arg(3)->Arg(4)->Arg(5);

void bm_alexander_polynomial(benchmark::State& state) {
  GroupPresentation p = make_presentation(
      2, {Word::generator(1) * Word::generator(2) * Word::generator(1) *
          Word::generator(2, -1) * Word::generator(1, -1) *
          Word::generator(2, -1)});
  AbelianGroup z{1, {}};
  AbelianElement t{{1}, {}};
  AbelianHom psi = validate_hom(p, {t, t}, z);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(p, psi));
}
BENCHMARK(bm_alexander_polynomial);

void bm_cover_homology(benchmark::State& state) {
  int s = static_cast<int>(state.range(0));
  std::vector<std::vector<Int>> cols;
  for (int i = 1; i < s; ++i) {
    std::vector<Int> c(s, 0);
    c[0] = -1;
    c[i] = 1;
    cols.push_back(c);
  }
  IntMatrix extra = IntMatrix::from_columns(s, cols);
  BranchedCover cover = make_cover(std::vector<long>(s, 2), &extra);
  for (auto _ : state) benchmark::DoNotOptimize(cover_homology(cover));
}
BENCHMARK(bm_cover_homology)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
