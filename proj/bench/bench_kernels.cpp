// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "wada/kernels.hpp"
#include "wada/ordering.hpp"
#include "wada/singer.hpp"

using namespace wada;

namespace {

struct Fixture {
  diffset::DifferenceSet set;
  std::vector<Residue> order;
  DartSpace space;
  std::vector<std::int32_t> position_of;
  std::vector<Residue> sigma;
};

const Fixture& fixture(std::uint32_t m, std::uint32_t p) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Fixture> cache;
  auto it = cache.find({m, p});
  if (it != cache.end()) return it->second;
  const auto sp = singer::space_params(m, p);
  auto d = singer::generate_singer_set(sp);
  const auto found = ordering::find_compatible_ordering(d, sp.p, sp.f, {true});
  auto order = found.ordering ? found.ordering->order() : d.elements();
  const Residue ell = d.modulus();
  std::vector<std::int32_t> pos(static_cast<std::size_t>(ell), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i);
  std::vector<Residue> sigma(static_cast<std::size_t>(ell));
  for (Residue x = 0; x < ell; ++x) sigma[static_cast<std::size_t>(x)] = mod(x * p, ell);
  const DartSpace space{ell, static_cast<std::uint32_t>(order.size())};
  return cache.emplace(std::pair{m, p}, Fixture{std::move(d), std::move(order), space, std::move(pos), std::move(sigma)})
      .first->second;
}

#define SPACES ->Args({4, 3})->Args({6, 3})->Args({4, 7})->Unit(benchmark::kMillisecond)

template <bool Parallel>
void BM_DifferenceTally(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    auto t = Parallel ? kernels::omp::difference_tally(f.set.elements(), f.set.modulus())
                      : kernels::serial::difference_tally(f.set.elements(), f.set.modulus());
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_WalkCells(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    auto c = Parallel ? kernels::omp::walk_cells(f.space, f.order) : kernels::serial::walk_cells(f.space, f.order);
    benchmark::DoNotOptimize(c.cells.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.space.count()));
}

template <bool Parallel>
void BM_MapDarts(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    auto r = Parallel ? kernels::omp::map_darts(f.space, f.order, f.position_of, f.sigma)
                      : kernels::serial::map_darts(f.space, f.order, f.position_of, f.sigma);
    benchmark::DoNotOptimize(r.image.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.space.count()));
}

template <bool Parallel>
void BM_EquivalenceScan(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  // The worst witness: the set against its image under the largest unit.
  const auto target = diffset::transform(f.set, f.set.modulus() - 1, 0);
  for (auto _ : state) {
    auto w = Parallel ? kernels::omp::equivalence_scan(f.set.elements(), target.elements(), f.set.modulus())
                      : kernels::serial::equivalence_scan(f.set.elements(), target.elements(), f.set.modulus());
    benchmark::DoNotOptimize(w);
  }
}

}  // namespace

BENCHMARK(BM_DifferenceTally<false>) SPACES;
BENCHMARK(BM_DifferenceTally<true>) SPACES;
BENCHMARK(BM_WalkCells<false>) SPACES;
BENCHMARK(BM_WalkCells<true>) SPACES;
BENCHMARK(BM_MapDarts<false>) SPACES;
BENCHMARK(BM_MapDarts<true>) SPACES;
BENCHMARK(BM_EquivalenceScan<false>) SPACES;
BENCHMARK(BM_EquivalenceScan<true>) SPACES;

BENCHMARK_MAIN();
