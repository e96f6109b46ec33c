#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "wada/kernels.hpp"
#include "wada/reference_sets.hpp"
#include "wada/singer.hpp"

using namespace wada;

namespace {
std::vector<std::int32_t> positions(const std::vector<Residue>& order, Residue ell) {
  std::vector<std::int32_t> pos(static_cast<std::size_t>(ell), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i);
  return pos;
}
}  // namespace

TEST_CASE("difference tally: serial and parallel agree") {
  std::mt19937_64 rng(1);
  for (Residue v : {7, 31, 121, 1000}) {
    std::vector<Residue> all(static_cast<std::size_t>(v));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(v / 3));
    CHECK(kernels::serial::difference_tally(all, v) == kernels::omp::difference_tally(all, v));
  }
  const auto t = kernels::serial::difference_tally(std::vector<Residue>{1, 2, 4}, 7);
  CHECK(t == kernels::DifferenceTally{0, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("cell walk: serial and parallel agree") {
  std::mt19937_64 rng(2);
  for (auto [m, p] : {std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{4u, 2u}, std::pair{4u, 3u}}) {
    const auto d = singer::generate_singer_set(singer::space_params(m, p));
    const DartSpace space{d.modulus(), static_cast<std::uint32_t>(d.size())};
    for (int it = 0; it < 5; ++it) {
      auto o = d.elements();
      std::shuffle(o.begin(), o.end(), rng);
      const auto a = kernels::serial::walk_cells(space, o);
      const auto b = kernels::omp::walk_cells(space, o);
      CHECK(a == b);
      std::uint64_t total = 0;
      for (const auto& c : a.cells) total += c.valency;
      CHECK(total == space.count());
    }
  }
}

TEST_CASE("dart map: serial and parallel agree, including the failing dart") {
  std::mt19937_64 rng(3);
  const auto d = singer::generate_singer_set(singer::space_params(4, 3));
  const Residue ell = d.modulus();
  const DartSpace space{ell, static_cast<std::uint32_t>(d.size())};
  const std::vector<Residue> order(reference::kP4F3Ordered.begin(), reference::kP4F3Ordered.end());
  const auto pos = positions(order, ell);
  for (Residue t : {1, 2, 3, 9, 10, 27}) {
    std::vector<Residue> img(static_cast<std::size_t>(ell));
    const Residue s = static_cast<Residue>(rng() % 121);
    for (Residue x = 0; x < ell; ++x) img[static_cast<std::size_t>(x)] = mod(t * x + s, ell);
    const auto a = kernels::serial::map_darts(space, order, pos, img);
    const auto b = kernels::omp::map_darts(space, order, pos, img);
    CHECK(a == b);
  }
}

TEST_CASE("equivalence scan: serial and parallel agree") {
  const auto d = singer::generate_singer_set(singer::space_params(3, 3));
  const std::vector<Residue> ref(reference::kP3F3.begin(), reference::kP3F3.end());
  auto sorted = ref;
  std::sort(sorted.begin(), sorted.end());
  const auto a = kernels::serial::equivalence_scan(d.elements(), sorted, 40);
  const auto b = kernels::omp::equivalence_scan(d.elements(), sorted, 40);
  CHECK(a == b);
  REQUIRE(a.has_value());
  const std::vector<Residue> other{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  CHECK_FALSE(kernels::serial::equivalence_scan(d.elements(), other, 40).has_value());
  CHECK_FALSE(kernels::omp::equivalence_scan(d.elements(), other, 40).has_value());
}
