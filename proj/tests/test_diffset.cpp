#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wada/diffset.hpp"
#include "wada/error.hpp"
#include "wada/reference_sets.hpp"
#include "wada/singer.hpp"

using namespace wada;
using diffset::DifferenceSet;

namespace {
template <std::size_t N>
std::vector<Residue> vec(const std::array<Residue, N>& a) {
  return {a.begin(), a.end()};
}
}  // namespace

TEST_CASE("reference sets verify with the oracle's lambda") {
  CHECK(DifferenceSet::make(vec(reference::kP4F2Ordered), 31).lambda() == 7);
  CHECK(DifferenceSet::make(vec(reference::kP3F3), 40).lambda() == 4);
  CHECK(DifferenceSet::make(vec(reference::kP3F3Plus20), 40).lambda() == 4);
  CHECK(DifferenceSet::make(vec(reference::kP4F3Ordered), 121).lambda() == 13);
  CHECK(oracle::difference_lambda(vec(reference::kP4F3Ordered), 121) == std::optional<std::uint64_t>{13});
}

TEST_CASE("elements are stored sorted") {
  const auto d = DifferenceSet::make({4, 2, 1}, 7);
  CHECK(d.elements() == std::vector<Residue>{1, 2, 4});
  CHECK(d.contains(9));
  CHECK_FALSE(d.contains(3));
}

TEST_CASE("verification reports the first deviant residue") {
  try {
    DifferenceSet::make({0, 1, 2}, 7);
    FAIL("expected NotADifferenceSet");
  } catch (const NotADifferenceSet& e) {
    CHECK(e.alpha() == 1);
    CHECK(e.count() == 2);
  }
  CHECK_THROWS_AS(DifferenceSet::make({0, 0, 1}, 7), Error);
  CHECK_THROWS_AS(DifferenceSet::make({0, 7, 1}, 7), Error);
  CHECK_THROWS_AS(DifferenceSet::assume({0, 1, 3, 4}, 7, 1), Error);
}

TEST_CASE("all 3-subsets of Z/7 agree with the oracle") {
  const auto good = oracle::all_7_3_1_sets();
  int accepted = 0;
  for (Residue a = 0; a < 7; ++a)
    for (Residue b = a + 1; b < 7; ++b)
      for (Residue c = b + 1; c < 7; ++c) {
        bool ok = true;
        try {
          DifferenceSet::make({a, b, c}, 7);
        } catch (const NotADifferenceSet&) {
          ok = false;
        }
        const bool want = std::find(good.begin(), good.end(), std::vector<Residue>{a, b, c}) != good.end();
        CHECK(ok == want);
        accepted += ok;
      }
  CHECK(accepted == 14);
}

TEST_CASE("transforms preserve the difference property") {
  std::mt19937_64 rng(11);
  const auto d = DifferenceSet::make(vec(reference::kP3F3), 40);
  const auto units = units_mod(40);
  for (int it = 0; it < 100; ++it) {
    const Residue t = units[rng() % units.size()];
    const Residue s = static_cast<Residue>(rng() % 40);
    const auto img = diffset::transform(d, t, s);
    CHECK(oracle::difference_lambda(img.elements(), 40) == std::optional<std::uint64_t>{4});
    const auto w = diffset::equivalent(d, img);
    REQUIRE(w.has_value());
    CHECK(diffset::transform(d, w->t, w->s) == img);
    CHECK(w->t <= t);
  }
  CHECK_THROWS_AS(diffset::transform(d, 2, 0), Error);
}

TEST_CASE("listed shift and equivalence witnesses") {
  const auto d5 = DifferenceSet::make(vec(reference::kP4F2Ordered), 31);
  CHECK(diffset::transform(d5, 1, -1) == DifferenceSet::make(vec(reference::kP4F2Shifted), 31));
  const auto d4 = DifferenceSet::make(vec(reference::kP3F3), 40);
  CHECK(diffset::transform(d4, 1, 20) == DifferenceSet::make(vec(reference::kP3F3Plus20), 40));
  const auto w = diffset::equivalent(singer::generate_singer_set(singer::space_params(3, 3)), d4);
  REQUIRE(w.has_value());
  CHECK(*w == kernels::Affine{1, 20});
  const auto fano = DifferenceSet::make({1, 2, 4}, 7);
  const auto other = DifferenceSet::make({3, 5, 6}, 7);
  CHECK(diffset::equivalent(fano, other) == kernels::Affine{3, 0});
}

TEST_CASE("frobenius orbits match the brute-force orbits") {
  const auto d5 = DifferenceSet::make(vec(reference::kP4F2Ordered), 31);
  const auto o = diffset::frobenius_orbits(d5, 2, 5);
  CHECK(o.lengths == std::vector<std::uint64_t>{5, 5, 5});
  CHECK(o.lengths_divide_f);
  CHECK(o.orbits[0] == std::vector<Residue>{1, 2, 4, 8, 16});
  std::set<std::set<Residue>> got;
  for (const auto& orb : o.orbits) got.insert({orb.begin(), orb.end()});
  CHECK(got == oracle::orbits(d5.elements(), 2, 31));

  const auto d4 = DifferenceSet::make(vec(reference::kP3F3), 40);
  const auto o4 = diffset::frobenius_orbits(d4, 3, 4);
  std::set<std::set<Residue>> got4;
  for (const auto& orb : o4.orbits) got4.insert({orb.begin(), orb.end()});
  CHECK(got4 == std::set<std::set<Residue>>{{21, 23, 29, 7}, {22, 26, 34, 38}, {25, 35}, {5, 15}, {0}});
  CHECK(o4.orbits.front() == std::vector<Residue>{0});
}

TEST_CASE("sets not fixed by p name the smallest offender") {
  try {
    diffset::frobenius_orbits(DifferenceSet::make(vec(reference::kP4F2Shifted), 31), 2, 5);
    FAIL("expected NotFrobeniusFixed");
  } catch (const NotFrobeniusFixed& e) {
    CHECK(e.element() == 2);
    CHECK(e.image() == 4);
  }
}

TEST_CASE("fixed vertices and the shift family") {
  CHECK(diffset::fixed_vertices(31, 2) == std::vector<Residue>{0});
  CHECK(diffset::fixed_vertices(40, 3) == std::vector<Residue>{0, 20});
  CHECK(diffset::fixed_vertices(40, 9) == std::vector<Residue>{0, 5, 10, 15, 20, 25, 30, 35});
  CHECK(diffset::fixed_vertices(31, 1).size() == 31);
  const auto fam = diffset::frobenius_shift_family(DifferenceSet::make(vec(reference::kP3F3), 40), 3, 4);
  REQUIRE(fam.size() == 2);
  CHECK(fam[1] == DifferenceSet::make(vec(reference::kP3F3Plus20), 40));
}
