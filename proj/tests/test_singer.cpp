#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "wada/error.hpp"
#include "wada/singer.hpp"

using namespace wada;
using singer::space_params;

TEST_CASE("space parameters") {
  const auto a = space_params(4, 2);
  CHECK(a == singer::SpaceParams{4, 2, 1, 2, 31, 15, 7, 5});
  const auto b = space_params(3, 3);
  CHECK(b == singer::SpaceParams{3, 3, 1, 3, 40, 13, 4, 4});
  const auto c = space_params(4, 2, 2);
  CHECK(c.n == 4);
  CHECK(c.ell == 341);
  CHECK(c.q == 85);
  CHECK(c.f == 10);
  const auto d = space_params(10, 2);
  CHECK(d.ell == 2047);
  CHECK(d.q == 1023);
  CHECK(d.lambda == 511);
}

TEST_CASE("space parameters reject bad input") {
  CHECK_THROWS_AS(space_params(1, 2), Error);
  CHECK_THROWS_AS(space_params(2, 4), Error);
  CHECK_THROWS_AS(space_params(2, 2, 0), Error);
  try {
    space_params(40, 7);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("generated sets equal the brute-force trace oracle") {
  struct Case {
    std::uint32_t m, p, e;
  };
  for (const auto& c : {Case{2, 2, 1}, Case{3, 2, 1}, Case{4, 2, 1}, Case{5, 2, 1}, Case{2, 3, 1}, Case{3, 3, 1},
                        Case{2, 5, 1}, Case{2, 7, 1}, Case{2, 2, 2}, Case{3, 2, 2}, Case{2, 3, 2}}) {
    CAPTURE(c.m);
    CAPTURE(c.p);
    CAPTURE(c.e);
    const auto sp = space_params(c.m, c.p, c.e);
    const auto field = gf::FieldCtx::build(c.p, c.e * (c.m + 1));
    const auto d = singer::generate_singer_set(sp, field);
    const auto want = oracle::singer_set(c.p, c.e, c.m, field.modulus(), field.generator().coeffs());
    CHECK(std::vector<Residue>(want.begin(), want.end()) == d.elements());
    CHECK(d.size() == sp.q);
    CHECK(d.lambda() == sp.lambda);
    CHECK(oracle::difference_lambda(d.elements(), d.modulus()) == std::optional<std::uint64_t>{sp.lambda});
    for (auto x : d.elements()) CHECK(d.contains(mod(x * c.p, d.modulus())));
  }
}

TEST_CASE("the Fano plane set is one of the (7,3,1) sets") {
  const auto d = singer::generate_singer_set(space_params(2, 2));
  const auto all = oracle::all_7_3_1_sets();
  CHECK(all.size() == 14);
  CHECK(std::find(all.begin(), all.end(), d.elements()) != all.end());
}

TEST_CASE("frozen generated set for P^4(F_2)") {
  const auto d = singer::generate_singer_set(space_params(4, 2));
  CHECK(d.elements() == std::vector<Residue>{1, 2, 4, 7, 8, 14, 15, 16, 19, 23, 25, 27, 28, 29, 30});
}

TEST_CASE("field size guard applies to generation") {
  singer::SingerOptions opts;
  opts.field.max_elements = 100;
  try {
    singer::generate_singer_set(space_params(4, 3), opts);
    FAIL("expected FieldTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldTooLarge);
  }
}

TEST_CASE("skipping the tally still yields the same set") {
  singer::SingerOptions opts;
  opts.max_tally_pairs = 0;
  CHECK(singer::generate_singer_set(space_params(3, 3), opts) == singer::generate_singer_set(space_params(3, 3)));
}
