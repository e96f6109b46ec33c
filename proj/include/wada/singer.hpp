#pragma once

#include <cstdint>

#include "wada/diffset.hpp"
#include "wada/gf.hpp"

namespace wada::singer {

/// Parameters of the projective space P^m(F_n), n = p^e.
struct SpaceParams {
  std::uint32_t m = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t n = 0;       // field order p^e
  std::uint64_t ell = 0;     // points (= hyperplanes): (n^(m+1) - 1) / (n - 1)
  std::uint64_t q = 0;       // points per hyperplane: (n^m - 1) / (n - 1)
  std::uint64_t lambda = 0;  // q(q - 1) / (l - 1)
  std::uint64_t f = 0;       // order of the Frobenius group, e(m + 1)

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// Throws InvalidArgument for non-prime p, m < 2 or e < 1, Overflow past 64 bits.
SpaceParams space_params(std::uint32_t m, std::uint32_t p, std::uint32_t e = 1);

struct SingerOptions {
  gf::FieldConfig field;
  /// Above k^2 ordered pairs the generated set is not re-tallied.
  std::uint64_t max_tally_pairs = std::uint64_t{2'000'000'000};
};

/// Indices b mod l of the points g^b on the trace-zero hyperplane of
/// GF(n^(m+1)) over GF(n). The result is fixed by multiplication with p.
diffset::DifferenceSet generate_singer_set(const SpaceParams& params, const SingerOptions& options = {});

/// Same, over an already built GF(p^(e(m+1))).
diffset::DifferenceSet generate_singer_set(const SpaceParams& params, const gf::FieldCtx& field,
                                           std::uint64_t max_tally_pairs = SingerOptions{}.max_tally_pairs);

}  // namespace wada::singer
