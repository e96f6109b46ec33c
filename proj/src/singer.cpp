#include "wada/singer.hpp"

#include <numeric>
#include <string>

#include "wada/error.hpp"
#include "wada/numeric.hpp"

namespace wada::singer {

SpaceParams space_params(std::uint32_t m, std::uint32_t p, std::uint32_t e) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "projective dimension m must be >= 2");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "exponent e must be >= 1");
  SpaceParams sp;
  sp.m = m;
  sp.p = p;
  sp.e = e;
  sp.n = checked_pow(p, e);
  const std::uint64_t top = checked_pow(sp.n, m + 1);
  if (top > static_cast<std::uint64_t>(INT64_MAX)) throw Error(ErrorKind::Overflow, "n^(m+1) exceeds the residue width");
  sp.ell = (top - 1) / (sp.n - 1);
  sp.q = (checked_pow(sp.n, m) - 1) / (sp.n - 1);
  __extension__ using U128 = unsigned __int128;
  const U128 pairs = static_cast<U128>(sp.q) * (sp.q - 1);
  if (pairs % (sp.ell - 1) != 0) throw Error(ErrorKind::Internal, "q(q-1) not divisible by l-1");
  sp.lambda = static_cast<std::uint64_t>(pairs / (sp.ell - 1));
  sp.f = static_cast<std::uint64_t>(e) * (m + 1);
  if (std::gcd(sp.ell, std::uint64_t{p}) != 1) throw Error(ErrorKind::Internal, "gcd(l, p) != 1");
  return sp;
}

diffset::DifferenceSet generate_singer_set(const SpaceParams& params, const SingerOptions& options) {
  const gf::FieldCtx field = gf::FieldCtx::build(params.p, static_cast<std::uint32_t>(params.f), options.field);
  return generate_singer_set(params, field, options.max_tally_pairs);
}

diffset::DifferenceSet generate_singer_set(const SpaceParams& params, const gf::FieldCtx& field,
                                           std::uint64_t max_tally_pairs) {
  const std::uint32_t d = field.d();
  if (field.p() != params.p || d != params.f) throw Error(ErrorKind::InvalidArgument, "field does not match the space");
  const std::uint32_t p = field.p();

  // The trace is GF(p)-linear, so Tr(a) = sum_i a_i Tr(x^i).
  std::vector<gf::FieldElement> basis_trace;
  basis_trace.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    std::vector<std::uint32_t> c(d, 0);
    c[i] = 1;
    basis_trace.push_back(field.trace_to_subfield(field.element(std::move(c)), params.e));
  }

  // Tr(c a) = c Tr(a) for c in F_n^*, and g^l generates F_n^*, so b mod l decides membership.
  const auto ell = static_cast<Residue>(params.ell);
  std::vector<Residue> elements;
  std::vector<std::uint64_t> acc(d);
  gf::FieldElement cur = field.one();
  for (Residue b = 0; b < ell; ++b) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      const std::uint64_t a = cur[i];
      if (a == 0) continue;
      const auto& t = basis_trace[i].coeffs();
      for (std::uint32_t j = 0; j < d; ++j) acc[j] = (acc[j] + a * t[j]) % p;
    }
    if (std::all_of(acc.begin(), acc.end(), [](std::uint64_t x) { return x == 0; })) elements.push_back(b);
    cur = field.mul_by_generator(cur);
  }

  if (elements.size() != params.q)
    throw Error(ErrorKind::Internal, "trace-zero hyperplane has " + std::to_string(elements.size()) + " points, expected " +
                                         std::to_string(params.q));
  const std::uint64_t k = elements.size();
  diffset::DifferenceSet set = k * k <= max_tally_pairs ? diffset::DifferenceSet::make(std::move(elements), ell)
                                                        : diffset::DifferenceSet::assume(std::move(elements), ell, params.lambda);
  if (set.lambda() != params.lambda) throw Error(ErrorKind::Internal, "generated set has the wrong lambda");
  for (const Residue x : set.elements())
    if (!set.contains(mul_mod(x, p, ell))) throw Error(ErrorKind::Internal, "generated set is not fixed by p");
  return set;
}

}  // namespace wada::singer
