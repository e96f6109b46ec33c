#include "wada/diffset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wada/error.hpp"

namespace wada::diffset {

namespace {

void check_residues(std::span<const Residue> elements, Residue v) {
  if (v < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(v), 0);
  for (const Residue x : elements) {
    if (x < 0 || x >= v) throw Error(ErrorKind::InvalidArgument, "residue " + std::to_string(x) + " outside [0, " + std::to_string(v) + ")");
    if (seen[static_cast<std::size_t>(x)]++) throw Error(ErrorKind::InvalidArgument, "duplicate residue " + std::to_string(x));
  }
}

}  // namespace

std::uint64_t verify_difference_set(std::span<const Residue> elements, Residue v) {
  check_residues(elements, v);
  const auto counts = kernels::omp::difference_tally(elements, v);
  const std::uint64_t k = elements.size();
  const std::uint64_t pairs = k * (k - (k > 0 ? 1 : 0));
  const auto vm1 = static_cast<std::uint64_t>(v - 1);
  // When lambda is not integral some residue must differ from the count at 1.
  const std::uint64_t expected = pairs % vm1 == 0 ? pairs / vm1 : counts[1];
  for (Residue alpha = 1; alpha < v; ++alpha)
    if (counts[static_cast<std::size_t>(alpha)] != expected)
      throw NotADifferenceSet(alpha, counts[static_cast<std::size_t>(alpha)], expected);
  return expected;
}

DifferenceSet DifferenceSet::make(std::vector<Residue> elements, Residue v) {
  const std::uint64_t lambda = verify_difference_set(elements, v);
  std::sort(elements.begin(), elements.end());
  return DifferenceSet(std::move(elements), v, lambda);
}

DifferenceSet DifferenceSet::assume(std::vector<Residue> elements, Residue v, std::uint64_t lambda) {
  check_residues(elements, v);
  const std::uint64_t k = elements.size();
  if (k * (k - (k > 0 ? 1 : 0)) != lambda * static_cast<std::uint64_t>(v - 1))
    throw Error(ErrorKind::InvalidArgument, "parameters violate k(k-1) = lambda(v-1)");
  std::sort(elements.begin(), elements.end());
  return DifferenceSet(std::move(elements), v, lambda);
}

bool DifferenceSet::contains(Residue r) const { return std::binary_search(elements_.begin(), elements_.end(), mod(r, modulus_)); }

DifferenceSet transform(const DifferenceSet& d, Residue t, Residue s) {
  const Residue v = d.modulus();
  if (std::gcd(mod(t, v), v) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(t) + " is not a unit mod " + std::to_string(v));
  std::vector<Residue> out;
  out.reserve(d.size());
  for (const Residue x : d.elements()) out.push_back(mod(mul_mod(t, x, v) + s, v));
  // An affine image of a difference set is one with the same lambda.
  return DifferenceSet::assume(std::move(out), v, d.lambda());
}

std::optional<kernels::Affine> equivalent(const DifferenceSet& d1, const DifferenceSet& d2) {
  if (d1.modulus() != d2.modulus() || d1.size() != d2.size()) return std::nullopt;
  return kernels::omp::equivalence_scan(d1.elements(), d2.elements(), d1.modulus());
}

OrbitDecomposition frobenius_orbits(const DifferenceSet& d, Residue p, std::uint64_t f) {
  const Residue v = d.modulus();
  if (std::gcd(mod(p, v), v) != 1) throw Error(ErrorKind::NotAUnit, "multiplier must be prime to the modulus");
  for (const Residue x : d.elements()) {
    const Residue y = mul_mod(p, x, v);
    if (!d.contains(y)) throw NotFrobeniusFixed(x, y);
  }
  OrbitDecomposition out;
  out.modulus = v;
  out.multiplier = mod(p, v);
  std::vector<std::uint8_t> done(static_cast<std::size_t>(v), 0);
  for (const Residue x : d.elements()) {  // ascending, so each orbit starts at its minimum
    if (done[static_cast<std::size_t>(x)]) continue;
    std::vector<Residue> orbit;
    Residue y = x;
    do {
      orbit.push_back(y);
      done[static_cast<std::size_t>(y)] = 1;
      y = mul_mod(p, y, v);
    } while (y != x);
    out.lengths.push_back(orbit.size());
    if (f == 0 || f % orbit.size() != 0) out.lengths_divide_f = false;
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Residue> fixed_vertices(Residue ell, Residue t) {
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  if (std::gcd(mod(t, ell), ell) != 1) throw Error(ErrorKind::NotAUnit, "multiplier must be prime to l");
  const Residue step = ell / std::gcd(mod(t - 1, ell), ell);
  std::vector<Residue> out;
  for (Residue w = 0; w < ell; w += step) out.push_back(w);
  return out;
}

std::vector<DifferenceSet> frobenius_shift_family(const DifferenceSet& d_f, Residue p, std::uint64_t f) {
  frobenius_orbits(d_f, p, f);
  std::vector<DifferenceSet> family;
  for (const Residue s : fixed_vertices(d_f.modulus(), p)) {
    DifferenceSet shifted = transform(d_f, 1, s);
    frobenius_orbits(shifted, p, f);
    family.push_back(std::move(shifted));
  }
  return family;
}

}  // namespace wada::diffset
