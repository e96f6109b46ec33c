#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wada/kernels.hpp"
#include "wada/numeric.hpp"

namespace wada::diffset {

/// Brute-force tally of all k(k-1) nonzero differences. Returns lambda, or
/// throws NotADifferenceSet naming the first residue with a deviant count.
/// Elements must be distinct residues in [0, v) and v >= 2.
std::uint64_t verify_difference_set(std::span<const Residue> elements, Residue v);

/// A (v, k, lambda) cyclic difference set; elements are kept sorted ascending.
class DifferenceSet {
 public:
  /// Validates and verifies via the difference tally.
  static DifferenceSet make(std::vector<Residue> elements, Residue v);
  /// Skips the O(k^2) tally; for sets whose uniformity is known from their
  /// construction. Range, distinctness and the counting identity
  /// k(k-1) = lambda(v-1) are still checked.
  static DifferenceSet assume(std::vector<Residue> elements, Residue v, std::uint64_t lambda);

  Residue modulus() const noexcept { return modulus_; }
  const std::vector<Residue>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint64_t lambda() const noexcept { return lambda_; }
  bool contains(Residue r) const;

  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

 private:
  DifferenceSet(std::vector<Residue> elements, Residue v, std::uint64_t lambda)
      : modulus_(v), elements_(std::move(elements)), lambda_(lambda) {}

  Residue modulus_ = 0;
  std::vector<Residue> elements_;
  std::uint64_t lambda_ = 0;
};

/// Orbits of x -> t*x mod v restricted to a set closed under it. Orbits are
/// sorted by their minimal element and each starts there.
struct OrbitDecomposition {
  Residue modulus = 0;
  Residue multiplier = 1;
  std::vector<std::vector<Residue>> orbits;
  std::vector<std::uint64_t> lengths;
  /// Every orbit length divides the given group order f.
  bool lengths_divide_f = true;

  friend bool operator==(const OrbitDecomposition&, const OrbitDecomposition&) = default;
};

/// {t*d + s mod v}; t must be a unit.
DifferenceSet transform(const DifferenceSet& d, Residue t, Residue s);

/// Smallest witness (t, s) with t*d1 + s == d2, or none.
std::optional<kernels::Affine> equivalent(const DifferenceSet& d1, const DifferenceSet& d2);

/// Throws NotFrobeniusFixed when d is not closed under multiplication by p.
OrbitDecomposition frobenius_orbits(const DifferenceSet& d, Residue p, std::uint64_t f);

/// {w : (t - 1) w == 0 mod l}, ascending; gcd(t, l) must be 1.
std::vector<Residue> fixed_vertices(Residue ell, Residue t);

/// D_f + s for every vertex s fixed by x -> p*x; each member is checked to be fixed.
std::vector<DifferenceSet> frobenius_shift_family(const DifferenceSet& d_f, Residue p, std::uint64_t f);

}  // namespace wada::diffset
