#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wada/diffset.hpp"

namespace wada::ordering {

/// A cyclic ordering of the elements of a difference set. Rotations describe
/// the same ordering; canonical() rotates the minimal element to the front.
class OrderedDifferenceSet {
 public:
  /// order must be a permutation of base.elements().
  static OrderedDifferenceSet make(diffset::DifferenceSet base, std::vector<Residue> order);

  const diffset::DifferenceSet& base() const noexcept { return base_; }
  const std::vector<Residue>& order() const noexcept { return order_; }
  Residue modulus() const noexcept { return base_.modulus(); }
  std::size_t size() const noexcept { return order_.size(); }
  OrderedDifferenceSet rotated(std::size_t shift) const;
  OrderedDifferenceSet canonical() const;

  friend bool operator==(const OrderedDifferenceSet&, const OrderedDifferenceSet&) = default;

 private:
  OrderedDifferenceSet(diffset::DifferenceSet base, std::vector<Residue> order)
      : base_(std::move(base)), order_(std::move(order)) {}

  diffset::DifferenceSet base_;
  std::vector<Residue> order_;
};

struct AdjacentPair {
  Residue first = 0;
  Residue second = 0;
  Residue gcd = 0;  // gcd(first - second, l)
  friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
};

/// Block form d_1..d_k, p^j d_1..p^j d_k, ... found at some rotation.
struct FrobeniusBlocks {
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::uint64_t rotation = 0;  // rotation of the order that exhibits the block form
  friend bool operator==(const FrobeniusBlocks&, const FrobeniusBlocks&) = default;
};

struct CompatibilityReport {
  bool wada = false;
  std::vector<AdjacentPair> offending;
  /// Unset until a Frobenius check has been run.
  std::optional<bool> frobenius;
  std::optional<FrobeniusBlocks> blocks;
  friend bool operator==(const CompatibilityReport&, const CompatibilityReport&) = default;
};

/// gcd(d_i - d_{i+1}, l) == 1 for every cyclically consecutive pair.
CompatibilityReport is_wada_compatible(const OrderedDifferenceSet& o);

/// Throws NotFrobeniusFixed if the base is not closed under p, and
/// FNotDividingQ if f does not divide q. The wada fields are filled as well.
CompatibilityReport is_frobenius_compatible(const OrderedDifferenceSet& o, Residue p, std::uint64_t f);

struct SearchOptions {
  bool require_frobenius = false;
  std::uint64_t budget = 10'000'000;  // search nodes
};

struct SearchResult {
  /// None: the whole (restricted) space was searched without success.
  std::optional<OrderedDifferenceSet> ordering;
  std::uint64_t nodes = 0;
};

/// Exact, deterministic backtracking. With require_frobenius, searches block
/// orderings built from the Frobenius orbits and accepts on the first block's
/// consecutive differences plus the transition d_k - p^j d_1; otherwise it
/// backtracks over plain cyclic orderings. Throws BudgetExhausted when the
/// node budget runs out and OrbitShape when the orbits are not all of length f.
SearchResult find_compatible_ordering(const diffset::DifferenceSet& d, Residue p, std::uint64_t f,
                                      const SearchOptions& options = {});

}  // namespace wada::ordering
