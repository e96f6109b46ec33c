#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wada/darts.hpp"
#include "wada/kernels.hpp"
#include "wada/ordering.hpp"

namespace wada::dessin {

struct DessinOptions {
  /// Size guard on l*q edges.
  std::uint64_t max_edges = 1'500'000;
  bool force_large = false;
};

/// Oriented bipartite map of an ordered difference set: white vertex w and
/// black vertex b are joined iff b - w is in D, with the local pattern
/// described in darts.hpp. Immutable after build(); cells are walked once.
class Dessin {
 public:
  /// Throws SizeGuard past the edge limit and InvalidArgument for q < 2.
  static Dessin build(const ordering::OrderedDifferenceSet& ordered, const DessinOptions& options = {});

  Residue ell() const noexcept { return space_.ell; }
  std::uint32_t q() const noexcept { return space_.q; }
  const DartSpace& space() const noexcept { return space_; }
  const ordering::OrderedDifferenceSet& ordered() const noexcept { return ordered_; }
  std::span<const Residue> order() const noexcept { return ordered_.order(); }
  /// Position of a residue in the ordering, -1 if it is not an element.
  std::int32_t position_of(Residue r) const { return position_of_[static_cast<std::size_t>(mod(r, ell()))]; }
  std::span<const std::int32_t> position_table() const noexcept { return position_of_; }

  std::uint64_t vertex_count() const noexcept { return 2 * static_cast<std::uint64_t>(ell()); }
  std::uint64_t edge_count() const noexcept { return space_.edges(); }
  std::uint64_t dart_count() const noexcept { return space_.count(); }

  std::uint64_t rotate(std::uint64_t dart) const noexcept { return space_.rotate(dart); }
  std::uint64_t involution(std::uint64_t dart) const noexcept { return space_.involution(dart, order()); }
  std::uint64_t face(std::uint64_t dart) const noexcept { return space_.face(dart, order()); }

  const kernels::CellLabels& cells() const noexcept { return cells_; }
  std::uint32_t cell_of(std::uint64_t dart) const { return cells_.cell_of[dart]; }
  /// (d_i, d_{i+1}) for the cell whose white darts sit at position i.
  std::pair<Residue, Residue> entering_pair(std::uint32_t cell) const;

  /// The group generated by rotation and involution acts transitively on darts.
  bool is_connected() const;

 private:
  explicit Dessin(ordering::OrderedDifferenceSet ordered) : ordered_(std::move(ordered)) {}

  ordering::OrderedDifferenceSet ordered_;
  DartSpace space_;
  std::vector<std::int32_t> position_of_;
  kernels::CellLabels cells_;
};

/// Face-permutation orbits of a built dessin, numbered by their minimal dart.
const std::vector<kernels::CellInfo>& walk_cells(const Dessin& d);

struct WadaWitness {
  enum class Kind : std::uint8_t { Repeated, Missing };
  std::uint32_t cell = 0;
  Color color = Color::White;
  Residue vertex = 0;
  Kind kind = Kind::Repeated;
  friend bool operator==(const WadaWitness&, const WadaWitness&) = default;
};

struct WadaVerdict {
  bool wada = false;
  std::optional<WadaWitness> witness;
};

/// Every cell boundary meets each white and each black index exactly once.
WadaVerdict is_wada(const Dessin& d);

struct SignatureTriple {
  std::uint64_t white_lcm = 0;
  std::uint64_t black_lcm = 0;
  std::uint64_t half_face_lcm = 0;
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

struct Topology {
  SignatureTriple signature;
  std::int64_t euler_characteristic = 0;
  std::int64_t genus = 0;
  std::uint64_t cell_count = 0;
  bool uniform = false;  // all cells share one valency
  friend bool operator==(const Topology&, const Topology&) = default;
};

/// Signature (lcm of white, black and half face valencies) and genus from
/// V - E + F = 2 - 2g.
Topology signature_and_genus(const Dessin& d);

struct CellSummary {
  std::uint64_t valency = 0;
  Residue first = 0;  // entering pair (d_i, d_{i+1})
  Residue second = 0;
  friend bool operator==(const CellSummary&, const CellSummary&) = default;
};

/// Everything the JSON and text reports print about a dessin.
struct DessinReport {
  Residue ell = 0;
  std::uint64_t q = 0;
  std::vector<CellSummary> cells;
  Topology topology;
  bool wada = false;
  friend bool operator==(const DessinReport&, const DessinReport&) = default;
};

DessinReport summarize(const Dessin& d);

}  // namespace wada::dessin
