#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wada/darts.hpp"
#include "wada/numeric.hpp"

// Data-parallel inner loops. Every kernel has a straightforward serial
// reference in kernels::serial and an OpenMP version in kernels::omp that
// must return identical results; the library calls the OpenMP versions.

namespace wada::kernels {

/// counts[alpha] = #{(a, b) in elements^2, a != b : a - b == alpha mod v}.
using DifferenceTally = std::vector<std::uint64_t>;

struct CellInfo {
  std::uint64_t first_dart = 0;  // minimal dart id on the boundary
  std::uint64_t valency = 0;     // darts (= edges) on the boundary, 2r
  std::uint32_t position = 0;    // white-dart position i shared by the cell

  friend bool operator==(const CellInfo&, const CellInfo&) = default;
};

/// Face-permutation orbits. Cells are numbered by ascending first_dart.
struct CellLabels {
  std::vector<std::uint32_t> cell_of;  // per dart id
  std::vector<CellInfo> cells;

  friend bool operator==(const CellLabels&, const CellLabels&) = default;
};

enum class DartFailure : std::uint8_t { None, EdgeNotPreserved, RotationNotPreserved, InvolutionNotPreserved };

/// Image of every dart under a vertex map applied to both colors.
struct DartMapResult {
  std::vector<std::uint64_t> image;         // valid only when failure == None
  DartFailure failure = DartFailure::None;
  std::uint64_t failing_dart = 0;           // smallest failing dart id

  friend bool operator==(const DartMapResult&, const DartMapResult&) = default;
};

struct Affine {
  Residue t = 1;
  Residue s = 0;
  friend bool operator==(const Affine&, const Affine&) = default;
};

namespace serial {
DifferenceTally difference_tally(std::span<const Residue> elements, Residue v);
CellLabels walk_cells(const DartSpace& space, std::span<const Residue> order);
/// vertex_image has length l; position_of[r] is the index of r in order or -1.
DartMapResult map_darts(const DartSpace& space, std::span<const Residue> order, std::span<const std::int32_t> position_of,
                        std::span<const Residue> vertex_image);
/// Smallest (t, s), t a unit in ascending order, with t*a + s = b as sets. a, b sorted.
std::optional<Affine> equivalence_scan(std::span<const Residue> a, std::span<const Residue> b, Residue v);
}  // namespace serial

namespace omp {
DifferenceTally difference_tally(std::span<const Residue> elements, Residue v);
CellLabels walk_cells(const DartSpace& space, std::span<const Residue> order);
DartMapResult map_darts(const DartSpace& space, std::span<const Residue> order, std::span<const std::int32_t> position_of,
                        std::span<const Residue> vertex_image);
std::optional<Affine> equivalence_scan(std::span<const Residue> a, std::span<const Residue> b, Residue v);
}  // namespace omp

}  // namespace wada::kernels
