#include <algorithm>
#include <limits>

#include "wada/kernels.hpp"

namespace wada::kernels::serial {

DifferenceTally difference_tally(std::span<const Residue> elements, Residue v) {
  DifferenceTally counts(static_cast<std::size_t>(v), 0);
  for (const Residue a : elements)
    for (const Residue b : elements)
      if (a != b) ++counts[static_cast<std::size_t>(mod(a - b, v))];
  return counts;
}

CellLabels walk_cells(const DartSpace& space, std::span<const Residue> order) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  CellLabels out;
  out.cell_of.assign(space.count(), kUnset);
  for (std::uint64_t start = 0; start < space.count(); ++start) {
    if (out.cell_of[start] != kUnset) continue;
    const auto cell = static_cast<std::uint32_t>(out.cells.size());
    std::uint64_t valency = 0;
    std::uint64_t x = start;
    do {
      out.cell_of[x] = cell;
      ++valency;
      x = space.face(x, order);
    } while (x != start);
    out.cells.push_back({start, valency, space.position(start)});
  }
  return out;
}

DartMapResult map_darts(const DartSpace& space, std::span<const Residue> order, std::span<const std::int32_t> position_of,
                        std::span<const Residue> vertex_image) {
  const Residue ell = space.ell;
  DartMapResult out;
  out.image.assign(space.count(), 0);
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    const Residue v = space.vertex(x);
    const std::uint32_t pos = space.position(x);
    const bool white = space.color(x) == Color::White;
    const Residue w = white ? v : mod(v - order[pos], ell);
    const Residue b = white ? mod(v + order[pos], ell) : v;
    const Residue w_img = vertex_image[static_cast<std::size_t>(w)];
    const Residue b_img = vertex_image[static_cast<std::size_t>(b)];
    const std::int32_t p_img = position_of[static_cast<std::size_t>(mod(b_img - w_img, ell))];
    if (p_img < 0) {
      out.failure = DartFailure::EdgeNotPreserved;
      out.failing_dart = x;
      out.image.clear();
      return out;
    }
    out.image[x] = white ? space.id(Color::White, w_img, static_cast<std::uint32_t>(p_img))
                         : space.id(Color::Black, b_img, static_cast<std::uint32_t>(p_img));
  }
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    if (out.image[space.rotate(x)] != space.rotate(out.image[x])) {
      out.failure = DartFailure::RotationNotPreserved;
    } else if (out.image[space.involution(x, order)] != space.involution(out.image[x], order)) {
      out.failure = DartFailure::InvolutionNotPreserved;
    } else {
      continue;
    }
    out.failing_dart = x;
    out.image.clear();
    return out;
  }
  return out;
}

std::optional<Affine> equivalence_scan(std::span<const Residue> a, std::span<const Residue> b, Residue v) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return Affine{1, 0};
  std::vector<std::uint8_t> in_b(static_cast<std::size_t>(v), 0);
  for (const Residue x : b) in_b[static_cast<std::size_t>(x)] = 1;
  for (const Residue t : units_mod(v)) {
    std::vector<Residue> shifts;
    shifts.reserve(a.size());
    for (const Residue x : a) shifts.push_back(mod(b.front() - mul_mod(t, x, v), v));
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    for (const Residue s : shifts) {
      const bool hit = std::all_of(a.begin(), a.end(), [&](Residue x) { return in_b[static_cast<std::size_t>(mod(mul_mod(t, x, v) + s, v))] != 0; });
      if (hit) return Affine{t, s};
    }
  }
  return std::nullopt;
}

}  // namespace wada::kernels::serial
