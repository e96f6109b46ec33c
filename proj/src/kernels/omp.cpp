#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "wada/kernels.hpp"

namespace wada::kernels::omp {

namespace {
constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
}

DifferenceTally difference_tally(std::span<const Residue> elements, Residue v) {
  const auto k = static_cast<std::int64_t>(elements.size());
  const auto width = static_cast<std::size_t>(v);
  DifferenceTally counts(width, 0);
#pragma omp parallel
  {
    DifferenceTally local(width, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < k; ++i) {
      const Residue a = elements[static_cast<std::size_t>(i)];
      for (const Residue b : elements)
        if (a != b) ++local[static_cast<std::size_t>(mod(a - b, v))];
    }
#pragma omp critical
    for (std::size_t r = 0; r < width; ++r) counts[r] += local[r];
  }
  return counts;
}

CellLabels walk_cells(const DartSpace& space, std::span<const Residue> order) {
  // Every cell consists of white darts at one position i and black darts at
  // i + 1, so positions partition the work without sharing any dart.
  const std::uint32_t q = space.q;
  const Residue ell = space.ell;
  std::vector<std::uint32_t> local_of(space.count(), kUnset);
  std::vector<std::vector<CellInfo>> per_position(q);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(q); ++i) {
    const auto pos = static_cast<std::uint32_t>(i);
    auto& cells = per_position[pos];
    for (Residue w = 0; w < ell; ++w) {
      const std::uint64_t start = space.id(Color::White, w, pos);
      if (local_of[start] != kUnset) continue;
      const auto local = static_cast<std::uint32_t>(cells.size());
      std::uint64_t valency = 0;
      std::uint64_t x = start;
      do {
        local_of[x] = local;
        ++valency;
        x = space.face(x, order);
      } while (x != start);
      cells.push_back({start, valency, pos});
    }
  }

  std::vector<std::uint64_t> offset(q + 1, 0);
  for (std::uint32_t i = 0; i < q; ++i) offset[i + 1] = offset[i] + per_position[i].size();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;  // (first_dart, flat index)
  keyed.reserve(offset[q]);
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::size_t c = 0; c < per_position[i].size(); ++c) keyed.emplace_back(per_position[i][c].first_dart, offset[i] + c);
  std::sort(keyed.begin(), keyed.end());

  CellLabels out;
  out.cells.resize(keyed.size());
  std::vector<std::uint32_t> global_of_flat(keyed.size());
  for (std::size_t g = 0; g < keyed.size(); ++g) global_of_flat[keyed[g].second] = static_cast<std::uint32_t>(g);
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::size_t c = 0; c < per_position[i].size(); ++c) out.cells[global_of_flat[offset[i] + c]] = per_position[i][c];

  out.cell_of.resize(space.count());
  const auto n = static_cast<std::int64_t>(space.count());
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<std::uint64_t>(xi);
    std::uint32_t pos = space.position(x);
    if (space.color(x) == Color::Black) pos = pos == 0 ? q - 1 : pos - 1;
    out.cell_of[x] = global_of_flat[offset[pos] + local_of[x]];
  }
  return out;
}

DartMapResult map_darts(const DartSpace& space, std::span<const Residue> order, std::span<const std::int32_t> position_of,
                        std::span<const Residue> vertex_image) {
  const Residue ell = space.ell;
  const auto n = static_cast<std::int64_t>(space.count());
  constexpr auto kNone = std::numeric_limits<std::int64_t>::max();
  DartMapResult out;
  out.image.assign(space.count(), 0);

  std::int64_t first_bad = kNone;
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<std::uint64_t>(xi);
    const Residue v = space.vertex(x);
    const std::uint32_t pos = space.position(x);
    const bool white = space.color(x) == Color::White;
    const Residue w = white ? v : mod(v - order[pos], ell);
    const Residue b = white ? mod(v + order[pos], ell) : v;
    const Residue w_img = vertex_image[static_cast<std::size_t>(w)];
    const Residue b_img = vertex_image[static_cast<std::size_t>(b)];
    const std::int32_t p_img = position_of[static_cast<std::size_t>(mod(b_img - w_img, ell))];
    if (p_img < 0) {
      first_bad = std::min(first_bad, xi);
      continue;
    }
    out.image[x] = white ? space.id(Color::White, w_img, static_cast<std::uint32_t>(p_img))
                         : space.id(Color::Black, b_img, static_cast<std::uint32_t>(p_img));
  }
  if (first_bad != kNone) {
    out.failure = DartFailure::EdgeNotPreserved;
    out.failing_dart = static_cast<std::uint64_t>(first_bad);
    out.image.clear();
    return out;
  }

#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<std::uint64_t>(xi);
    if (out.image[space.rotate(x)] != space.rotate(out.image[x]) ||
        out.image[space.involution(x, order)] != space.involution(out.image[x], order))
      first_bad = std::min(first_bad, xi);
  }
  if (first_bad != kNone) {
    const auto x = static_cast<std::uint64_t>(first_bad);
    out.failure = out.image[space.rotate(x)] != space.rotate(out.image[x]) ? DartFailure::RotationNotPreserved
                                                                            : DartFailure::InvolutionNotPreserved;
    out.failing_dart = x;
    out.image.clear();
  }
  return out;
}

std::optional<Affine> equivalence_scan(std::span<const Residue> a, std::span<const Residue> b, Residue v) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return Affine{1, 0};
  std::vector<std::uint8_t> in_b(static_cast<std::size_t>(v), 0);
  for (const Residue x : b) in_b[static_cast<std::size_t>(x)] = 1;
  const std::vector<Residue> units = units_mod(v);
  const auto nu = static_cast<std::int64_t>(units.size());
  std::vector<Residue> shift_for(units.size(), -1);

  // Units above the best hit so far cannot win; every unit below it is still scanned.
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ui = 0; ui < nu; ++ui) {
    if (ui > best.load(std::memory_order_relaxed)) continue;
    const Residue t = units[static_cast<std::size_t>(ui)];
    std::vector<Residue> shifts;
    shifts.reserve(a.size());
    for (const Residue x : a) shifts.push_back(mod(b.front() - mul_mod(t, x, v), v));
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    for (const Residue s : shifts) {
      const bool hit = std::all_of(a.begin(), a.end(), [&](Residue x) { return in_b[static_cast<std::size_t>(mod(mul_mod(t, x, v) + s, v))] != 0; });
      if (hit) {
        shift_for[static_cast<std::size_t>(ui)] = s;
        std::int64_t cur = best.load();
        while (ui < cur && !best.compare_exchange_weak(cur, ui)) {
        }
        break;
      }
    }
  }
  const std::int64_t winner = best.load();
  if (winner == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return Affine{units[static_cast<std::size_t>(winner)], shift_for[static_cast<std::size_t>(winner)]};
}

}  // namespace wada::kernels::omp
