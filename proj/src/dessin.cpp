#include "wada/dessin.hpp"

#include <numeric>
#include <string>

#include "wada/error.hpp"

namespace wada::dessin {

Dessin Dessin::build(const ordering::OrderedDifferenceSet& ordered, const DessinOptions& options) {
  const Residue ell = ordered.modulus();
  const std::uint64_t q = ordered.size();
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "dessin needs q >= 2 (hyperplanes must be proper subspaces)");
  const std::uint64_t edges = static_cast<std::uint64_t>(ell) * q;
  if (edges > options.max_edges && !options.force_large)
    throw Error(ErrorKind::SizeGuard, "dessin has " + std::to_string(edges) + " edges, above the size guard of " +
                                          std::to_string(options.max_edges) + "; pass force_large to build it anyway");
  Dessin d(ordered);
  d.space_ = DartSpace{ell, static_cast<std::uint32_t>(q)};
  d.position_of_.assign(static_cast<std::size_t>(ell), -1);
  for (std::size_t i = 0; i < q; ++i) d.position_of_[static_cast<std::size_t>(d.order()[i])] = static_cast<std::int32_t>(i);
  d.cells_ = kernels::omp::walk_cells(d.space_, d.order());
  return d;
}

std::pair<Residue, Residue> Dessin::entering_pair(std::uint32_t cell) const {
  const std::uint32_t i = cells_.cells.at(cell).position;
  return {order()[i], order()[(i + 1) % q()]};
}

bool Dessin::is_connected() const {
  std::vector<std::uint8_t> seen(dart_count(), 0);
  std::vector<std::uint64_t> stack{0};
  seen[0] = 1;
  std::uint64_t reached = 1;
  while (!stack.empty()) {
    const std::uint64_t x = stack.back();
    stack.pop_back();
    for (const std::uint64_t y : {rotate(x), involution(x)}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == dart_count();
}

const std::vector<kernels::CellInfo>& walk_cells(const Dessin& d) { return d.cells().cells; }

WadaVerdict is_wada(const Dessin& d) {
  const Residue ell = d.ell();
  const auto& cells = d.cells().cells;
  // Stamps avoid clearing per cell: seen[color][v] == cell + 1 means visited in this cell.
  std::vector<std::uint32_t> seen[2] = {std::vector<std::uint32_t>(static_cast<std::size_t>(ell), 0),
                                        std::vector<std::uint32_t>(static_cast<std::size_t>(ell), 0)};
  const DartSpace& space = d.space();
  for (std::uint32_t c = 0; c < cells.size(); ++c) {
    const std::uint32_t stamp = c + 1;
    std::uint64_t distinct[2] = {0, 0};
    std::optional<WadaWitness> repeat;
    std::uint64_t x = cells[c].first_dart;
    do {
      const auto col = static_cast<std::size_t>(space.color(x));
      const Residue v = space.vertex(x);
      auto& slot = seen[col][static_cast<std::size_t>(v)];
      if (slot == stamp) {
        if (!repeat) repeat = WadaWitness{c, space.color(x), v, WadaWitness::Kind::Repeated};
      } else {
        slot = stamp;
        ++distinct[col];
      }
      x = d.face(x);
    } while (x != cells[c].first_dart);
    if (repeat) return {false, repeat};
    for (std::size_t col = 0; col < 2; ++col) {
      if (distinct[col] == static_cast<std::uint64_t>(ell)) continue;
      for (Residue v = 0; v < ell; ++v)
        if (seen[col][static_cast<std::size_t>(v)] != stamp)
          return {false, WadaWitness{c, static_cast<Color>(col), v, WadaWitness::Kind::Missing}};
    }
  }
  return {true, std::nullopt};
}

Topology signature_and_genus(const Dessin& d) {
  if (!d.is_connected()) throw Error(ErrorKind::Internal, "dessin is not connected; genus undefined");
  Topology t;
  const auto& cells = d.cells().cells;
  std::uint64_t half = 1;
  t.uniform = true;
  for (const auto& c : cells) {
    half = std::lcm(half, c.valency / 2);
    if (c.valency != cells.front().valency) t.uniform = false;
  }
  // Every vertex of either color has degree q.
  t.signature = {d.q(), d.q(), half};
  t.cell_count = cells.size();
  t.euler_characteristic = static_cast<std::int64_t>(d.vertex_count()) - static_cast<std::int64_t>(d.edge_count()) +
                           static_cast<std::int64_t>(cells.size());
  if ((2 - t.euler_characteristic) % 2 != 0 || t.euler_characteristic > 2)
    throw Error(ErrorKind::Internal, "Euler characteristic " + std::to_string(t.euler_characteristic) + " is not that of an orientable surface");
  t.genus = (2 - t.euler_characteristic) / 2;
  return t;
}

DessinReport summarize(const Dessin& d) {
  DessinReport r;
  r.ell = d.ell();
  r.q = d.q();
  const auto& cells = d.cells().cells;
  r.cells.reserve(cells.size());
  for (std::uint32_t c = 0; c < cells.size(); ++c) {
    const auto [a, b] = d.entering_pair(c);
    r.cells.push_back({cells[c].valency, a, b});
  }
  r.topology = signature_and_genus(d);
  r.wada = is_wada(d).wada;
  return r;
}

}  // namespace wada::dessin
