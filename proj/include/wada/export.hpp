#pragma once

#include <string>

#include "wada/dessin.hpp"

namespace wada::dessin {

/// Graphviz bipartite graph; one edge per incidence, labelled with its
/// position in the ordering. With color_cells each edge takes the color of
/// the cell its white dart bounds.
std::string to_dot(const Dessin& d, bool color_cells = false);

/// Schematic SVG: each cell drawn as a polygon of its boundary vertices
/// (white and black alternating), cells laid out on a grid.
std::string to_svg(const Dessin& d, std::size_t max_cells = 64);

}  // namespace wada::dessin
