#include "wada/export.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace wada::dessin {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string to_dot(const Dessin& d, bool color_cells) {
  std::ostringstream out;
  out << "graph dessin {\n";
  out << "  // l = " << d.ell() << ", q = " << d.q() << ", cells = " << d.cells().cells.size() << "\n";
  out << "  node [shape=circle, style=solid];\n";
  for (Residue w = 0; w < d.ell(); ++w) out << "  w" << w << " [label=\"" << w << "\"];\n";
  out << "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  for (Residue b = 0; b < d.ell(); ++b) out << "  b" << b << " [label=\"" << b << "\"];\n";
  const DartSpace& space = d.space();
  for (Residue w = 0; w < d.ell(); ++w) {
    for (std::uint32_t i = 0; i < d.q(); ++i) {
      const Residue b = mod(w + d.order()[i], d.ell());
      out << "  w" << w << " -- b" << b << " [label=\"" << i << "\"";
      if (color_cells) out << ", color=\"" << kPalette[d.cell_of(space.id(Color::White, w, i)) % std::size(kPalette)] << "\"";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const Dessin& d, std::size_t max_cells) {
  const auto& cells = d.cells().cells;
  const std::size_t shown = std::min(cells.size(), max_cells);
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(shown, 1)))));
  const std::size_t rows = (shown + cols - 1) / cols;
  constexpr double kTile = 240.0;
  constexpr double kRadius = 90.0;

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * kTile << "\" height=\"" << std::max<std::size_t>(rows, 1) * kTile
      << "\">\n";
  const DartSpace& space = d.space();
  for (std::size_t c = 0; c < shown; ++c) {
    const double cx = (static_cast<double>(c % cols) + 0.5) * kTile;
    const double cy = (static_cast<double>(c / cols) + 0.5) * kTile;
    std::vector<std::pair<Color, Residue>> boundary;
    std::uint64_t x = cells[c].first_dart;
    do {
      boundary.emplace_back(space.color(x), space.vertex(x));
      x = d.face(x);
    } while (x != cells[c].first_dart);

    const auto n = static_cast<double>(boundary.size());
    auto corner = [&](std::size_t i) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / n - std::numbers::pi / 2.0;
      return std::pair{cx + kRadius * std::cos(a), cy + kRadius * std::sin(a)};
    };
    out << "  <g id=\"cell" << c << "\">\n    <polygon fill=\"" << kPalette[c % std::size(kPalette)]
        << "\" fill-opacity=\"0.25\" stroke=\"#333\" points=\"";
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      const auto [px, py] = corner(i);
      out << (i ? " " : "") << px << "," << py;
    }
    out << "\"/>\n";
    const bool labels = boundary.size() <= 64;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      const auto [px, py] = corner(i);
      const bool white = boundary[i].first == Color::White;
      out << "    <circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"3\" fill=\"" << (white ? "white" : "black")
          << "\" stroke=\"black\"/>\n";
      if (labels)
        out << "    <text x=\"" << px + 4 << "\" y=\"" << py - 4 << "\" font-size=\"8\">" << boundary[i].second << "</text>\n";
    }
    out << "    <text x=\"" << cx << "\" y=\"" << cy << "\" font-size=\"11\" text-anchor=\"middle\">C" << c << " (" << boundary.size()
        << ")</text>\n  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wada::dessin
