#pragma once

#include <cstdint>
#include <span>

#include "wada/numeric.hpp"

namespace wada {

enum class Color : std::uint8_t { White = 0, Black = 1 };

/// Darts of the bipartite map of an ordered (l, q, lambda) difference set.
///
/// A dart is (color, vertex, position). The white dart (w, i) is the edge
/// w -- w + d_i seen from w; the black dart (b, j) is the edge b - d_j -- b
/// seen from b. Ids are ((color * l + vertex) * q + position), so all white
/// darts precede all black darts.
///
/// `rotate` is the anticlockwise successor around a vertex. Around a black
/// vertex the white neighbours follow the ordering (j -> j + 1); around a
/// white vertex the black neighbours run against it (i -> i - 1), i.e. the
/// ordering appears clockwise there. With face = rotate o involution, the
/// face successor of the white dart (w, i) is the black dart (w + d_i, i + 1),
/// which walks the cell boundary w, w + d_i, w + d_i - d_{i+1}, ...
struct DartSpace {
  Residue ell = 0;
  std::uint32_t q = 0;

  constexpr std::uint64_t count() const noexcept { return 2 * static_cast<std::uint64_t>(ell) * q; }
  constexpr std::uint64_t edges() const noexcept { return static_cast<std::uint64_t>(ell) * q; }

  constexpr std::uint64_t id(Color c, Residue vertex, std::uint32_t pos) const noexcept {
    return (static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(ell) + static_cast<std::uint64_t>(vertex)) * q + pos;
  }
  constexpr Color color(std::uint64_t dart) const noexcept { return dart < edges() ? Color::White : Color::Black; }
  constexpr Residue vertex(std::uint64_t dart) const noexcept {
    return static_cast<Residue>((dart / q) % static_cast<std::uint64_t>(ell));
  }
  constexpr std::uint32_t position(std::uint64_t dart) const noexcept { return static_cast<std::uint32_t>(dart % q); }

  constexpr std::uint64_t rotate(std::uint64_t dart) const noexcept {
    const std::uint32_t pos = position(dart);
    const std::uint64_t base = dart - pos;
    if (color(dart) == Color::White) return base + (pos == 0 ? q - 1 : pos - 1);
    return base + (pos + 1 == q ? 0 : pos + 1);
  }
  constexpr std::uint64_t rotate_inverse(std::uint64_t dart) const noexcept {
    const std::uint32_t pos = position(dart);
    const std::uint64_t base = dart - pos;
    if (color(dart) == Color::Black) return base + (pos == 0 ? q - 1 : pos - 1);
    return base + (pos + 1 == q ? 0 : pos + 1);
  }
  /// Other end of the same edge; `order` is the cyclic ordering d_0 .. d_{q-1}.
  constexpr std::uint64_t involution(std::uint64_t dart, std::span<const Residue> order) const noexcept {
    const std::uint32_t pos = position(dart);
    const Residue v = vertex(dart);
    if (color(dart) == Color::White) return id(Color::Black, mod(v + order[pos], ell), pos);
    return id(Color::White, mod(v - order[pos], ell), pos);
  }
  constexpr std::uint64_t face(std::uint64_t dart, std::span<const Residue> order) const noexcept {
    return rotate(involution(dart, order));
  }
};

}  // namespace wada
