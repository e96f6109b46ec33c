#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wada/dessin.hpp"
#include "wada/singer.hpp"

namespace wada::autgrp {

/// A bijection of Z/lZ applied identically to white and black indices.
class VertexMap {
 public:
  enum class Kind : std::uint8_t { Affine, Explicit };

  /// x -> t x + s; throws NotAUnit if gcd(t, l) != 1.
  static VertexMap affine(Residue t, Residue s, Residue ell);
  /// images[x] is the image of x; throws InvalidArgument unless a bijection.
  static VertexMap explicit_map(std::vector<Residue> images);

  Kind kind() const noexcept { return kind_; }
  Residue t() const noexcept { return t_; }
  Residue s() const noexcept { return s_; }
  Residue modulus() const noexcept { return static_cast<Residue>(images_.size()); }
  Residue operator()(Residue x) const { return images_[static_cast<std::size_t>(mod(x, modulus()))]; }
  const std::vector<Residue>& images() const noexcept { return images_; }
  /// this after other.
  VertexMap compose(const VertexMap& other) const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  Kind kind_ = Kind::Explicit;
  Residue t_ = 1;
  Residue s_ = 0;
  std::vector<Residue> images_;
};

struct Counterexample {
  std::uint64_t dart = 0;
  kernels::DartFailure reason = kernels::DartFailure::None;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct AutReport {
  Residue t = 1;  // affine parameters; t = 0 marks an explicit map
  Residue s = 0;
  bool is_automorphism = false;
  std::optional<Counterexample> counterexample;
  std::vector<Residue> fixed_vertices;  // residues fixed by the map (both colors)
  std::uint64_t fixed_edges = 0;
  std::vector<std::uint32_t> cell_permutation;  // image cell of each cell
  std::vector<std::uint64_t> cell_orbits;       // orbit lengths, orbits ordered by smallest cell
  friend bool operator==(const AutReport&, const AutReport&) = default;
};

/// Orientation-preserving automorphism test: edges go to edges and the map
/// commutes with the rotation (and involution) on every dart.
AutReport check_automorphism(const dessin::Dessin& d, const VertexMap& map);

struct PowerReport {
  std::uint64_t u = 0;
  Residue multiplier = 1;  // p^u mod l
  std::uint64_t fixed_edges = 0;
  std::vector<Residue> fixed_vertices;
  bool fixed_vertices_as_predicted = false;  // equals fixed_vertices(l, p^u)
  friend bool operator==(const PowerReport&, const PowerReport&) = default;
};

struct FrobeniusGroupReport {
  Residue p = 0;
  std::uint64_t f = 0;
  std::vector<PowerReport> powers;      // u = 0 .. f-1
  bool free_on_edges = false;           // no non-identity power fixes an edge
  std::vector<std::uint64_t> cell_orbits;  // of sigma: x -> p x
  std::optional<std::uint64_t> k;       // q / f when f | q
  bool orbits_match_k = false;          // exactly k orbits, each of length f
  /// m with sigma: C_c -> C_{c + m k}, cells indexed by their dart at w = 0.
  std::optional<std::uint64_t> rotation_m;
  friend bool operator==(const FrobeniusGroupReport&, const FrobeniusGroupReport&) = default;
};

/// Throws NotAnAutomorphism if x -> p x is not an automorphism of d.
FrobeniusGroupReport frobenius_group_report(const dessin::Dessin& d, Residue p, std::uint64_t f);

struct PrimeCaseVerdict {
  bool f_prime = false;
  bool p_not_m_plus_1 = false;
  bool p_not_1_mod_m_plus_1 = false;
  bool f_divides_q = false;
  bool gcd_p_minus_1_ell_is_1 = false;
  bool nice() const noexcept {
    return f_prime && p_not_m_plus_1 && p_not_1_mod_m_plus_1 && f_divides_q && gcd_p_minus_1_ell_is_1;
  }
  friend bool operator==(const PrimeCaseVerdict&, const PrimeCaseVerdict&) = default;
};

PrimeCaseVerdict check_prime_case_conditions(const singer::SpaceParams& params);

struct SubgroupVerdict {
  std::uint64_t g = 0;  // order of the subgroup
  std::uint64_t s = 0;  // generator sigma^s, s = f / g
  Residue t = 0;        // p^s mod l
  bool g_divides_q = false;
  bool gcd_t_minus_1_ell_is_1 = false;
  bool accepted = false;
  std::optional<std::uint64_t> orbit_count;  // q / g when accepted
  friend bool operator==(const SubgroupVerdict&, const SubgroupVerdict&) = default;
};

/// One verdict per divisor g of f, ascending.
std::vector<SubgroupVerdict> subgroup_feasibility(const singer::SpaceParams& params);

}  // namespace wada::autgrp
