#include "wada/autgrp.hpp"

#include <numeric>
#include <string>

#include "wada/diffset.hpp"
#include "wada/error.hpp"

namespace wada::autgrp {

VertexMap VertexMap::affine(Residue t, Residue s, Residue ell) {
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  if (std::gcd(mod(t, ell), ell) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(t) + " is not a unit mod " + std::to_string(ell));
  VertexMap m;
  m.kind_ = Kind::Affine;
  m.t_ = mod(t, ell);
  m.s_ = mod(s, ell);
  m.images_.resize(static_cast<std::size_t>(ell));
  for (Residue x = 0; x < ell; ++x) m.images_[static_cast<std::size_t>(x)] = mod(mul_mod(m.t_, x, ell) + m.s_, ell);
  return m;
}

VertexMap VertexMap::explicit_map(std::vector<Residue> images) {
  const auto ell = static_cast<Residue>(images.size());
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "empty vertex map");
  std::vector<std::uint8_t> hit(images.size(), 0);
  for (const Residue y : images) {
    if (y < 0 || y >= ell || hit[static_cast<std::size_t>(y)]++) throw Error(ErrorKind::InvalidArgument, "vertex map is not a bijection of Z/lZ");
  }
  VertexMap m;
  m.kind_ = Kind::Explicit;
  m.t_ = 0;
  m.s_ = 0;
  m.images_ = std::move(images);
  return m;
}

VertexMap VertexMap::compose(const VertexMap& other) const {
  if (modulus() != other.modulus()) throw Error(ErrorKind::InvalidArgument, "maps act on different moduli");
  const Residue ell = modulus();
  if (kind_ == Kind::Affine && other.kind_ == Kind::Affine)
    return affine(mul_mod(t_, other.t_, ell), mod(mul_mod(t_, other.s_, ell) + s_, ell), ell);
  std::vector<Residue> images(images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = (*this)(other.images_[x]);
  return explicit_map(std::move(images));
}

namespace {

std::vector<std::uint64_t> cycle_lengths(const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint8_t> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

}  // namespace

AutReport check_automorphism(const dessin::Dessin& d, const VertexMap& map) {
  if (map.modulus() != d.ell()) throw Error(ErrorKind::InvalidArgument, "vertex map modulus differs from l");
  AutReport report;
  report.t = map.t();
  report.s = map.s();
  for (Residue x = 0; x < d.ell(); ++x)
    if (map(x) == x) report.fixed_vertices.push_back(x);

  const auto result = kernels::omp::map_darts(d.space(), d.order(), d.position_table(), map.images());
  if (result.failure != kernels::DartFailure::None) {
    report.counterexample = Counterexample{result.failing_dart, result.failure};
    return report;
  }
  report.is_automorphism = true;
  for (std::uint64_t x = 0; x < d.edge_count(); ++x)  // white darts stand for edges
    if (result.image[x] == x) ++report.fixed_edges;

  const auto& cells = d.cells().cells;
  report.cell_permutation.resize(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) report.cell_permutation[c] = d.cell_of(result.image[cells[c].first_dart]);
  report.cell_orbits = cycle_lengths(report.cell_permutation);
  return report;
}

FrobeniusGroupReport frobenius_group_report(const dessin::Dessin& d, Residue p, std::uint64_t f) {
  if (f == 0) throw Error(ErrorKind::InvalidArgument, "group order f must be positive");
  const Residue ell = d.ell();
  const AutReport sigma = check_automorphism(d, VertexMap::affine(p, 0, ell));
  if (!sigma.is_automorphism)
    throw Error(ErrorKind::NotAnAutomorphism, "x -> " + std::to_string(p) + "x is not an automorphism of this dessin");

  FrobeniusGroupReport out;
  out.p = p;
  out.f = f;
  out.free_on_edges = true;
  for (std::uint64_t u = 0; u < f; ++u) {
    const Residue t = pow_mod(p, u, ell);
    const AutReport r = u == 1 ? sigma : check_automorphism(d, VertexMap::affine(t, 0, ell));
    if (!r.is_automorphism) throw Error(ErrorKind::Internal, "a power of an automorphism failed the check");
    PowerReport pr;
    pr.u = u;
    pr.multiplier = t;
    pr.fixed_edges = r.fixed_edges;
    pr.fixed_vertices = r.fixed_vertices;
    pr.fixed_vertices_as_predicted = r.fixed_vertices == diffset::fixed_vertices(ell, t);
    if (u > 0 && r.fixed_edges != 0) out.free_on_edges = false;
    out.powers.push_back(std::move(pr));
  }
  out.cell_orbits = sigma.cell_orbits;

  const std::uint32_t q = d.q();
  if (q % f == 0) {
    out.k = q / f;
    out.orbits_match_k = out.cell_orbits.size() == *out.k &&
                         std::all_of(out.cell_orbits.begin(), out.cell_orbits.end(), [&](std::uint64_t len) { return len == f; });
    // Fit sigma: C_c -> C_{c + m k} on the cells met at the white vertex 0.
    std::vector<std::uint32_t> around(q);
    std::vector<std::uint8_t> seen(d.cells().cells.size(), 0);
    bool distinct = true;
    for (std::uint32_t c = 0; c < q; ++c) {
      around[c] = d.cell_of(d.space().id(Color::White, 0, c));
      if (seen[around[c]]++) distinct = false;
    }
    if (distinct) {
      const std::int32_t shifted = d.position_of(mul_mod(p, d.order()[0], ell));
      const std::uint32_t delta = static_cast<std::uint32_t>(shifted);
      bool fits = delta % *out.k == 0;
      for (std::uint32_t c = 0; c < q && fits; ++c) fits = sigma.cell_permutation[around[c]] == around[(c + delta) % q];
      if (fits) out.rotation_m = delta / *out.k;
    }
  }
  return out;
}

PrimeCaseVerdict check_prime_case_conditions(const singer::SpaceParams& params) {
  PrimeCaseVerdict v;
  const std::uint64_t m1 = params.m + 1;
  v.f_prime = is_prime(params.f);
  v.p_not_m_plus_1 = params.p != m1;
  v.p_not_1_mod_m_plus_1 = params.p % m1 != 1;
  v.f_divides_q = params.q % params.f == 0;
  v.gcd_p_minus_1_ell_is_1 = std::gcd(std::uint64_t{params.p} - 1, params.ell) == 1;
  return v;
}

std::vector<SubgroupVerdict> subgroup_feasibility(const singer::SpaceParams& params) {
  const auto ell = static_cast<Residue>(params.ell);
  std::vector<SubgroupVerdict> out;
  for (const std::uint64_t g : divisors(params.f)) {
    SubgroupVerdict v;
    v.g = g;
    v.s = params.f / g;
    v.t = pow_mod(params.p, v.s, ell);
    v.g_divides_q = params.q % g == 0;
    v.gcd_t_minus_1_ell_is_1 = std::gcd(mod(v.t - 1, ell), ell) == 1;
    // The trivial subgroup has t = 1, yet its orbits are trivially of equal length.
    v.accepted = g == 1 || (v.g_divides_q && v.gcd_t_minus_1_ell_is_1);
    if (v.accepted) v.orbit_count = params.q / g;
    out.push_back(v);
  }
  return out;
}

}  // namespace wada::autgrp
