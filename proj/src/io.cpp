#include "wada/io.hpp"

#include <string>

#include "wada/error.hpp"

namespace wada::io {

namespace {

template <class F>
auto guarded(const char* what, F&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const char* failure_name(kernels::DartFailure f) {
  switch (f) {
    case kernels::DartFailure::None: return "none";
    case kernels::DartFailure::EdgeNotPreserved: return "edge_not_preserved";
    case kernels::DartFailure::RotationNotPreserved: return "rotation_not_preserved";
    case kernels::DartFailure::InvolutionNotPreserved: return "involution_not_preserved";
  }
  return "none";
}

kernels::DartFailure failure_from(const std::string& s) {
  if (s == "edge_not_preserved") return kernels::DartFailure::EdgeNotPreserved;
  if (s == "rotation_not_preserved") return kernels::DartFailure::RotationNotPreserved;
  if (s == "involution_not_preserved") return kernels::DartFailure::InvolutionNotPreserved;
  if (s == "none") return kernels::DartFailure::None;
  throw Error(ErrorKind::InvalidArgument, "unknown counterexample reason '" + s + "'");
}

template <class T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

Json to_json(const singer::SpaceParams& v) {
  return Json{{"m", v.m}, {"p", v.p}, {"e", v.e}, {"n", v.n}, {"l", v.ell}, {"q", v.q}, {"lambda", v.lambda}, {"f", v.f}};
}

template <>
singer::SpaceParams from_json(const Json& j) {
  return guarded("SpaceParams", [&] {
    singer::SpaceParams v;
    v.m = j.at("m").get<std::uint32_t>();
    v.p = j.at("p").get<std::uint32_t>();
    v.e = j.at("e").get<std::uint32_t>();
    v.n = j.at("n").get<std::uint64_t>();
    v.ell = j.at("l").get<std::uint64_t>();
    v.q = j.at("q").get<std::uint64_t>();
    v.lambda = j.at("lambda").get<std::uint64_t>();
    v.f = j.at("f").get<std::uint64_t>();
    return v;
  });
}

Json to_json(const diffset::DifferenceSet& v) {
  return Json{{"modulus", v.modulus()}, {"elements", v.elements()}, {"lambda", v.lambda()}};
}

template <>
diffset::DifferenceSet from_json(const Json& j) {
  auto [elements, v] = guarded("DifferenceSet", [&] {
    return std::pair{j.at("elements").get<std::vector<Residue>>(), j.at("modulus").get<Residue>()};
  });
  auto set = diffset::DifferenceSet::make(std::move(elements), v);
  if (j.contains("lambda") && j.at("lambda").get<std::uint64_t>() != set.lambda())
    throw Error(ErrorKind::InvalidArgument, "stated lambda does not match the verified one");
  return set;
}

Json to_json(const diffset::OrbitDecomposition& v) {
  return Json{{"modulus", v.modulus},     {"multiplier", v.multiplier},          {"orbits", v.orbits},
              {"lengths", v.lengths},     {"lengths_divide_f", v.lengths_divide_f}};
}

template <>
diffset::OrbitDecomposition from_json(const Json& j) {
  return guarded("OrbitDecomposition", [&] {
    diffset::OrbitDecomposition v;
    v.modulus = j.at("modulus").get<Residue>();
    v.multiplier = j.at("multiplier").get<Residue>();
    v.orbits = j.at("orbits").get<std::vector<std::vector<Residue>>>();
    v.lengths = j.at("lengths").get<std::vector<std::uint64_t>>();
    v.lengths_divide_f = j.at("lengths_divide_f").get<bool>();
    return v;
  });
}

Json to_json(const ordering::OrderedDifferenceSet& v) { return Json{{"modulus", v.modulus()}, {"order", v.order()}}; }

template <>
ordering::OrderedDifferenceSet from_json(const Json& j) {
  auto [order, v] = guarded("OrderedDifferenceSet", [&] {
    return std::pair{j.at("order").get<std::vector<Residue>>(), j.at("modulus").get<Residue>()};
  });
  auto base = diffset::DifferenceSet::make(order, v);
  return ordering::OrderedDifferenceSet::make(std::move(base), std::move(order));
}

Json to_json(const ordering::CompatibilityReport& v) {
  Json offending = Json::array();
  for (const auto& p : v.offending) offending.push_back(Json::array({p.first, p.second, p.gcd}));
  Json out{{"wada", v.wada}, {"offending", offending}, {"frobenius", optional_to_json(v.frobenius)}};
  if (v.blocks) out["blocks"] = Json{{"j", v.blocks->j}, {"k", v.blocks->k}, {"rotation", v.blocks->rotation}};
  else out["blocks"] = nullptr;
  return out;
}

template <>
ordering::CompatibilityReport from_json(const Json& j) {
  return guarded("CompatibilityReport", [&] {
    ordering::CompatibilityReport v;
    v.wada = j.at("wada").get<bool>();
    for (const auto& p : j.at("offending")) v.offending.push_back({p.at(0).get<Residue>(), p.at(1).get<Residue>(), p.at(2).get<Residue>()});
    v.frobenius = optional_from<bool>(j.at("frobenius"));
    const auto& b = j.at("blocks");
    if (!b.is_null()) v.blocks = ordering::FrobeniusBlocks{b.at("j").get<std::uint64_t>(), b.at("k").get<std::uint64_t>(), b.at("rotation").get<std::uint64_t>()};
    return v;
  });
}

Json to_json(const dessin::DessinReport& v) {
  Json cells = Json::array();
  for (const auto& c : v.cells) cells.push_back(Json{{"valency", c.valency}, {"entering_pair", Json::array({c.first, c.second})}});
  const auto& sig = v.topology.signature;
  return Json{{"l", v.ell},
              {"q", v.q},
              {"cells", cells},
              {"signature", Json::array({sig.white_lcm, sig.black_lcm, sig.half_face_lcm})},
              {"euler_characteristic", v.topology.euler_characteristic},
              {"genus", v.topology.genus},
              {"uniform", v.topology.uniform},
              {"wada", v.wada}};
}

template <>
dessin::DessinReport from_json(const Json& j) {
  return guarded("DessinReport", [&] {
    dessin::DessinReport v;
    v.ell = j.at("l").get<Residue>();
    v.q = j.at("q").get<std::uint64_t>();
    for (const auto& c : j.at("cells"))
      v.cells.push_back({c.at("valency").get<std::uint64_t>(), c.at("entering_pair").at(0).get<Residue>(), c.at("entering_pair").at(1).get<Residue>()});
    const auto& sig = j.at("signature");
    v.topology.signature = {sig.at(0).get<std::uint64_t>(), sig.at(1).get<std::uint64_t>(), sig.at(2).get<std::uint64_t>()};
    v.topology.euler_characteristic = j.at("euler_characteristic").get<std::int64_t>();
    v.topology.genus = j.at("genus").get<std::int64_t>();
    v.topology.uniform = j.at("uniform").get<bool>();
    v.topology.cell_count = v.cells.size();
    v.wada = j.at("wada").get<bool>();
    return v;
  });
}

Json to_json(const autgrp::AutReport& v) {
  Json out{{"map", Json{{"t", v.t}, {"s", v.s}}},
           {"valid", v.is_automorphism},
           {"fixed_vertices", v.fixed_vertices},
           {"fixed_edges", v.fixed_edges},
           {"cell_orbits", v.cell_orbits},
           {"cell_permutation", v.cell_permutation}};
  if (v.counterexample) out["counterexample"] = Json{{"dart", v.counterexample->dart}, {"reason", failure_name(v.counterexample->reason)}};
  else out["counterexample"] = nullptr;
  return out;
}

template <>
autgrp::AutReport from_json(const Json& j) {
  return guarded("AutReport", [&] {
    autgrp::AutReport v;
    v.t = j.at("map").at("t").get<Residue>();
    v.s = j.at("map").at("s").get<Residue>();
    v.is_automorphism = j.at("valid").get<bool>();
    v.fixed_vertices = j.at("fixed_vertices").get<std::vector<Residue>>();
    v.fixed_edges = j.at("fixed_edges").get<std::uint64_t>();
    v.cell_orbits = j.at("cell_orbits").get<std::vector<std::uint64_t>>();
    v.cell_permutation = j.at("cell_permutation").get<std::vector<std::uint32_t>>();
    const auto& c = j.at("counterexample");
    if (!c.is_null()) v.counterexample = autgrp::Counterexample{c.at("dart").get<std::uint64_t>(), failure_from(c.at("reason").get<std::string>())};
    return v;
  });
}

Json to_json(const autgrp::FrobeniusGroupReport& v) {
  Json powers = Json::array();
  for (const auto& p : v.powers)
    powers.push_back(Json{{"u", p.u},
                          {"multiplier", p.multiplier},
                          {"fixed_edges", p.fixed_edges},
                          {"fixed_vertices", p.fixed_vertices},
                          {"fixed_vertices_as_predicted", p.fixed_vertices_as_predicted}});
  return Json{{"p", v.p},
              {"f", v.f},
              {"powers", powers},
              {"free_on_edges", v.free_on_edges},
              {"cell_orbits", v.cell_orbits},
              {"k", optional_to_json(v.k)},
              {"orbits_match_k", v.orbits_match_k},
              {"rotation_m", optional_to_json(v.rotation_m)}};
}

template <>
autgrp::FrobeniusGroupReport from_json(const Json& j) {
  return guarded("FrobeniusGroupReport", [&] {
    autgrp::FrobeniusGroupReport v;
    v.p = j.at("p").get<Residue>();
    v.f = j.at("f").get<std::uint64_t>();
    for (const auto& p : j.at("powers"))
      v.powers.push_back({p.at("u").get<std::uint64_t>(), p.at("multiplier").get<Residue>(), p.at("fixed_edges").get<std::uint64_t>(),
                          p.at("fixed_vertices").get<std::vector<Residue>>(), p.at("fixed_vertices_as_predicted").get<bool>()});
    v.free_on_edges = j.at("free_on_edges").get<bool>();
    v.cell_orbits = j.at("cell_orbits").get<std::vector<std::uint64_t>>();
    v.k = optional_from<std::uint64_t>(j.at("k"));
    v.orbits_match_k = j.at("orbits_match_k").get<bool>();
    v.rotation_m = optional_from<std::uint64_t>(j.at("rotation_m"));
    return v;
  });
}

Json to_json(const autgrp::PrimeCaseVerdict& v) {
  return Json{{"f_prime", v.f_prime},
              {"p_not_m_plus_1", v.p_not_m_plus_1},
              {"p_not_1_mod_m_plus_1", v.p_not_1_mod_m_plus_1},
              {"f_divides_q", v.f_divides_q},
              {"gcd_p_minus_1_l_is_1", v.gcd_p_minus_1_ell_is_1},
              {"nice", v.nice()}};
}

template <>
autgrp::PrimeCaseVerdict from_json(const Json& j) {
  return guarded("PrimeCaseVerdict", [&] {
    autgrp::PrimeCaseVerdict v;
    v.f_prime = j.at("f_prime").get<bool>();
    v.p_not_m_plus_1 = j.at("p_not_m_plus_1").get<bool>();
    v.p_not_1_mod_m_plus_1 = j.at("p_not_1_mod_m_plus_1").get<bool>();
    v.f_divides_q = j.at("f_divides_q").get<bool>();
    v.gcd_p_minus_1_ell_is_1 = j.at("gcd_p_minus_1_l_is_1").get<bool>();
    return v;
  });
}

Json to_json(const autgrp::SubgroupVerdict& v) {
  return Json{{"g", v.g},
              {"s", v.s},
              {"t", v.t},
              {"g_divides_q", v.g_divides_q},
              {"gcd_t_minus_1_l_is_1", v.gcd_t_minus_1_ell_is_1},
              {"accepted", v.accepted},
              {"orbit_count", optional_to_json(v.orbit_count)}};
}

template <>
autgrp::SubgroupVerdict from_json(const Json& j) {
  return guarded("SubgroupVerdict", [&] {
    autgrp::SubgroupVerdict v;
    v.g = j.at("g").get<std::uint64_t>();
    v.s = j.at("s").get<std::uint64_t>();
    v.t = j.at("t").get<Residue>();
    v.g_divides_q = j.at("g_divides_q").get<bool>();
    v.gcd_t_minus_1_ell_is_1 = j.at("gcd_t_minus_1_l_is_1").get<bool>();
    v.accepted = j.at("accepted").get<bool>();
    v.orbit_count = optional_from<std::uint64_t>(j.at("orbit_count"));
    return v;
  });
}

}  // namespace wada::io
