#include "wada/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wada/autgrp.hpp"
#include "wada/error.hpp"
#include "wada/export.hpp"
#include "wada/io.hpp"
#include "wada/reference_sets.hpp"

namespace wada::cli {

namespace {

constexpr const char* kVersion = "wada 1.0.0";

using io::Json;

struct Common {
  bool json = false;
  bool force_large = false;
  std::uint64_t budget = 10'000'000;
  std::uint64_t max_field = std::uint64_t{1} << 26;
};

struct SourceArgs {
  std::uint32_t m = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::string set_file;
  std::string order_file;
  bool frobenius = false;
  bool has_space() const { return m != 0 || p != 0; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExhausted: return kBudget;
    case ErrorKind::SizeGuard: return kSizeGuard;
    case ErrorKind::Internal: return kInternal;
    default: return kUsage;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <class Range>
std::string join(const Range& r, const char* sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& x : r) {
    s << (first ? "" : sep) << x;
    first = false;
  }
  return s.str();
}

std::string space_name(const singer::SpaceParams& sp) {
  return "P^" + std::to_string(sp.m) + "(F_" + std::to_string(sp.n) + ")";
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::string& text) {
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "# " << kVersion << "\n" << text;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("cannot parse " + path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

singer::SpaceParams require_space(const SourceArgs& a) {
  if (a.m == 0 || a.p == 0) throw UsageError("both -m and -p are required");
  return singer::space_params(a.m, a.p, a.e);
}

diffset::DifferenceSet generate(const singer::SpaceParams& sp, const Common& c) {
  singer::SingerOptions opts;
  opts.field.max_elements = c.max_field;
  return singer::generate_singer_set(sp, opts);
}

struct ResolvedOrdering {
  ordering::OrderedDifferenceSet ordered;
  std::optional<singer::SpaceParams> params;
  std::string how;
};

ordering::OrderedDifferenceSet ascending(const diffset::DifferenceSet& d) {
  return ordering::OrderedDifferenceSet::make(d, d.elements());
}

ResolvedOrdering resolve_ordering(const SourceArgs& a, const Common& c) {
  if (!a.order_file.empty()) {
    return {io::from_json<ordering::OrderedDifferenceSet>(read_json_file(a.order_file)), std::nullopt, "from " + a.order_file};
  }
  if (!a.set_file.empty()) {
    const auto d = io::from_json<diffset::DifferenceSet>(read_json_file(a.set_file));
    auto found = ordering::find_compatible_ordering(d, 1, 1, {false, c.budget});
    if (found.ordering) return {*found.ordering, std::nullopt, "Wada search"};
    return {ascending(d), std::nullopt, "ascending (no Wada ordering exists)"};
  }
  const auto sp = require_space(a);
  const auto d = generate(sp, c);
  const bool frob = a.frobenius || autgrp::check_prime_case_conditions(sp).nice();
  if (frob) {
    auto found = ordering::find_compatible_ordering(d, sp.p, sp.f, {true, c.budget});
    if (found.ordering) return {*found.ordering, sp, "Frobenius and Wada search"};
    if (a.frobenius) throw UsageError("no Frobenius and Wada compatible ordering exists for this set");
  }
  auto found = ordering::find_compatible_ordering(d, sp.p, sp.f, {false, c.budget});
  if (found.ordering) return {*found.ordering, sp, "Wada search"};
  return {ascending(d), sp, "ascending (no Wada ordering exists)"};
}

// ---------------------------------------------------------------- space

int cmd_space(const SourceArgs& a, const Common& c, std::ostream& out) {
  const auto sp = require_space(a);
  const auto v = autgrp::check_prime_case_conditions(sp);
  const auto subgroups = autgrp::subgroup_feasibility(sp);
  Json j{{"params", io::to_json(sp)}, {"prime_case", io::to_json(v)}, {"subgroups", Json::array()}};
  std::ostringstream t;
  t << space_name(sp) << "  n=" << sp.n << " l=" << sp.ell << " q=" << sp.q << " lambda=" << sp.lambda << " f=" << sp.f << "\n";
  t << "conditions: f prime: " << yes_no(v.f_prime) << ", p != m+1: " << yes_no(v.p_not_m_plus_1)
    << ", p != 1 mod (m+1): " << yes_no(v.p_not_1_mod_m_plus_1) << ", f | q: " << yes_no(v.f_divides_q)
    << ", gcd(p-1, l) = 1: " << yes_no(v.gcd_p_minus_1_ell_is_1) << "\n";
  t << "nice-case: " << yes_no(v.nice()) << "\n";
  for (const auto& s : subgroups) {
    j["subgroups"].push_back(io::to_json(s));
    t << "subgroup g=" << s.g << " (sigma^" << s.s << ", t=" << s.t << "): g | q " << yes_no(s.g_divides_q) << ", gcd(t-1, l) = 1 "
      << yes_no(s.gcd_t_minus_1_ell_is_1) << " -> " << (s.accepted ? "accepted" : "rejected");
    if (s.orbit_count) t << " (" << *s.orbit_count << " orbits of length " << s.g << ")";
    t << "\n";
  }
  emit(out, c, j, t.str());
  return kOk;
}

// ---------------------------------------------------------------- diffset

int cmd_diffset(const SourceArgs& a, bool orbits, bool shifts, const Common& c, std::ostream& out) {
  const auto sp = require_space(a);
  const auto d = generate(sp, c);
  Json j{{"params", io::to_json(sp)}, {"set", io::to_json(d)}};
  std::ostringstream t;
  t << space_name(sp) << " Singer difference set (" << d.modulus() << ", " << d.size() << ", " << d.lambda() << "):\n";
  t << "  {" << join(d.elements(), ", ") << "}\n";
  if (orbits) {
    const auto o = diffset::frobenius_orbits(d, sp.p, sp.f);
    j["orbits"] = io::to_json(o);
    t << "orbits under x -> " << sp.p << "x (lengths " << join(o.lengths, ",") << "):\n";
    for (const auto& orbit : o.orbits) t << "  {" << join(orbit, ", ") << "}\n";
  }
  if (shifts) {
    const auto family = diffset::frobenius_shift_family(d, sp.p, sp.f);
    j["shift_family"] = Json::array();
    t << "shift family (" << family.size() << " Frobenius-fixed shifts):\n";
    for (const auto& s : family) {
      j["shift_family"].push_back(io::to_json(s));
      t << "  {" << join(s.elements(), ", ") << "}\n";
    }
  }
  emit(out, c, j, t.str());
  return kOk;
}

// ---------------------------------------------------------------- order

std::string describe(const ordering::CompatibilityReport& r) {
  std::ostringstream t;
  t << "wada compatible: " << yes_no(r.wada) << "\n";
  for (const auto& p : r.offending) t << "  offending pair (" << p.first << ", " << p.second << ") gcd " << p.gcd << "\n";
  if (r.frobenius) {
    t << "frobenius compatible: " << yes_no(*r.frobenius);
    if (r.blocks) t << " (j=" << r.blocks->j << ", k=" << r.blocks->k << ", rotation " << r.blocks->rotation << ")";
    t << "\n";
  }
  return t.str();
}

int cmd_order(const SourceArgs& a, const Common& c, std::ostream& out) {
  const auto sp = require_space(a);
  const auto d = generate(sp, c);
  const auto found = ordering::find_compatible_ordering(d, sp.p, sp.f, {a.frobenius, c.budget});
  Json j{{"params", io::to_json(sp)}, {"nodes", found.nodes}};
  std::ostringstream t;
  t << space_name(sp) << ": " << (a.frobenius ? "Frobenius and Wada" : "Wada") << " search, " << found.nodes << " nodes\n";
  if (!found.ordering) {
    j["ordering"] = nullptr;
    t << "NOT-FOUND (search space exhausted)\n";
  } else {
    const auto report = a.frobenius ? ordering::is_frobenius_compatible(*found.ordering, sp.p, sp.f)
                                    : ordering::is_wada_compatible(*found.ordering);
    j["ordering"] = io::to_json(*found.ordering);
    j["report"] = io::to_json(report);
    t << "ordering: " << join(found.ordering->order()) << "\n" << describe(report);
  }
  emit(out, c, j, t.str());
  return kOk;
}

// ---------------------------------------------------------------- dessin

int cmd_dessin(const SourceArgs& a, const std::string& dot, const std::string& svg, const Common& c, std::ostream& out) {
  const auto resolved = resolve_ordering(a, c);
  const auto d = dessin::Dessin::build(resolved.ordered, {dessin::DessinOptions{}.max_edges, c.force_large});
  const auto report = dessin::summarize(d);
  if (!dot.empty()) write_file(dot, dessin::to_dot(d, true));
  if (!svg.empty()) write_file(svg, dessin::to_svg(d));

  Json j = io::to_json(report);
  j["ordering"] = io::to_json(resolved.ordered);
  std::ostringstream t;
  if (resolved.params) t << space_name(*resolved.params) << ", ";
  t << "ordering by " << resolved.how << ":\n  " << join(resolved.ordered.order()) << "\n";
  const auto& topo = report.topology;
  t << "vertices=" << d.vertex_count() << " edges=" << d.edge_count() << " cells=" << topo.cell_count << "\n";
  t << "signature: (" << topo.signature.white_lcm << ", " << topo.signature.black_lcm << ", " << topo.signature.half_face_lcm
    << ")  uniform: " << yes_no(topo.uniform) << "\n";
  t << "euler characteristic: " << topo.euler_characteristic << "  genus: " << topo.genus << "\n";
  t << "wada: " << yes_no(report.wada) << "\n";
  std::map<std::uint64_t, std::uint64_t> valencies;
  for (const auto& cell : report.cells) ++valencies[cell.valency];
  t << "cell valencies:";
  for (const auto& [val, count] : valencies) t << " " << val << "x" << count;
  t << "\n";
  emit(out, c, j, t.str());
  return kOk;
}

// ---------------------------------------------------------------- aut

std::string describe(const autgrp::AutReport& r) {
  std::ostringstream t;
  t << "map x -> " << r.t << "x + " << r.s << ": " << (r.is_automorphism ? "automorphism" : "NOT an automorphism") << "\n";
  if (r.counterexample) t << "  counterexample dart " << r.counterexample->dart << "\n";
  if (r.is_automorphism) {
    t << "  fixed vertices: {" << join(r.fixed_vertices, ", ") << "}  fixed edges: " << r.fixed_edges << "\n";
    t << "  cell orbit lengths: " << join(r.cell_orbits) << "\n";
  }
  return t.str();
}

int cmd_aut(const SourceArgs& a, const std::string& map, bool group, std::uint64_t group_order, const Common& c, std::ostream& out) {
  if (map.empty() && !group) throw UsageError("aut needs --map t,s and/or --group");
  const auto resolved = resolve_ordering(a, c);
  const auto d = dessin::Dessin::build(resolved.ordered, {dessin::DessinOptions{}.max_edges, c.force_large});
  Json j{{"ordering", io::to_json(resolved.ordered)}};
  std::ostringstream t;
  t << "ordering: " << join(resolved.ordered.order()) << "\n";
  if (!map.empty()) {
    const auto comma = map.find(',');
    if (comma == std::string::npos) throw UsageError("--map expects t,s");
    Residue tt = 0, ss = 0;
    try {
      tt = std::stoll(map.substr(0, comma));
      ss = std::stoll(map.substr(comma + 1));
    } catch (const std::exception&) {
      throw UsageError("--map expects two integers t,s");
    }
    const auto r = autgrp::check_automorphism(d, autgrp::VertexMap::affine(tt, ss, d.ell()));
    j["map_report"] = io::to_json(r);
    t << describe(r);
  }
  if (group) {
    if (a.p == 0) throw UsageError("--group needs the prime -p");
    std::uint64_t f = group_order;
    if (f == 0) f = resolved.params ? resolved.params->f : multiplicative_order(a.p, d.ell());
    const auto g = autgrp::frobenius_group_report(d, a.p, f);
    j["group"] = io::to_json(g);
    t << "Frobenius group of order " << g.f << " generated by x -> " << g.p << "x\n";
    for (const auto& pw : g.powers)
      t << "  u=" << pw.u << " (x -> " << pw.multiplier << "x): fixed edges " << pw.fixed_edges << ", fixed vertices {"
        << join(pw.fixed_vertices, ", ") << "}\n";
    t << "free on edges: " << yes_no(g.free_on_edges) << "\n";
    t << "cell orbits: " << join(g.cell_orbits) << "\n";
    if (g.k) t << "k = q/f = " << *g.k << ", orbits match: " << yes_no(g.orbits_match_k) << "\n";
    if (g.rotation_m) t << "cell rotation C_c -> C_{c + " << *g.rotation_m << "k}\n";
  }
  emit(out, c, j, t.str());
  return kOk;
}

// ---------------------------------------------------------------- reproduce

enum class Status { Pass, Fail, Skipped, Inconclusive };

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIP";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

struct Fixture {
  std::string name;
  std::function<Outcome()> run;
};

Outcome expect(bool ok, std::string detail) { return {ok ? Status::Pass : Status::Fail, std::move(detail)}; }

template <std::size_t N>
diffset::DifferenceSet set_of(const std::array<Residue, N>& a, Residue v) {
  return diffset::DifferenceSet::make(std::vector<Residue>(a.begin(), a.end()), v);
}

template <std::size_t N>
ordering::OrderedDifferenceSet ordered_of(const std::array<Residue, N>& a, Residue v) {
  return ordering::OrderedDifferenceSet::make(set_of(a, v), std::vector<Residue>(a.begin(), a.end()));
}

std::vector<std::vector<Residue>> normalized(std::vector<std::vector<Residue>> orbits) {
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

std::vector<Fixture> example_fixtures(const Common& c) {
  using namespace wada::reference;
  std::vector<Fixture> fx;
  fx.push_back({"space P^4(F_2) -> l=31 q=15 f=5", [] {
                  const auto sp = singer::space_params(4, 2);
                  return expect(sp.ell == 31 && sp.q == 15 && sp.f == 5, "l=" + std::to_string(sp.ell));
                }});
  fx.push_back({"space P^3(F_3) -> l=40 q=13 f=4", [] {
                  const auto sp = singer::space_params(3, 3);
                  return expect(sp.ell == 40 && sp.q == 13 && sp.f == 4, "l=" + std::to_string(sp.ell));
                }});
  fx.push_back({"space P^2(F_5) -> l=31 q=6 f=3", [] {
                  const auto sp = singer::space_params(2, 5);
                  return expect(sp.ell == 31 && sp.q == 6 && sp.f == 3, "l=" + std::to_string(sp.ell));
                }});
  fx.push_back({"D5 mod 31 is a (31,15,7) difference set", [] {
                  const auto d = set_of(kP4F2Ordered, 31);
                  return expect(d.lambda() == 7, "lambda=" + std::to_string(d.lambda()));
                }});
  fx.push_back({"D4 mod 40 is a (40,13,4) difference set", [] {
                  const auto d = set_of(kP3F3, 40);
                  return expect(d.lambda() == 4, "lambda=" + std::to_string(d.lambda()));
                }});
  fx.push_back({"D5 mod 121 is a (121,40,13) difference set", [] {
                  const auto d = set_of(kP4F3Ordered, 121);
                  return expect(d.lambda() == 13, "lambda=" + std::to_string(d.lambda()));
                }});
  fx.push_back({"D5 - 1 mod 31 equals the listed shifted set", [] {
                  return expect(diffset::transform(set_of(kP4F2Ordered, 31), 1, -1) == set_of(kP4F2Shifted, 31), "");
                }});
  fx.push_back({"D4 + 20 mod 40 equals the listed shift", [] {
                  return expect(diffset::transform(set_of(kP3F3, 40), 1, 20) == set_of(kP3F3Plus20, 40), "");
                }});
  fx.push_back({"generated P^4(F_2) set is equivalent to D5", [c] {
                  const auto w = diffset::equivalent(generate(singer::space_params(4, 2), c), set_of(kP4F2Ordered, 31));
                  return expect(w.has_value(), w ? "t=" + std::to_string(w->t) + " s=" + std::to_string(w->s) : "no witness");
                }});
  fx.push_back({"generated P^3(F_3) set is equivalent to D4", [c] {
                  const auto w = diffset::equivalent(generate(singer::space_params(3, 3), c), set_of(kP3F3, 40));
                  return expect(w.has_value(), w ? "t=" + std::to_string(w->t) + " s=" + std::to_string(w->s) : "no witness");
                }});
  fx.push_back({"generated P^4(F_3) set is equivalent to D5 mod 121", [c] {
                  const auto w = diffset::equivalent(generate(singer::space_params(4, 3), c), set_of(kP4F3Ordered, 121));
                  return expect(w.has_value(), w ? "t=" + std::to_string(w->t) + " s=" + std::to_string(w->s) : "no witness");
                }});
  fx.push_back({"D5 orbits under x -> 2x: three of length 5", [] {
                  const auto o = diffset::frobenius_orbits(set_of(kP4F2Ordered, 31), 2, 5);
                  const std::vector<std::vector<Residue>> want = {{1, 2, 4, 8, 16}, {3, 6, 12, 24, 17}, {15, 30, 29, 27, 23}};
                  return expect(normalized(o.orbits) == normalized(want), "lengths " + join(o.lengths, ","));
                }});
  fx.push_back({"D4 orbits under x -> 3x: lengths 4,4,2,2,1", [] {
                  const auto o = diffset::frobenius_orbits(set_of(kP3F3, 40), 3, 4);
                  const std::vector<std::vector<Residue>> want = {{21, 23, 29, 7}, {22, 26, 34, 38}, {25, 35}, {5, 15}, {0}};
                  return expect(normalized(o.orbits) == normalized(want), "lengths " + join(o.lengths, ","));
                }});
  fx.push_back({"D5 - 1 is not fixed by x -> 2x", [] {
                  try {
                    diffset::frobenius_orbits(set_of(kP4F2Shifted, 31), 2, 5);
                  } catch (const NotFrobeniusFixed& e) {
                    return expect(true, "offending element " + std::to_string(e.element()));
                  }
                  return expect(false, "set was accepted as fixed");
                }});
  fx.push_back({"fixed vertices (31, 2) = {0}", [] {
                  return expect(diffset::fixed_vertices(31, 2) == std::vector<Residue>{0}, "");
                }});
  fx.push_back({"fixed vertices (40, 3) = {0, 20}", [] {
                  return expect(diffset::fixed_vertices(40, 3) == std::vector<Residue>{0, 20}, "");
                }});
  fx.push_back({"shift family of D5 is {D5}", [] {
                  const auto fam = diffset::frobenius_shift_family(set_of(kP4F2Ordered, 31), 2, 5);
                  return expect(fam.size() == 1 && fam[0] == set_of(kP4F2Ordered, 31), std::to_string(fam.size()) + " sets");
                }});
  fx.push_back({"shift family of D4 is {D4, D4 + 20}", [] {
                  const auto fam = diffset::frobenius_shift_family(set_of(kP3F3, 40), 3, 4);
                  return expect(fam.size() == 2 && fam[0] == set_of(kP3F3, 40) && fam[1] == set_of(kP3F3Plus20, 40),
                                std::to_string(fam.size()) + " sets");
                }});
  fx.push_back({"D5 ordering is Wada compatible", [] {
                  return expect(ordering::is_wada_compatible(ordered_of(kP4F2Ordered, 31)).wada, "");
                }});
  fx.push_back({"D5 mod 121 ordering is Wada and Frobenius compatible", [] {
                  const auto r = ordering::is_frobenius_compatible(ordered_of(kP4F3Ordered, 121), 3, 5);
                  return expect(r.wada && r.frobenius.value_or(false), r.blocks ? "j=" + std::to_string(r.blocks->j) : "");
                }});
  fx.push_back({"D5 ordering is Frobenius compatible with j=1, k=3", [] {
                  const auto r = ordering::is_frobenius_compatible(ordered_of(kP4F2Ordered, 31), 2, 5);
                  return expect(r.frobenius.value_or(false) && r.blocks && r.blocks->j == 1 && r.blocks->k == 3, "");
                }});
  fx.push_back({"sorted D5 ordering is not Frobenius compatible", [] {
                  const auto r = ordering::is_frobenius_compatible(ordered_of(kP4F2Sorted, 31), 2, 5);
                  return expect(!r.frobenius.value_or(true), "");
                }});
  fx.push_back({"dessin of D5: 15 cells of valency 62, signature (15,15,31), genus 195, Wada", [] {
                  const auto d = dessin::Dessin::build(ordered_of(kP4F2Ordered, 31));
                  const auto r = dessin::summarize(d);
                  const bool cells_ok = std::all_of(r.cells.begin(), r.cells.end(), [](const auto& x) { return x.valency == 62; });
                  const auto& t = r.topology;
                  return expect(d.vertex_count() == 62 && d.edge_count() == 465 && r.cells.size() == 15 && cells_ok &&
                                    t.signature == dessin::SignatureTriple{15, 15, 31} && t.euler_characteristic == -388 && t.genus == 195 &&
                                    r.wada,
                                "chi=" + std::to_string(t.euler_characteristic) + " g=" + std::to_string(t.genus));
                }});
  fx.push_back({"x -> 2x is an automorphism of D but not of D' or D''", [] {
                  const auto a = autgrp::check_automorphism(dessin::Dessin::build(ordered_of(kP4F2Ordered, 31)), autgrp::VertexMap::affine(2, 0, 31));
                  const auto b = autgrp::check_automorphism(dessin::Dessin::build(ordered_of(kP4F2Shifted, 31)), autgrp::VertexMap::affine(2, 0, 31));
                  const auto s = autgrp::check_automorphism(dessin::Dessin::build(ordered_of(kP4F2Sorted, 31)), autgrp::VertexMap::affine(2, 0, 31));
                  return expect(a.is_automorphism && !b.is_automorphism && !s.is_automorphism, "");
                }});
  fx.push_back({"x -> x + 1 is a fixed-point-free automorphism of D, D', D''", [] {
                  bool ok = true;
                  for (const auto& o : {ordered_of(kP4F2Ordered, 31), ordered_of(kP4F2Shifted, 31), ordered_of(kP4F2Sorted, 31)}) {
                    const auto r = autgrp::check_automorphism(dessin::Dessin::build(o), autgrp::VertexMap::affine(1, 1, 31));
                    ok = ok && r.is_automorphism && r.fixed_vertices.empty();
                  }
                  return expect(ok, "");
                }});
  fx.push_back({"Frobenius group on D: free on edges, cells in three 5-cycles, fixes only 0", [] {
                  const auto g = autgrp::frobenius_group_report(dessin::Dessin::build(ordered_of(kP4F2Ordered, 31)), 2, 5);
                  bool only_zero = true;
                  for (const auto& pw : g.powers)
                    if (pw.u > 0) only_zero = only_zero && pw.fixed_vertices == std::vector<Residue>{0};
                  return expect(g.free_on_edges && g.cell_orbits == std::vector<std::uint64_t>{5, 5, 5} && only_zero && g.rotation_m,
                                "cell orbits " + join(g.cell_orbits, ","));
                }});
  fx.push_back({"prime-case conditions hold for P^4(F_2) and P^2(F_5)", [] {
                  return expect(autgrp::check_prime_case_conditions(singer::space_params(4, 2)).nice() &&
                                    autgrp::check_prime_case_conditions(singer::space_params(2, 5)).nice(),
                                "");
                }});
  fx.push_back({"P^4(F_4): Phi_10 rejected, Phi_5 accepted with 17 orbits", [] {
                  const auto v = autgrp::subgroup_feasibility(singer::space_params(4, 2, 2));
                  const auto find = [&](std::uint64_t g) { return *std::find_if(v.begin(), v.end(), [&](const auto& x) { return x.g == g; }); };
                  const auto g10 = find(10), g5 = find(5);
                  return expect(!g10.accepted && g5.accepted && g5.t == 4 && g5.orbit_count == 17u, "");
                }});
  fx.push_back({"P^6(F_4): Phi_7 accepted with 195 orbits", [] {
                  const auto v = autgrp::subgroup_feasibility(singer::space_params(6, 2, 2));
                  const auto g7 = *std::find_if(v.begin(), v.end(), [](const auto& x) { return x.g == 7; });
                  return expect(g7.accepted && g7.t == 4 && g7.orbit_count == 195u, "");
                }});
  fx.push_back({"Frobenius and Wada search succeeds for P^4(F_2) and P^4(F_3)", [c] {
                  std::string detail;
                  bool ok = true;
                  for (const auto& [m, p] : {std::pair{4u, 2u}, std::pair{4u, 3u}}) {
                    const auto sp = singer::space_params(m, p);
                    const auto found = ordering::find_compatible_ordering(generate(sp, c), sp.p, sp.f, {true, c.budget});
                    ok = ok && found.ordering.has_value();
                    detail += space_name(sp) + ": " + std::to_string(found.nodes) + " nodes; ";
                  }
                  return expect(ok, detail);
                }});
  return fx;
}

std::vector<Fixture> table_fixtures(const Common& c) {
  std::vector<Fixture> fx;
  for (const auto& row : reference::kPrimeCaseTable) {
    const std::string name = "P^" + std::to_string(row.m) + "(F_" + std::to_string(row.p) + ")";
    fx.push_back({name + " parameters and prime-case conditions", [row] {
                    const auto sp = singer::space_params(row.m, row.p);
                    return expect(sp.q == row.q && sp.ell == row.ell && sp.f == row.f && autgrp::check_prime_case_conditions(sp).nice(),
                                  "q=" + std::to_string(sp.q) + " l=" + std::to_string(sp.ell) + " f=" + std::to_string(sp.f));
                  }});
    fx.push_back({name + " Frobenius and Wada dessin", [row, c]() -> Outcome {
                    const auto sp = singer::space_params(row.m, row.p);
                    const auto d = generate(sp, c);
                    ordering::SearchResult found;
                    try {
                      found = ordering::find_compatible_ordering(d, sp.p, sp.f, {true, c.budget});
                    } catch (const BudgetExhausted& e) {
                      return {Status::Inconclusive, "ordering search exhausted its budget of " + std::to_string(c.budget) + " nodes"};
                    }
                    if (!found.ordering) return {Status::Fail, "no Frobenius and Wada compatible ordering exists"};
                    const std::string searched = "ordering found after " + std::to_string(found.nodes) + " nodes";
                    if (sp.ell * sp.q > dessin::DessinOptions{}.max_edges && !c.force_large)
                      return {Status::Skipped, searched + "; dessin above the size guard (use --force-large)"};
                    const auto dess = dessin::Dessin::build(*found.ordering, {dessin::DessinOptions{}.max_edges, c.force_large});
                    const auto r = dessin::summarize(dess);
                    const auto g = autgrp::frobenius_group_report(dess, sp.p, sp.f);
                    const auto& t = r.topology;
                    const bool ok = r.wada && t.signature == dessin::SignatureTriple{sp.q, sp.q, sp.ell} && t.cell_count == sp.q &&
                                    t.euler_characteristic == static_cast<std::int64_t>(2 * sp.ell + sp.q) - static_cast<std::int64_t>(sp.q * sp.ell) &&
                                    g.free_on_edges && g.orbits_match_k;
                    return expect(ok, searched + "; genus " + std::to_string(t.genus) + ", " + std::to_string(g.cell_orbits.size()) +
                                          " cell orbits of length " + std::to_string(sp.f));
                  }});
  }
  return fx;
}

int cmd_reproduce(bool examples, bool table2, const Common& c, std::ostream& out) {
  if (!examples && !table2) throw UsageError("reproduce needs --examples and/or --table2");
  std::vector<Fixture> fixtures;
  if (examples) fixtures = example_fixtures(c);
  if (table2) {
    auto t = table_fixtures(c);
    fixtures.insert(fixtures.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  Json j{{"fixtures", Json::array()}};
  std::ostringstream text;
  std::size_t failed = 0;
  for (const auto& f : fixtures) {
    Outcome o;
    try {
      o = f.run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("error: ") + e.what()};
    }
    if (o.status == Status::Fail) ++failed;
    j["fixtures"].push_back(Json{{"name", f.name}, {"status", status_name(o.status)}, {"detail", o.detail}});
    text << std::left << std::setw(13) << status_name(o.status) << f.name;
    if (!o.detail.empty()) text << "  [" << o.detail << "]";
    text << "\n";
  }
  j["total"] = fixtures.size();
  j["failed"] = failed;
  text << fixtures.size() - failed << "/" << fixtures.size() << " fixtures without failure\n";
  emit(out, c, j, text.str());
  return failed == 0 ? kOk : kFixtureFailure;
}

void add_space_options(CLI::App* cmd, SourceArgs& a) {
  cmd->add_option("-m", a.m, "projective dimension m >= 2");
  cmd->add_option("-p", a.p, "prime characteristic p");
  cmd->add_option("-e", a.e, "exponent e, n = p^e")->capture_default_str();
}

void add_source_options(CLI::App* cmd, SourceArgs& a) {
  add_space_options(cmd, a);
  cmd->add_option("--set", a.set_file, "difference set JSON {modulus, elements}");
  cmd->add_option("--order", a.order_file, "ordered difference set JSON {modulus, order}");
  cmd->add_flag("--frobenius", a.frobenius, "require a Frobenius compatible ordering");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singer difference sets, Wada dessins and their Frobenius automorphisms", "wada"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  Common common;
  app.add_flag("--json", common.json, "print JSON instead of text");
  app.add_flag("--force-large", common.force_large, "build dessins above the size guard");
  app.add_option("--budget", common.budget, "search node budget")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-field", common.max_field, "largest field size for discrete-log tables")->capture_default_str();

  SourceArgs src;
  bool orbits = false, shifts = false, group = false, examples = false, table2 = false;
  std::string dot, svg, map;
  std::uint64_t group_order = 0;

  auto* space = app.add_subcommand("space", "parameters of P^m(F_n) and group-theoretic conditions");
  add_space_options(space, src);
  auto* diff = app.add_subcommand("diffset", "Singer difference set, Frobenius orbits and shifts");
  add_space_options(diff, src);
  diff->add_flag("--orbits", orbits, "print the orbits under x -> p x");
  diff->add_flag("--shifts", shifts, "print the Frobenius-fixed shifts");
  auto* order = app.add_subcommand("order", "search a Wada (and Frobenius) compatible ordering");
  add_space_options(order, src);
  order->add_flag("--frobenius", src.frobenius, "require a Frobenius compatible ordering");
  auto* dess = app.add_subcommand("dessin", "build the dessin, walk its cells, report signature and genus");
  add_source_options(dess, src);
  dess->add_option("--dot", dot, "write a Graphviz file");
  dess->add_option("--svg", svg, "write a schematic SVG");
  auto* aut = app.add_subcommand("aut", "certify automorphisms of the dessin");
  add_source_options(aut, src);
  aut->add_option("--map", map, "affine map t,s acting as x -> t x + s");
  aut->add_flag("--group", group, "report on the group generated by x -> p x");
  aut->add_option("--f", group_order, "order of the Frobenius group (defaults to e(m+1))");
  auto* repro = app.add_subcommand("reproduce", "run the fixture suite");
  repro->add_flag("--examples", examples, "worked examples");
  repro->add_flag("--table2", table2, "prime-case table of spaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*space) return cmd_space(src, common, out);
    if (*diff) return cmd_diffset(src, orbits, shifts, common, out);
    if (*order) return cmd_order(src, common, out);
    if (*dess) return cmd_dessin(src, dot, svg, common, out);
    if (*aut) return cmd_aut(src, map, group, group_order, common, out);
    if (*repro) return cmd_reproduce(examples, table2, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    if (!common.json) out << "# " << kVersion << "\n";
    out << (common.json ? "{\"status\": \"budget_exhausted\"}\n" : "BUDGET-EXHAUSTED (inconclusive)\n");
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace wada::cli
