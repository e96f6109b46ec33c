#include "wada/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wada/error.hpp"

namespace wada::ordering {

OrderedDifferenceSet OrderedDifferenceSet::make(diffset::DifferenceSet base, std::vector<Residue> order) {
  std::vector<Residue> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != base.elements()) throw Error(ErrorKind::InvalidArgument, "ordering is not a permutation of the difference set");
  return OrderedDifferenceSet(std::move(base), std::move(order));
}

OrderedDifferenceSet OrderedDifferenceSet::rotated(std::size_t shift) const {
  std::vector<Residue> out(order_.size());
  if (!order_.empty())
    for (std::size_t i = 0; i < order_.size(); ++i) out[i] = order_[(i + shift) % order_.size()];
  return OrderedDifferenceSet(base_, std::move(out));
}

OrderedDifferenceSet OrderedDifferenceSet::canonical() const {
  const auto it = std::min_element(order_.begin(), order_.end());
  return rotated(static_cast<std::size_t>(it - order_.begin()));
}

CompatibilityReport is_wada_compatible(const OrderedDifferenceSet& o) {
  const Residue ell = o.modulus();
  const auto& ord = o.order();
  CompatibilityReport report;
  for (std::size_t i = 0; i < ord.size(); ++i) {
    const Residue a = ord[i];
    const Residue b = ord[(i + 1) % ord.size()];
    const Residue g = std::gcd(mod(a - b, ell), ell);
    if (g != 1) report.offending.push_back({a, b, g});
  }
  report.wada = report.offending.empty();
  return report;
}

CompatibilityReport is_frobenius_compatible(const OrderedDifferenceSet& o, Residue p, std::uint64_t f) {
  if (f == 0) throw Error(ErrorKind::InvalidArgument, "group order f must be positive");
  diffset::frobenius_orbits(o.base(), p, f);
  const std::uint64_t q = o.size();
  if (q % f != 0)
    throw Error(ErrorKind::FNotDividingQ, std::to_string(f) + " does not divide q = " + std::to_string(q) + "; no block form exists");
  CompatibilityReport report = is_wada_compatible(o);
  report.frobenius = false;
  const std::uint64_t k = q / f;
  const Residue ell = o.modulus();
  const auto& ord = o.order();
  // Rotating a block form by k gives a block form again, so rotations below k suffice.
  for (std::uint64_t r = 0; r < k && !report.blocks; ++r) {
    for (const Residue j : units_mod(static_cast<Residue>(f))) {
      const Residue pj = pow_mod(p, static_cast<std::uint64_t>(j), ell);
      bool ok = true;
      for (std::uint64_t idx = k; idx < q && ok; ++idx)
        ok = ord[(r + idx) % q] == mul_mod(pj, ord[(r + idx - k) % q], ell);
      if (ok) {
        report.frobenius = true;
        report.blocks = FrobeniusBlocks{static_cast<std::uint64_t>(j), k, r};
        break;
      }
    }
  }
  return report;
}

SearchResult find_compatible_ordering(const diffset::DifferenceSet& d, Residue p, std::uint64_t f, const SearchOptions& options) {
  if (options.budget < 1) throw Error(ErrorKind::InvalidArgument, "search budget must be >= 1");
  const Residue ell = d.modulus();
  const auto& elems = d.elements();
  const std::size_t n = elems.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty difference set");

  // Mark key per candidate: its orbit (block search) or itself (plain search).
  std::vector<std::size_t> key(n);
  std::size_t target = n;
  diffset::OrbitDecomposition orbits;
  if (options.require_frobenius) {
    orbits = diffset::frobenius_orbits(d, p, f);
    for (const auto len : orbits.lengths)
      if (len != f)
        throw Error(ErrorKind::OrbitShape, "Frobenius orbits are not all of length " + std::to_string(f) + " (found one of length " +
                                               std::to_string(len) + ")");
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
      for (const Residue x : orbits.orbits[o])
        key[static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin())] = o;
    target = orbits.orbits.size();
  } else {
    std::iota(key.begin(), key.end(), std::size_t{0});
  }

  const std::vector<Residue> js = options.require_frobenius ? units_mod(static_cast<Residue>(f)) : std::vector<Residue>{0};
  auto leaf = [&](const std::vector<std::size_t>& chosen) -> std::optional<std::vector<Residue>> {
    const Residue first = elems[chosen.front()];
    const Residue last = elems[chosen[target - 1]];
    for (const Residue j : js) {
      const Residue pj = options.require_frobenius ? pow_mod(p, static_cast<std::uint64_t>(j), ell) : 1;
      if (std::gcd(mod(last - mul_mod(pj, first, ell), ell), ell) != 1) continue;
      std::vector<Residue> full;
      full.reserve(n);
      Residue mult = 1;
      for (std::size_t h = 0; h < n / target; ++h) {
        for (std::size_t i = 0; i < target; ++i) full.push_back(mul_mod(mult, elems[chosen[i]], ell));
        mult = mul_mod(mult, pj, ell);
      }
      return full;
    }
    return std::nullopt;
  };

  // Iterative DFS; slot 0 holds the minimal element, which is no loss:
  // rotations (and, for block forms, rotations by k) reach every other start.
  std::vector<std::size_t> chosen(target, 0);
  std::vector<std::size_t> cursor(target + 1, 0);
  std::vector<std::uint8_t> used(n, 0);
  used[key[0]] = 1;
  std::size_t filled = 1;
  SearchResult result;
  result.nodes = 1;
  while (true) {
    if (filled == target) {
      if (auto full = leaf(chosen)) {
        auto ordered = OrderedDifferenceSet::make(d, std::move(*full));
        const auto check = options.require_frobenius ? is_frobenius_compatible(ordered, p, f) : is_wada_compatible(ordered);
        if (!check.wada || (options.require_frobenius && !check.frobenius.value_or(false)))
          throw Error(ErrorKind::Internal, "search produced an ordering that fails the standalone check");
        result.ordering = std::move(ordered);
        return result;
      }
      if (filled == 1) return result;
      --filled;
      used[key[chosen[filled]]] = 0;
      continue;
    }
    const Residue prev = elems[chosen[filled - 1]];
    std::size_t idx = cursor[filled];
    while (idx < n && (used[key[idx]] || std::gcd(mod(prev - elems[idx], ell), ell) != 1)) ++idx;
    if (idx < n) {
      cursor[filled] = idx + 1;
      chosen[filled] = idx;
      used[key[idx]] = 1;
      if (++result.nodes > options.budget) throw BudgetExhausted(result.nodes - 1);
      ++filled;
      cursor[filled] = 0;
    } else {
      if (filled == 1) return result;
      --filled;
      used[key[chosen[filled]]] = 0;
    }
  }
}

}  // namespace wada::ordering
