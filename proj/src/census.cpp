#include <algorithm>
#include <limits>

#include "grpring/harness.hpp"
#include "grpring/radicals.hpp"

namespace grpring {

std::uint64_t subspace_count(std::uint64_t p, std::size_t n) {
  __extension__ using Wide = unsigned __int128;
  constexpr Wide cap = Wide{1} << 63;
  // Pascal rule for Gaussian binomials: [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<Wide> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Wide> next(i + 1, 0);
    Wide qk = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      Wide v = (k > 0 ? row[k - 1] : 0);
      if (k < i) v += qk * row[k];
      next[k] = std::min(v, cap);
      qk = std::min(qk * p, cap);
    }
    row = std::move(next);
  }
  Wide total = 0;
  for (auto v : row) total = std::min(total + v, cap);
  return static_cast<std::uint64_t>(total);
}

namespace {

// Calls visit(rows) once per RREF matrix of every rank, i.e. once per subspace.
template <typename Visit>
void for_each_subspace(std::uint64_t p, std::size_t n, Visit&& visit) {
  std::vector<std::size_t> pivots;
  std::vector<Vector> rows;
  auto emit_for_pivots = [&]() {
    const std::size_t k = pivots.size();
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(i, c);
    rows.assign(k, Vector(n, 0));
    for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
    std::vector<Residue> digits(free_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free_slots.size(); ++s) rows[free_slots[s].first][free_slots[s].second] = digits[s];
      visit(static_cast<const std::vector<Vector>&>(rows));
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  };
  // Pivot sets in lexicographic order, all sizes.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    emit_for_pivots();
    for (std::size_t c = start; c < n; ++c) {
      pivots.push_back(c);
      self(self, c + 1);
      pivots.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace

LatticeCensus ideal_census(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  require_prime_field(ring);
  LatticeCensus census;
  census.group = group.orders();
  census.modulus = ring.modulus;
  const auto subgroups = all_subgroups(group);
  census.subgroup_count = subgroups.size();
  std::vector<IdealSubspace> phis;
  for (const auto& n : subgroups) {
    phis.push_back(phi(ring, group, n));
    census.phi_image.emplace_back(n, phis.back().dimension());
  }
  if (subspace_count(ring.modulus, group.size()) > LatticeCensus::kMaxSubspaces) return census;

  const auto gens = generating_set(group, whole_group(group));
  std::vector<ElementIndex> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(group.index_of(g));

  std::vector<IdealSubspace> ideals;
  Vector moved(group.size());
  for_each_subspace(ring.modulus, group.size(), [&](const std::vector<Vector>& rows) {
    if (rows.size() == group.size()) return;  // the unit ideal
    EchelonBasis basis(ring.modulus, group.size());
    for (const auto& r : rows) basis.insert(r);
    for (const auto& r : rows) {
      for (auto s : gen_idx) {
        for (ElementIndex h = 0; h < group.size(); ++h) moved[group.op(s, h)] = r[h];
        if (!basis.contains(moved)) return;
      }
    }
    ideals.push_back(IdealSubspace::from_basis(ring, group, std::move(basis)));
  });

  std::vector<std::size_t> fibers(subgroups.size(), 0);
  bool everything = true;
  for (const auto& j : ideals) {
    const auto n = psi(j);
    const auto it = std::find(subgroups.begin(), subgroups.end(), n);
    ++fibers[static_cast<std::size_t>(it - subgroups.begin())];
    if (std::find(phis.begin(), phis.end(), j) == phis.end()) everything = false;
  }
  bool own_fiber = true;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const bool enumerated = std::find(ideals.begin(), ideals.end(), phis[i]) != ideals.end();
    own_fiber = own_fiber && enumerated && psi(phis[i]) == subgroups[i];
  }

  census.ideal_count = ideals.size();
  std::vector<std::pair<Subgroup, std::size_t>> fiber_sizes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) fiber_sizes.emplace_back(subgroups[i], fibers[i]);
  census.fiber_sizes = std::move(fiber_sizes);
  census.non_unit_ideals = std::move(ideals);
  census.phi_image_is_everything = everything;
  census.phi_in_own_fiber = own_fiber;
  return census;
}

PhiSurjectivityOutcome phi_surjectivity_outcome(std::uint64_t p, std::uint64_t m) {
  const auto ring = make_ring(p);
  const auto group = make_group({m});
  PhiSurjectivityOutcome out;
  out.expected_positive = p == 2 && m == 2;

  const GroupRingScan scan(ring, group);
  out.all_principal_in_image = true;
  for (std::uint32_t code = 0; code < scan.count(); ++code) {
    const auto ideal = ideal_generated(scan.element(code));
    if (!ideal.is_proper()) continue;
    if (!in_phi_image(ideal)) {
      out.all_principal_in_image = false;
      break;
    }
  }
  const auto census = ideal_census(ring, group);
  if (census.phi_image_is_everything)
    out.phi_image_is_everything = census.phi_image_is_everything;
  else if (!out.all_principal_in_image)
    out.phi_image_is_everything = false;  // a principal ideal outside Phi(S) is a non-unit ideal outside it
  out.holds = out.phi_image_is_everything.has_value() && *out.phi_image_is_everything == out.expected_positive &&
              out.all_principal_in_image == out.expected_positive;
  return out;
}

SuiteResult phi_surjectivity_check(std::uint64_t p, std::uint64_t m) {
  SuiteResult result;
  result.name = "phi-surjective(F_" + std::to_string(p) + ", C_" + std::to_string(m) + ")";
  const auto o = phi_surjectivity_outcome(p, m);
  const std::string side = o.expected_positive ? "true" : "false";
  result.check(o.all_principal_in_image == o.expected_positive, result.name + " principal", side,
               o.all_principal_in_image ? "true" : "false");
  result.check(o.phi_image_is_everything.has_value() && *o.phi_image_is_everything == o.expected_positive,
               result.name + " Phi(S)=T", side,
               o.phi_image_is_everything ? (*o.phi_image_is_everything ? "true" : "false") : "undecided");
  return result;
}

}  // namespace grpring
