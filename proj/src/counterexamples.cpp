#include <algorithm>

#include "grpring/harness.hpp"

namespace grpring {

namespace {

std::optional<ElementIndex> first_of_order(const FiniteAbelianGroup& group, std::uint64_t order) {
  for (ElementIndex g = 0; g < group.size(); ++g)
    if (group.order_of(g) == order) return g;
  return std::nullopt;
}

}  // namespace

Counterexample counterexample_odd_square(std::uint64_t p, const FiniteAbelianGroup& group) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::not_applicable, "needs an odd prime characteristic");
  if (group.size() == 1 || !is_p_group(group, p))
    throw Error(Errc::not_applicable, "needs a nontrivial p-group");
  const auto ring = make_ring(p);
  const auto g = first_of_order(group, p);
  if (!g) throw Error(Errc::not_applicable, "no element of order p");
  auto x = power(GroupRingElement::g_minus_one(ring, group, *g), 2);
  auto ideal = ideal_generated(x);
  Counterexample out{std::move(x), ideal, !in_phi_image(ideal).has_value(), {*g}, {}, false};
  return out;
}

Counterexample counterexample_order_four_cube(const FiniteAbelianGroup& group) {
  if (!is_p_group(group, 2)) throw Error(Errc::not_applicable, "needs a 2-group");
  const auto g = first_of_order(group, 4);
  if (!g) throw Error(Errc::not_applicable, "no element of order 4");
  const auto ring = make_ring(2);
  const auto t = GroupRingElement::g_minus_one(ring, group, *g);
  auto x = power(t, 3);
  auto cube = ideal_generated(x);
  const auto square = ideal_generated(power(t, 2));
  const ElementIndex g2[] = {group.op(*g, *g)};
  const auto phi_h = phi(ring, group, subgroup_generated(group, std::span<const ElementIndex>(g2)));

  Counterexample out{std::move(x), cube, !in_phi_image(cube).has_value(), {*g}, {}, false};
  out.chain_dimensions = {0, cube.dimension(), square.dimension()};
  out.chain_verified = square == phi_h && square.contains(cube) && cube.dimension() > 0 &&
                       cube.dimension() < square.dimension();
  return out;
}

Counterexample counterexample_elementary_pair(const FiniteAbelianGroup& group) {
  if (!is_p_group(group, 2) || group.size() < 4)
    throw Error(Errc::not_applicable, "needs a 2-group of order at least 4");
  for (ElementIndex g = 0; g < group.size(); ++g)
    if (group.order_of(g) > 2) throw Error(Errc::not_applicable, "group has an element of order 4");
  const auto ring = make_ring(2);
  const ElementIndex f1 = 1;
  ElementIndex f2 = 0;
  for (ElementIndex h = 1; h < group.size(); ++h) {
    const auto prod = group.op(f1, h);
    if (h != f1 && prod != 0 && prod != f1 && prod != h) {
      f2 = h;
      break;
    }
  }
  if (f2 == 0) throw Error(Errc::not_applicable, "no pair f_1, f_2 with f_1 f_2 outside {1, f_1, f_2}");
  const auto one = GroupRingElement::one(ring, group);
  auto x = mul(add(one, GroupRingElement::monomial(ring, group, f1)),
               add(one, GroupRingElement::monomial(ring, group, f2)));
  auto ideal = ideal_generated(x);
  Counterexample out{std::move(x), ideal, !in_phi_image(ideal).has_value(), {f1, f2}, {}, false};
  return out;
}

bool unique_prime_check(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  require_prime_field(ring);
  // A nilpotent element of a D-dimensional commutative algebra satisfies x^D = 0.
  for (ElementIndex g = 1; g < group.size(); ++g)
    if (!power(GroupRingElement::g_minus_one(ring, group, g), group.size()).is_zero()) return false;
  return true;
}

}  // namespace grpring
