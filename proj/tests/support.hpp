#pragma once

#include <set>

#include "grpring/group_ring.hpp"
#include "oracles.hpp"

namespace testing_support {

inline grpring::GroupRingElement element(std::uint64_t n, const std::vector<std::uint64_t>& orders,
                                         const oracle::Coeffs& c) {
  return grpring::GroupRingElement(grpring::make_ring(n), grpring::make_group(orders),
                                   std::vector<std::int64_t>(c.begin(), c.end()));
}

inline std::set<oracle::Coeffs> elements_of(const grpring::IdealSubspace& ideal) {
  std::vector<oracle::Coeffs> rows(ideal.basis().rows().begin(), ideal.basis().rows().end());
  return oracle::additive_closure(ideal.ring().modulus, ideal.group().size(), rows);
}

inline std::vector<std::uint64_t> indices(const grpring::Subgroup& s) {
  return {s.elements.begin(), s.elements.end()};
}

}  // namespace testing_support
