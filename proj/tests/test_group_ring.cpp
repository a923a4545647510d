#include <gtest/gtest.h>

#include "grpring/group_ring.hpp"
#include "grpring/harness.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grpring;
using testing_support::element;
using testing_support::elements_of;

namespace {

const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> kTiny = {
    {2, {2}}, {2, {4}}, {2, {2, 2}}, {3, {3}}, {3, {2}}, {2, {3}}, {5, {2}}, {2, {6}}, {3, {4}}};

}  // namespace

TEST(GroupRing, MultiplicationAgainstConvolution) {
  oracle::for_random_cases(3, 400, [](std::mt19937_64& rng) {
    const std::vector<std::vector<std::uint64_t>> groups = {{6}, {2, 3}, {2, 2, 2}, {4, 2}, {5}};
    const auto& orders = groups[rng() % groups.size()];
    const std::uint64_t n = 2 + rng() % 11;
    const auto size = oracle::group_size(orders);
    const auto a = oracle::random_coeffs(rng, n, size), b = oracle::random_coeffs(rng, n, size);
    const auto x = element(n, orders, a), y = element(n, orders, b);
    const auto prod = oracle::mul(n, orders, a, b);
    EXPECT_EQ(mul(x, y).coeffs(), prod);
    EXPECT_EQ(add(x, y).coeffs(), oracle::add(n, a, b));
    EXPECT_TRUE(sub(add(x, y), y) == x);
  });
}

TEST(GroupRing, RingAxioms) {
  oracle::for_random_cases(5, 300, [](std::mt19937_64& rng) {
    const std::vector<std::uint64_t> orders{3, 2};
    const std::uint64_t n = 2 + rng() % 9;
    auto draw = [&] { return element(n, orders, oracle::random_coeffs(rng, n, 6)); };
    const auto x = draw(), y = draw(), z = draw();
    EXPECT_TRUE(mul(x, y) == mul(y, x));
    EXPECT_TRUE(mul(mul(x, y), z) == mul(x, mul(y, z)));
    EXPECT_TRUE(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
    EXPECT_TRUE(mul(x, GroupRingElement::one(x.ring(), x.group())) == x);
    EXPECT_EQ(augmentation(mul(x, y)), mul(x.ring(), augmentation(x), augmentation(y)));
    EXPECT_TRUE(power(x, 3) == mul(x, mul(x, x)));
  });
}

TEST(GroupRing, ShiftAndScalar) {
  const auto x = element(5, {4}, {1, 2, 3, 4});
  EXPECT_EQ(shift(1, x).coeffs(), (oracle::Coeffs{4, 1, 2, 3}));
  EXPECT_EQ(scalar_mul(2, x).coeffs(), (oracle::Coeffs{2, 4, 1, 3}));
  EXPECT_EQ(GroupRingElement::g_minus_one(x.ring(), x.group(), 2).coeffs(), (oracle::Coeffs{4, 0, 1, 0}));
  EXPECT_TRUE(power(x, 0) == GroupRingElement::one(x.ring(), x.group()));
}

TEST(GroupRing, OperandChecks) {
  const auto a = element(3, {3}, {1, 0, 0});
  const auto b = element(5, {3}, {1, 0, 0});
  const auto c = element(3, {2}, {1, 0});
  EXPECT_THROW(add(a, b), Error);
  EXPECT_THROW(mul(a, c), Error);
  EXPECT_THROW(GroupRingElement(make_ring(3), make_group({3}), {1, 2}), Error);
}

TEST(GroupRing, IdealGeneratedIsPrincipalIdealSet) {
  for (const auto& [p, orders] : kTiny) {
    const auto size = oracle::group_size(orders);
    for (const auto& c : oracle::all_elements(p, size)) {
      const auto j = ideal_generated(element(p, orders, c));
      ASSERT_EQ(elements_of(j), oracle::principal_ideal(p, orders, c));
      EXPECT_TRUE(j.is_ideal());
    }
  }
}

TEST(GroupRing, PhiAndPsiAgainstSetOracle) {
  for (const auto& [p, orders] : kTiny) {
    const auto ring = make_ring(p);
    const auto group = make_group(orders);
    for (const auto& n : all_subgroups(group)) {
      const auto j = phi(ring, group, n);
      const auto expected = oracle::phi_set(p, orders, testing_support::indices(n));
      EXPECT_EQ(elements_of(j), expected);
      EXPECT_EQ(testing_support::indices(psi(j)), oracle::psi_set(p, orders, expected));
      EXPECT_EQ(psi(j), n);
    }
  }
}

TEST(GroupRing, InPhiImageAgainstSetOracle) {
  for (const auto& [p, orders] : kTiny) {
    const auto size = oracle::group_size(orders);
    for (const auto& c : oracle::all_elements(p, size)) {
      const auto got = in_phi_image(ideal_generated(element(p, orders, c)));
      const auto want = oracle::phi_preimage(p, orders, oracle::principal_ideal(p, orders, c));
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) EXPECT_EQ(testing_support::indices(*got), *want);
    }
  }
}

TEST(GroupRing, AugmentationIdealIsPhiOfG) {
  const auto ring = make_ring(3);
  const auto group = make_group({3, 2});
  EXPECT_EQ(augmentation_ideal(ring, group), phi(ring, group, whole_group(group)));
  EXPECT_EQ(augmentation_ideal(ring, group).dimension(), 5u);
  EXPECT_EQ(zero_ideal(ring, group).dimension(), 0u);
  EXPECT_FALSE(whole_ring(ring, group).is_proper());
}

TEST(GroupRing, PsiRejectsNonIdeals) {
  const auto ring = make_ring(2);
  const auto group = make_group({2, 2});
  // span{a - 1, b - 1} holds a - 1 and b - 1 but not ab - 1.
  const std::vector<Vector> rows{{1, 1, 0, 0}, {1, 0, 1, 0}};
  const auto span = IdealSubspace::from_rows(ring, group, rows);
  EXPECT_FALSE(span.is_ideal());
  try {
    psi(span);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_an_ideal);
  }
}

TEST(GroupRing, IdealsNeedAPrimeField) {
  try {
    ideal_generated(element(4, {2}, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_ring);
  }
}

TEST(GroupRing, QuotientStructureOfExample) {
  // F_5 C_12 / Phi(<g^4>) against F_5 C_4.
  const auto ring = make_ring(5);
  const auto group = make_group({12});
  const ElementIndex gen[] = {4};
  const auto n = subgroup_generated(group, std::span<const ElementIndex>(gen));
  const auto j = phi(ring, group, n);
  const auto s = quotient_structure(j);
  EXPECT_EQ(s.dimension, 4u);
  EXPECT_TRUE(s.is_commutative());
  EXPECT_TRUE(s.is_associative());
  EXPECT_EQ(quotient_basis(j).size(), 4u);
  EXPECT_TRUE(verify_quotient_iso(ring, group, n));
  EXPECT_THROW(quotient_structure(whole_ring(ring, group)), Error);
}

TEST(GroupRing, QuotientIsoDetectsWrongQuotient) {
  // Structure constants of F_2 C_4 and F_2 (C_2 x C_2) differ, even though both are 4-dimensional.
  const auto c4 = quotient(make_group({4}), trivial_subgroup());
  const auto v4 = quotient(make_group({2, 2}), trivial_subgroup());
  EXPECT_FALSE(group_algebra_structure(2, c4) == group_algebra_structure(2, v4));
}
