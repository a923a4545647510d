#include <gtest/gtest.h>

#include "grpring/json_io.hpp"
#include "grpring/principal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grpring;
using testing_support::element;

namespace {

// alpha = 2 in F_5: x = g + a^3 g^2 + g^3 + g^4 + a^3 g^5 + g^6 + g^7 + a^2 g^8 + g^9 + g^10 + a^3 g^11.
const oracle::Coeffs kExample = {0, 1, 3, 1, 1, 3, 1, 1, 4, 1, 1, 3};

}  // namespace

TEST(Principal, ExampleFromTheText) {
  const auto x = element(5, {12}, kExample);
  const auto r = classify_principal(x);
  EXPECT_EQ(r.verdict, Verdict::in_image);
  EXPECT_EQ(r.rank_a, 8u);
  EXPECT_EQ(r.d, 4u);
  EXPECT_EQ(r.condition42, (std::vector<Residue>{0, 0, 0, 0}));
  EXPECT_EQ(r.rank_a_tilde, 8u);
  EXPECT_EQ(r.subgroup_label(), "<g^4>");
  EXPECT_EQ(r.quotient_label(), "F_5 C_4");
  EXPECT_EQ(to_json(r).dump(),
            R"({"verdict":"in-image","d":4,"rank_A":8,"rank_A_tilde":8,"condition42":[0,0,0,0],"subgroup":"<g^4>","quotient":"F_5 C_4"})");
}

TEST(Principal, ExampleAgainstSetOracle) {
  // The ideal is Phi(<g^4>) as an explicit element set.
  const auto j = ideal_generated(element(5, {12}, kExample));
  EXPECT_EQ(j.dimension(), 8u);
  EXPECT_EQ(j, phi(make_ring(5), make_group({12}), subgroup_generated(make_group({12}), std::span<const ElementIndex>(std::vector<ElementIndex>{4}))));
}

TEST(Principal, CirculantLayout) {
  const auto x = element(7, {4}, {1, 2, 3, 4});
  const auto a = build_circulant(x);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(a.rows(r, c), x.coeffs()[(4 - 1 - r - c + 8) % 4]);
  EXPECT_EQ(a.row_of_power(0), 3u);
  const auto aug = build_augmented(x, 1);
  EXPECT_EQ(aug.cols(), 5u);
  EXPECT_EQ(aug(2, 4), 1u);
  EXPECT_EQ(aug(3, 4), 6u);
  EXPECT_THROW(build_augmented(x, 4), Error);
}

// Row r of A_x y is the g^(m-1-r) coefficient of x y.
TEST(Principal, CirculantEncodesProducts) {
  oracle::for_random_cases(21, 200, [](std::mt19937_64& rng) {
    const std::uint64_t m = 2 + rng() % 7, p = 5;
    const auto xc = oracle::random_coeffs(rng, p, m), yc = oracle::random_coeffs(rng, p, m);
    const auto a = build_circulant(element(p, {m}, xc));
    const auto prod = oracle::mul(p, {m}, xc, yc);
    for (std::size_t r = 0; r < m; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < m; ++c) acc = (acc + a.rows(r, c) * yc[c]) % p;
      EXPECT_EQ(acc, prod[m - 1 - r]);
    }
  });
}

TEST(Principal, RefusesOutOfScopeInputs) {
  try {
    classify_principal(element(4, {4}, {1, 1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_ring);
  }
  try {
    classify_principal(element(2, {2, 2}, {1, 1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_group);
  }
}

TEST(Principal, SpecialVerdicts) {
  const auto zero = classify_principal(element(3, {3}, {0, 0, 0}));
  EXPECT_EQ(zero.verdict, Verdict::zero_element);
  EXPECT_EQ(zero.d, 3u);
  const auto unit = classify_principal(element(3, {3}, {0, 2, 0}));
  EXPECT_EQ(unit.verdict, Verdict::unit_element);
  EXPECT_EQ(unit.d, 0u);
  const auto aug = classify_principal(element(3, {3}, {2, 1, 0}));
  EXPECT_EQ(aug.verdict, Verdict::in_image);
  EXPECT_EQ(aug.subgroup_label(), "<g^1>");
  EXPECT_EQ(aug.quotient_label(), "F_3 C_1");
}

// Exhaustive: classifier vs the set oracles, none of which use matrices.
TEST(Principal, ClassifierAgainstSetOracle) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 4}, {5, 3}, {2, 8}}) {
    for (const auto& c : oracle::all_elements(p, m)) {
      const auto r = classify_principal(element(p, {m}, c));
      const auto set = oracle::principal_ideal(p, {m}, c);
      EXPECT_EQ(r.rank_a, oracle::log_p(p, set.size()));
      const bool zero = set.size() == 1;
      const bool unit = set.size() == oracle::principal_ideal(p, {m}, oracle::unit_vector(m, 0)).size();
      const auto pre = oracle::phi_preimage(p, {m}, set);
      if (zero) {
        EXPECT_EQ(r.verdict, Verdict::zero_element);
      } else if (unit) {
        EXPECT_EQ(r.verdict, Verdict::unit_element);
      } else if (pre) {
        ASSERT_EQ(r.verdict, Verdict::in_image);
        EXPECT_EQ(testing_support::indices(*r.subgroup), *pre);
        EXPECT_EQ(r.d, m / pre->size());
      } else {
        EXPECT_EQ(r.verdict, Verdict::not_in_image);
        EXPECT_TRUE(r.reason.has_value());
      }
    }
  }
}

// Once d | m and the sums vanish, x lies in (g^d - 1)RG and both ideals have
// dimension m - d, so the final rank comparison can never be the failing check.
TEST(Principal, FailedChecksSeenInSweeps) {
  std::map<FailedCheck, std::size_t> seen;
  for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 6}, {2, 6}, {2, 12}, {5, 4}})
    for (const auto& c : oracle::all_elements(p, m)) {
      const auto r = classify_principal(element(p, {m}, c));
      if (r.reason) ++seen[*r.reason];
    }
  EXPECT_GT(seen[FailedCheck::d_not_divisor], 0u);
  EXPECT_GT(seen[FailedCheck::condition42_failed], 0u);
  EXPECT_EQ(seen[FailedCheck::rank_mismatch], 0u);
}

TEST(Principal, MembershipTestsAgainstSets) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 4}, {3, 3}, {2, 6}, {5, 3}}) {
    for (const auto& c : oracle::all_elements(p, m)) {
      const auto x = element(p, {m}, c);
      const auto set = oracle::principal_ideal(p, {m}, c);
      for (std::uint64_t n = 1; n < m; ++n) {
        oracle::Coeffs gn(m, 0);
        gn[n] = 1;
        gn[0] = p - 1;
        EXPECT_EQ(contains_power_minus_one(x, n), set.count(gn) == 1);
        EXPECT_EQ(in_power_ideal(x, n), oracle::principal_ideal(p, {m}, gn).count(c) == 1);
      }
    }
  }
}

TEST(Principal, ProgressionSums) {
  const auto x = element(5, {12}, kExample);
  EXPECT_EQ(progression_sums(x, 4), (std::vector<Residue>{0, 0, 0, 0}));
  EXPECT_EQ(progression_sums(x, 3), (std::vector<Residue>{(0 + 1 + 1 + 1) % 5, (1 + 1 + 1 + 1) % 5, (3 + 3 + 4 + 3) % 5}));
  EXPECT_EQ(principal_dimension(x), 8u);
}

// --- Laurent ------------------------------------------------------------------

TEST(Laurent, Arithmetic) {
  const LaurentElement a(0, {{1, 1}, {0, -1}});
  const LaurentElement b(0, {{1, 1}, {0, 1}});
  EXPECT_EQ(a * b, LaurentElement(0, {{2, 1}, {0, -1}}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(LaurentElement(3, {{0, 4}}).coefficient(0), 1);
  EXPECT_THROW(LaurentElement(4), Error);
  EXPECT_THROW(a + LaurentElement(3), Error);
}

TEST(Laurent, Verdicts) {
  const auto r = classify_laurent(LaurentElement(0, {{3, 1}, {-1, -1}}));
  EXPECT_EQ(r.verdict, LaurentVerdict::in_image);
  EXPECT_EQ(r.h_exponent, 4);
  EXPECT_EQ(r.unit, 1);
  EXPECT_EQ(classify_laurent(LaurentElement(0, {{3, 2}, {-1, -2}})).verdict, LaurentVerdict::not_in_image);
  EXPECT_EQ(classify_laurent(LaurentElement(5, {{3, 2}, {-1, 3}})).verdict, LaurentVerdict::in_image);
  EXPECT_EQ(classify_laurent(LaurentElement(0, {{2, -1}})).verdict, LaurentVerdict::unit_element);
  EXPECT_EQ(classify_laurent(LaurentElement(0, {{2, 3}})).verdict, LaurentVerdict::not_in_image);
  EXPECT_EQ(classify_laurent(LaurentElement(2)).verdict, LaurentVerdict::zero_element);
  EXPECT_EQ(classify_laurent(LaurentElement(2, {{0, 1}, {1, 1}, {2, 1}})).verdict, LaurentVerdict::not_in_image);
}

TEST(Laurent, ExactDivision) {
  oracle::for_random_cases(31, 500, [](std::mt19937_64& rng) {
    const std::uint64_t modulus = std::vector<std::uint64_t>{0, 2, 3, 5}[rng() % 4];
    std::map<std::int64_t, std::int64_t> tq;
    for (int i = 0; i < 3; ++i) tq[static_cast<std::int64_t>(rng() % 9) - 4] = static_cast<std::int64_t>(rng() % 7) - 3;
    const LaurentElement q(modulus, tq);
    const std::int64_t k = 1 + rng() % 5;
    const auto d = LaurentElement::monomial(modulus, k, 1) - LaurentElement::monomial(modulus, 0, 1);
    const auto back = exact_quotient_power_minus_one(q * d, k);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, q);
    const auto off = exact_quotient_power_minus_one(q * d + LaurentElement::monomial(modulus, 7, 1), k);
    EXPECT_FALSE(off.has_value());
  });
}

// Sweep against the enumeration oracle x = u g^a (g^k - 1).
TEST(Laurent, SweepAgainstEnumeration) {
  for (std::uint64_t modulus : {2, 3, 0}) {
    std::vector<std::int64_t> coeffs;
    if (modulus == 0)
      coeffs = {-2, -1, 1, 2};
    else
      for (std::int64_t c = 1; c < static_cast<std::int64_t>(modulus); ++c) coeffs.push_back(c);
    for (std::int64_t e1 = -3; e1 <= 3; ++e1)
      for (std::int64_t e2 = e1 + 1; e2 <= 3; ++e2)
        for (auto c1 : coeffs)
          for (auto c2 : coeffs) {
            const oracle::Laurent terms{{e1, oracle::norm(modulus, c1)}, {e2, oracle::norm(modulus, c2)}};
            const auto r = classify_laurent(LaurentElement(modulus, {{e1, c1}, {e2, c2}}));
            const auto w = oracle::laurent_phi_witness(modulus, terms, 8, 8);
            EXPECT_EQ(r.verdict == LaurentVerdict::in_image, w.has_value());
            if (w) EXPECT_EQ(r.h_exponent, *w);
          }
  }
}

TEST(Laurent, JsonRoundTrip) {
  const auto x = laurent_from_json(Json::parse(R"({"modulus":0,"terms":{"3":2,"-1":3}})"));
  EXPECT_EQ(x.coefficient(3), 2);
  EXPECT_EQ(x.coefficient(-1), 3);
  EXPECT_EQ(laurent_from_json(to_json(x)), x);
  EXPECT_THROW(laurent_from_json(Json::parse(R"({"modulus":0,"terms":{"x":1}})")), Error);
}

TEST(Json, ElementRoundTrip) {
  const auto x = element_from_json(Json::parse(R"({"modulus":5,"group":[12],"coeffs":[0,1,3,1,1,3,1,1,4,1,1,3]})"));
  EXPECT_EQ(x.coeffs(), kExample);
  EXPECT_EQ(element_from_json(to_json(x)), x);
  EXPECT_THROW(element_from_json(Json::parse(R"({"modulus":5,"group":[12]})")), Error);
  EXPECT_THROW(element_from_json(Json::parse(R"({"modulus":5,"group":[3],"coeffs":[1]})")), Error);
}
