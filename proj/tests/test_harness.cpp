#include <gtest/gtest.h>

#include "grpring/harness.hpp"
#include "grpring/json_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grpring;

namespace {

// Every non-unit ideal of F_pG as an element set: spans of up to three vectors, kept when G-closed.
std::set<std::set<oracle::Coeffs>> ideals_by_spans(std::uint64_t p, const std::vector<std::uint64_t>& orders) {
  const auto size = oracle::group_size(orders);
  const auto all = oracle::all_elements(p, size);
  std::set<std::set<oracle::Coeffs>> out;
  std::set<std::set<oracle::Coeffs>> spans;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) spans.insert(oracle::additive_closure(p, size, {a, b, c}));
  for (const auto& s : spans) {
    if (s.size() == all.size()) continue;
    bool closed = true;
    for (const auto& v : s)
      for (std::uint64_t g = 0; g < size && closed; ++g) closed = s.count(oracle::mul(p, orders, v, oracle::unit_vector(size, g))) == 1;
    if (closed) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Census, SubspaceCounts) {
  EXPECT_EQ(subspace_count(2, 0), 1u);
  EXPECT_EQ(subspace_count(2, 2), 5u);
  EXPECT_EQ(subspace_count(2, 3), 16u);
  EXPECT_EQ(subspace_count(3, 2), 6u);
  EXPECT_EQ(subspace_count(2, 4), 67u);
  EXPECT_GT(subspace_count(5, 40), LatticeCensus::kMaxSubspaces);
}

TEST(Census, IdealsAgainstSpanOracle) {
  for (const auto& [p, orders] : std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>{
           {2, {2}}, {2, {3}}, {3, {3}}, {3, {2}}, {2, {2, 2}}, {2, {4}}}) {
    const auto c = ideal_census(make_ring(p), make_group(orders));
    ASSERT_TRUE(c.non_unit_ideals.has_value());
    std::set<std::set<oracle::Coeffs>> got;
    for (const auto& j : *c.non_unit_ideals) got.insert(testing_support::elements_of(j));
    // Spans of three vectors reach every subspace of dimension <= 3, enough for |G| <= 4 non-unit ideals.
    EXPECT_EQ(got, ideals_by_spans(p, orders)) << p;
    EXPECT_EQ(*c.ideal_count, got.size());
  }
}

TEST(Census, TextCases) {
  const auto c22 = ideal_census(make_ring(2), make_group({2}));
  EXPECT_EQ(*c22.ideal_count, 2u);
  EXPECT_TRUE(*c22.phi_image_is_everything);

  const auto c24 = ideal_census(make_ring(2), make_group({4}));
  EXPECT_EQ(c24.phi_image.size(), 3u);
  EXPECT_EQ(*c24.ideal_count, 4u);
  EXPECT_FALSE(*c24.phi_image_is_everything);

  const auto c33 = ideal_census(make_ring(3), make_group({3}));
  EXPECT_EQ(*c33.ideal_count, 3u);
  EXPECT_FALSE(*c33.phi_image_is_everything);
  ASSERT_EQ(c33.fiber_sizes->size(), 2u);
  EXPECT_EQ((*c33.fiber_sizes)[0].second, 2u);
  EXPECT_EQ((*c33.fiber_sizes)[1].second, 1u);
  EXPECT_TRUE(*c33.phi_in_own_fiber);
}

TEST(Census, DegradesToPhiImage) {
  const auto c = ideal_census(make_ring(5), make_group({12}));
  EXPECT_FALSE(c.ideal_count.has_value());
  EXPECT_EQ(c.subgroup_count, 6u);
  EXPECT_EQ(c.phi_image.size(), 6u);
  EXPECT_TRUE(to_json(c)["ideal_count"].is_null());
}

TEST(Counterexamples, OddSquare) {
  for (const auto& [p, orders] : std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>{{3, {3}}, {5, {5}}, {3, {9}}}) {
    const auto ce = counterexample_odd_square(p, make_group(orders));
    EXPECT_TRUE(ce.excluded);
    EXPECT_FALSE(oracle::phi_preimage(p, orders, oracle::principal_ideal(p, orders, ce.element.coeffs())).has_value());
  }
  EXPECT_EQ(counterexample_odd_square(3, make_group({3})).element.coeffs(), (oracle::Coeffs{1, 1, 1}));
  EXPECT_THROW(counterexample_odd_square(2, make_group({2})), Error);
  EXPECT_THROW(counterexample_odd_square(3, make_group({2})), Error);
}

TEST(Counterexamples, OrderFourCube) {
  const auto ce = counterexample_order_four_cube(make_group({4}));
  EXPECT_EQ(ce.element.coeffs(), (oracle::Coeffs{1, 1, 1, 1}));
  EXPECT_TRUE(ce.excluded);
  EXPECT_TRUE(ce.chain_verified);
  EXPECT_EQ(ce.chain_dimensions, (std::vector<std::size_t>{0, 1, 2}));
  for (const auto& orders : std::vector<std::vector<std::uint64_t>>{{8}, {2, 4}}) {
    const auto c = counterexample_order_four_cube(make_group(orders));
    EXPECT_TRUE(c.excluded && c.chain_verified);
  }
  try {
    counterexample_order_four_cube(make_group({2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_applicable);
  }
}

TEST(Counterexamples, ElementaryPair) {
  const auto ce = counterexample_elementary_pair(make_group({2, 2}));
  EXPECT_TRUE(ce.excluded);
  EXPECT_EQ(ce.element.coeffs(), (oracle::Coeffs{1, 1, 1, 1}));
  EXPECT_EQ(ce.ideal.dimension(), 1u);
  EXPECT_FALSE(oracle::phi_preimage(2, {2, 2}, oracle::principal_ideal(2, {2, 2}, ce.element.coeffs())).has_value());
  EXPECT_TRUE(counterexample_elementary_pair(make_group({2, 2, 2})).excluded);
  EXPECT_THROW(counterexample_elementary_pair(make_group({2})), Error);
  EXPECT_THROW(counterexample_elementary_pair(make_group({4})), Error);
}

TEST(UniquePrime, PGroupsOnly) {
  EXPECT_TRUE(unique_prime_check(make_ring(2), make_group({4})));
  EXPECT_TRUE(unique_prime_check(make_ring(3), make_group({3})));
  EXPECT_FALSE(unique_prime_check(make_ring(3), make_group({2})));
  for (std::uint64_t p : {2, 3})
    for (const auto& orders : all_factorizations(16)) {
      const auto g = make_group(orders);
      EXPECT_EQ(unique_prime_check(make_ring(p), g), is_p_group(g, p));
    }
}

TEST(PhiSurjectivity, OnlyTheSmallestCaseIsPositive) {
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t m = 2; m <= 4; ++m) {
      const auto o = phi_surjectivity_outcome(p, m);
      EXPECT_TRUE(o.holds) << p << " " << m;
      EXPECT_EQ(o.all_principal_in_image, p == 2 && m == 2);
    }
  EXPECT_TRUE(phi_surjectivity_check(5, 6).ok());
}

TEST(Suites, Factorizations) {
  const auto f = all_factorizations(8);
  EXPECT_EQ(f.front(), std::vector<std::uint64_t>{});
  for (const auto& orders : f) EXPECT_TRUE(std::is_sorted(orders.rbegin(), orders.rend()));
  EXPECT_NE(std::find(f.begin(), f.end(), std::vector<std::uint64_t>{2, 2, 2}), f.end());
  EXPECT_NE(std::find(f.begin(), f.end(), std::vector<std::uint64_t>{4, 2}), f.end());
  EXPECT_EQ(std::find(f.begin(), f.end(), std::vector<std::uint64_t>{2, 4}), f.end());
}

TEST(Suites, UnknownNameThrows) {
  try {
    run_suite("section9", SuiteBounds{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_suite);
  }
}

TEST(Suites, JobsRecordExceptionsAsFailures) {
  std::vector<std::function<SuiteResult()>> jobs;
  jobs.emplace_back([] {
    SuiteResult r;
    r.check(true, "b");
    return r;
  });
  jobs.emplace_back([]() -> SuiteResult { throw Error(Errc::too_large, "boom"); });
  jobs.emplace_back([] {
    SuiteResult r;
    r.check(false, "a", "1", "2");
    return r;
  });
  const auto r = run_jobs("t", std::move(jobs), 2);
  EXPECT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].key, "a");
  EXPECT_FALSE(r.ok());
}

TEST(Suites, SmallBoundsPass) {
  SuiteBounds b;
  b.max_order = 6;
  for (const auto* name : {"section1", "section2", "section3", "section4"}) {
    const auto r = run_suite(name, b);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "" : r.failures[0].key);
    EXPECT_GT(r.cases, 0u);
  }
}
