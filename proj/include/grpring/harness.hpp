#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpring/group_ring.hpp"

namespace grpring {

// --- counterexample constructors -------------------------------------------

/// A non-unit principal ideal xRG together with the oracle verdict that it is
/// not Phi(N) for any subgroup N.
struct Counterexample {
  GroupRingElement element;
  IdealSubspace ideal;
  /// in_phi_image(ideal) came back empty.
  bool excluded = false;
  /// Group elements the construction was built from (g, or f_1 and f_2).
  std::vector<ElementIndex> witnesses;
  /// For the order-4 construction: dims of 0, (g-1)^3RG, (g-1)^2RG.
  std::vector<std::size_t> chain_dimensions;
  /// For the order-4 construction: (g-1)^2RG == Phi(<g^2>) and the chain is strict.
  bool chain_verified = false;
};

/// x = (g - 1)^2 for an element g of order p, over F_p with p odd and G a
/// nontrivial p-group. Throws Errc::not_applicable otherwise.
Counterexample counterexample_odd_square(std::uint64_t p, const FiniteAbelianGroup& group);

/// x = (g - 1)^3 for an element g of order 4, over F_2 with G a 2-group.
Counterexample counterexample_order_four_cube(const FiniteAbelianGroup& group);

/// x = (1 + f_1)(1 + f_2) over F_2 for G an elementary abelian 2-group of order >= 4.
Counterexample counterexample_elementary_pair(const FiniteAbelianGroup& group);

/// Every g - 1 is nilpotent in F_pG; then I(G) is the unique prime ideal.
bool unique_prime_check(const RingDescriptor& ring, const FiniteAbelianGroup& group);

// --- ideal census ----------------------------------------------------------

/// Number of subspaces of F_p^n (sum of Gaussian binomials), saturated at 2^63.
std::uint64_t subspace_count(std::uint64_t p, std::size_t n);

struct LatticeCensus {
  static constexpr std::uint64_t kMaxSubspaces = 1'000'000;

  std::vector<std::uint64_t> group;
  std::uint64_t modulus = 2;
  std::size_t subgroup_count = 0;
  /// (N, dim Phi(N)) for every subgroup N.
  std::vector<std::pair<Subgroup, std::size_t>> phi_image;
  /// Filled only when the subspace count is within kMaxSubspaces.
  std::optional<std::size_t> ideal_count;
  /// Psi-fiber sizes over non-unit ideals, one entry per subgroup, same order as phi_image.
  std::optional<std::vector<std::pair<Subgroup, std::size_t>>> fiber_sizes;
  std::optional<std::vector<IdealSubspace>> non_unit_ideals;
  /// Every non-unit ideal is some Phi(N).
  std::optional<bool> phi_image_is_everything;
  /// Phi(N) lies in the fiber of N for every N.
  std::optional<bool> phi_in_own_fiber;
};

/// Enumerates every subspace of F_pG in RREF, keeps those closed under the group,
/// and sorts the non-unit ones into Psi-fibers. Beyond kMaxSubspaces only the
/// Phi image is listed.
LatticeCensus ideal_census(const RingDescriptor& ring, const FiniteAbelianGroup& group);

// --- suites ----------------------------------------------------------------

struct CaseFailure {
  std::string key;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  double wall_ms = 0.0;

  bool ok() const noexcept { return failures.empty(); }
  void check(bool condition, std::string key, std::string expected = "true", std::string actual = "false");
  void merge(SuiteResult other);
};

/// Both sides of the equivalence for (F_p, C_m): Phi(S) = T per census, and every
/// non-unit principal ideal lies in Phi(S); both must hold iff p = 2 and m = 2.
struct PhiSurjectivityOutcome {
  bool expected_positive = false;
  bool all_principal_in_image = false;
  /// From the census when exhaustive; otherwise implied false by a principal counterexample.
  std::optional<bool> phi_image_is_everything;
  bool holds = false;
};

PhiSurjectivityOutcome phi_surjectivity_outcome(std::uint64_t p, std::uint64_t m);
SuiteResult phi_surjectivity_check(std::uint64_t p, std::uint64_t m);

struct SuiteBounds {
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint64_t phi_max_order = 24;
  std::uint64_t quotient_max_order = 16;
  std::uint64_t radical_max_order = 12;
  std::uint64_t seed = 1;
  /// Caps all orders above when set.
  std::optional<std::uint64_t> max_order;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Every list of cyclic factors (non-increasing, each >= 2) with product <= max_order,
/// including the empty list for the trivial group.
std::vector<std::vector<std::uint64_t>> all_factorizations(std::uint64_t max_order);

/// classify_laurent against exact division by g^k - 1, over every element with
/// at most 4 terms, exponents in [-4, 4] (integers, modulus 0: 3 terms, [-3, 3], |c| <= 3).
SuiteResult laurent_sweep(std::uint64_t modulus);

SuiteResult run_section1(const SuiteBounds& bounds);
SuiteResult run_section2(const SuiteBounds& bounds);
SuiteResult run_section3(const SuiteBounds& bounds);
SuiteResult run_section4(const SuiteBounds& bounds);

/// name is section1..section4 or all. Throws Errc::unknown_suite otherwise.
SuiteResult run_suite(const std::string& name, const SuiteBounds& bounds);

/// Runs independent jobs on a small worker pool; results are merged in job order.
SuiteResult run_jobs(const std::string& name, std::vector<std::function<SuiteResult()>> jobs, unsigned workers);

}  // namespace grpring
