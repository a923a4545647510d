#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grpring/group_ring.hpp"

namespace grpring {

/// Coefficient matrix of the system x y = target over F_p C_m, unknowns the
/// coefficients s_c of y. Row r is the equation for the coefficient of
/// g^(m-1-r), so entry (r, c) is r_{(m-1-r-c) mod m}:
///
///     r_{m-1} r_{m-2} ... r_0
///     r_{m-2} r_{m-3} ... r_{m-1}
///       ...
///     r_0     r_{m-1} ... r_1
struct CirculantMatrix {
  std::size_t m = 0;
  FpMatrix rows;

  /// Row index of the equation for the coefficient of g^k.
  std::size_t row_of_power(std::size_t k) const { return m - 1 - k; }
};

/// Throws Errc::unsupported_group unless G is presented as a single cyclic
/// factor, Errc::unsupported_ring unless R is a prime field.
CirculantMatrix build_circulant(const GroupRingElement& x);

/// A_x with the right-hand side of x y = g^n - 1 appended: +1 in the g^n row
/// (index m-1-n), -1 in the g^0 row (index m-1). Requires 0 < n < m.
FpMatrix build_augmented(const GroupRingElement& x, std::uint64_t n);

/// g^n - 1 in xRG, decided by rank(A_x) == rank(augmented).
bool contains_power_minus_one(const GroupRingElement& x, std::uint64_t n);

/// The d = gcd(m, n) progression sums sum_{i<e} r_{j+id}, j = 0..d-1, e = m/d.
std::vector<Residue> progression_sums(const GroupRingElement& x, std::uint64_t d);

/// x in (g^n - 1)RG, decided by vanishing of the progression sums for gcd(m, n).
bool in_power_ideal(const GroupRingElement& x, std::uint64_t n);

/// dim_F xRG, computed as rank(A_x).
std::size_t principal_dimension(const GroupRingElement& x);

enum class Verdict { in_image, not_in_image, zero_element, unit_element };
enum class FailedCheck { d_not_divisor, condition42_failed, rank_mismatch };

std::string_view to_string(Verdict v);
std::string_view to_string(FailedCheck c);

struct ClassificationReport {
  Verdict verdict = Verdict::zero_element;
  std::optional<FailedCheck> reason;
  std::uint64_t prime = 2;
  std::uint64_t m = 0;
  std::size_t rank_a = 0;
  std::uint64_t d = 0;
  /// m / d once d is known to divide m.
  std::optional<std::uint64_t> e;
  std::vector<Residue> condition42;
  std::optional<std::size_t> rank_a_tilde;
  /// <g^d> on in-image.
  std::optional<Subgroup> subgroup;

  /// "<g^4>" when in-image.
  std::string subgroup_label() const;
  /// "F_5 C_4" when in-image.
  std::string quotient_label() const;
};

/// Decides whether xRG = Phi(N) for a subgroup N of the cyclic group, using
/// d = m - rank(A_x) and, in order, the divisor check, the progression sums
/// for n = d, and the rank of the augmented matrix for n = d.
ClassificationReport classify_principal(const GroupRingElement& x);

// ---------------------------------------------------------------------------

/// Element of R C_infinity with R = F_p (modulus p) or the integers (modulus 0).
/// Terms map exponent -> nonzero coefficient; field coefficients lie in [0, p).
class LaurentElement {
 public:
  explicit LaurentElement(std::uint64_t modulus = 0);
  /// Throws Errc::unsupported_ring unless modulus is 0 or prime.
  LaurentElement(std::uint64_t modulus, const std::map<std::int64_t, std::int64_t>& terms);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(std::int64_t exponent) const;

  /// Coefficient normalization: reduced mod p over a field, unchanged over the integers.
  std::int64_t normalize(std::int64_t c) const;
  bool is_unit_coefficient(std::int64_t c) const;

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);

  static LaurentElement monomial(std::uint64_t modulus, std::int64_t exponent, std::int64_t coeff);

 private:
  void add_term(std::int64_t exponent, std::int64_t coeff);

  std::uint64_t modulus_;
  std::map<std::int64_t, std::int64_t> terms_;
};

enum class LaurentVerdict { in_image, not_in_image, zero_element, unit_element };
std::string_view to_string(LaurentVerdict v);

struct LaurentReport {
  LaurentVerdict verdict = LaurentVerdict::zero_element;
  /// h = g^k with k > 0, so that xRG = Phi(<h>).
  std::optional<std::int64_t> h_exponent;
  /// x = u g_1 - u g_2 on in-image.
  std::optional<std::int64_t> unit;
  std::optional<std::int64_t> g1_exponent;
  std::optional<std::int64_t> g2_exponent;
};

/// xRG = Phi(N), N != 1, iff x = u g_1 - u g_2 with u a unit of R.
LaurentReport classify_laurent(const LaurentElement& x);

/// q with x = q (g^k - 1) when g^k - 1 divides x exactly (k >= 1), by long division.
std::optional<LaurentElement> exact_quotient_power_minus_one(const LaurentElement& x, std::int64_t k);

}  // namespace grpring
