#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grpring/abelian_group.hpp"
#include "grpring/modular_ring.hpp"
#include "grpring/prime_field_matrix.hpp"

namespace grpring {

/// An element of (Z/n)G as a dense coefficient vector over the group enumeration.
class GroupRingElement {
 public:
  GroupRingElement(RingDescriptor ring, FiniteAbelianGroup group);
  /// Coefficients are reduced into [0, n); throws when the length is not |G|.
  GroupRingElement(RingDescriptor ring, FiniteAbelianGroup group, std::vector<std::int64_t> coeffs);

  static GroupRingElement zero(const RingDescriptor& ring, const FiniteAbelianGroup& group);
  static GroupRingElement one(const RingDescriptor& ring, const FiniteAbelianGroup& group);
  /// r * g.
  static GroupRingElement monomial(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                   ElementIndex g, Residue r = 1);
  /// g - 1.
  static GroupRingElement g_minus_one(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                      ElementIndex g);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  Residue operator[](ElementIndex g) const { return coeffs_[g]; }
  bool is_zero() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.ring_ == b.ring_ && a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingDescriptor ring_;
  FiniteAbelianGroup group_;
  std::vector<Residue> coeffs_;

  friend GroupRingElement add(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement sub(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement mul(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement scalar_mul(Residue, const GroupRingElement&);
  friend GroupRingElement shift(ElementIndex, const GroupRingElement&);
};

/// Throw Errc::incompatible_operands on mismatched ring or group.
GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement sub(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement scalar_mul(Residue r, const GroupRingElement& x);
/// g * x.
GroupRingElement shift(ElementIndex g, const GroupRingElement& x);
GroupRingElement power(const GroupRingElement& x, std::uint64_t k);
Residue augmentation(const GroupRingElement& x);

/// Convolution kernel on raw coefficient spans: out = a * b over (Z/n)G.
/// out must not alias a or b.
void multiply_into(const FiniteAbelianGroup& group, std::uint64_t n, std::span<const Residue> a,
                   std::span<const Residue> b, std::span<Residue> out);

/// An ideal of F_pG stored as the RREF basis of the subspace it spans.
class IdealSubspace {
 public:
  IdealSubspace(RingDescriptor ring, FiniteAbelianGroup group);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const EchelonBasis& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.dimension(); }
  bool is_proper() const noexcept { return basis_.dimension() < group_.size(); }

  bool contains(const GroupRingElement& x) const;
  bool contains(std::span<const Residue> coeffs) const { return basis_.contains(coeffs); }
  bool contains(const IdealSubspace& other) const { return basis_.contains(other.basis_); }
  /// Closure under multiplication by every group element.
  bool is_ideal() const;

  friend bool operator==(const IdealSubspace& a, const IdealSubspace& b) {
    return a.group_ == b.group_ && a.basis_ == b.basis_;
  }

  /// Span of the given vectors with no ideal closure applied.
  static IdealSubspace from_rows(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                 std::span<const Vector> rows);
  static IdealSubspace from_basis(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                  EchelonBasis basis);

 private:
  RingDescriptor ring_;
  FiniteAbelianGroup group_;
  EchelonBasis basis_;
};

/// Throws Errc::unsupported_ring unless the coefficient ring is a prime field.
void require_prime_field(const RingDescriptor& ring);

IdealSubspace zero_ideal(const RingDescriptor& ring, const FiniteAbelianGroup& group);
IdealSubspace whole_ring(const RingDescriptor& ring, const FiniteAbelianGroup& group);
IdealSubspace augmentation_ideal(const RingDescriptor& ring, const FiniteAbelianGroup& group);

/// Phi(N) = I(R,N)RG: span of (h - 1) g over h in N, g in G.
IdealSubspace phi(const RingDescriptor& ring, const FiniteAbelianGroup& group, const Subgroup& n);

/// Psi(J) = G intersect (1 + J). Throws Errc::not_an_ideal when the result is not closed.
Subgroup psi(const IdealSubspace& ideal);

/// Span of x g over all generators x and all g in G.
IdealSubspace ideal_generated(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                              std::span<const GroupRingElement> generators);
IdealSubspace ideal_generated(const GroupRingElement& x);

bool contains(const IdealSubspace& ideal, const GroupRingElement& x);

/// Psi(J) when Phi(Psi(J)) == J, otherwise nothing.
std::optional<Subgroup> in_phi_image(const IdealSubspace& ideal);

/// Multiplication table of a commutative algebra in a fixed basis:
/// b_i * b_j = sum_k at(i, j, k) b_k.
struct StructureConstants {
  std::size_t dimension = 0;
  std::uint64_t prime = 2;
  std::vector<Residue> table;

  Residue at(std::size_t i, std::size_t j, std::size_t k) const {
    return table[(i * dimension + j) * dimension + k];
  }
  Residue& at(std::size_t i, std::size_t j, std::size_t k) {
    return table[(i * dimension + j) * dimension + k];
  }
  bool is_commutative() const;
  bool is_associative() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

/// Structure constants of RG/J in the basis of cosets of the non-pivot
/// coordinate vectors of J, listed in increasing coordinate order.
/// Throws Errc::not_a_proper_ideal when J = RG.
StructureConstants quotient_structure(const IdealSubspace& ideal);

/// Group elements whose cosets form the basis used by quotient_structure.
std::vector<ElementIndex> quotient_basis(const IdealSubspace& ideal);

/// Structure constants of R(G/N) in the coset basis of the quotient table.
StructureConstants group_algebra_structure(std::uint64_t p, const QuotientGroup& q);

/// Checks that g + Phi(N) -> gN is a well-defined bijection on bases and that it
/// carries the structure constants of RG/Phi(N) onto those of R(G/N).
bool verify_quotient_iso(const RingDescriptor& ring, const FiniteAbelianGroup& group, const Subgroup& n);

}  // namespace grpring
