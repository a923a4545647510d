#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpring/group_ring.hpp"

namespace grpring {

/// Sorted codes of elements of a small group ring, see GroupRingScan.
using ElementSet = std::vector<std::uint32_t>;

/// Exhaustive view of (Z/n)G for |R|^|G| <= 2^16. Element codes are the
/// coefficient vectors read as base-n numerals, coefficient 0 least significant.
class GroupRingScan {
 public:
  static constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 16;

  /// Throws Errc::too_large beyond kMaxElements.
  GroupRingScan(RingDescriptor ring, FiniteAbelianGroup group);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::uint32_t count() const noexcept { return count_; }

  std::uint32_t encode(std::span<const Residue> coeffs) const;
  void decode(std::uint32_t code, std::span<Residue> out) const;
  std::uint32_t encode(const GroupRingElement& x) const { return encode(x.coeffs()); }
  GroupRingElement element(std::uint32_t code) const;

  std::uint32_t one() const noexcept { return 1; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

  /// unit[c] != 0 iff c is invertible, found by walking powers until 1 or a repeat.
  std::vector<char> unit_table() const;

  /// Additive closure of {x g : x in gens, g in G}, i.e. the ideal they generate.
  ElementSet ideal_closure(std::span<const std::uint32_t> gens) const;

 private:
  RingDescriptor ring_;
  FiniteAbelianGroup group_;
  std::uint32_t count_ = 1;
};

/// I(G) is nil iff G is a p-group and p is nilpotent in R, for one prime p.
/// The trivial group has I(G) = 0 and is reported as true.
bool aug_in_nilradical(const RingDescriptor& ring, const FiniteAbelianGroup& group);

enum class RadicalKind { nilradical, jacobson };
enum class ClosedForm { zero, phi_of, no_closed_form_in_scope };

std::string_view to_string(RadicalKind kind);
std::string_view to_string(ClosedForm form);

struct RadicalReport {
  RadicalKind kind = RadicalKind::nilradical;
  ClosedForm closed_form = ClosedForm::no_closed_form_in_scope;
  /// Set when closed_form is phi_of.
  std::optional<Subgroup> subgroup;
  std::vector<std::string> containment_facts;
  /// Ideal generators (Jacobson form over torsion G; empty for the nilradical).
  std::vector<GroupRingElement> generators;
  /// Echelon basis, prime fields only.
  std::optional<IdealSubspace> subspace;
};

RadicalReport nilradical_closed_form(const RingDescriptor& ring, const FiniteAbelianGroup& group);

/// J(RG) = J(R)G + { r(g - 1) : g in G_p, r in (J(R) : p), p in supp G } RG for finite G.
std::vector<GroupRingElement> jacobson_generators(const RingDescriptor& ring, const FiniteAbelianGroup& group);
RadicalReport jacobson_closed_form(const RingDescriptor& ring, const FiniteAbelianGroup& group);

/// Kernel of x -> x^(p^t) on F_pG with p^t >= |G| smallest. Refuses |G| > 4096.
IdealSubspace nilradical_frobenius(const RingDescriptor& ring, const FiniteAbelianGroup& group);

/// {x : x^k = 0 for some k}, by repeated squaring with cycle detection.
ElementSet nilpotent_bruteforce(const RingDescriptor& ring, const FiniteAbelianGroup& group);

/// {x : 1 - xy is a unit for every y}.
ElementSet jacobson_bruteforce(const RingDescriptor& ring, const FiniteAbelianGroup& group);

/// All p^dim elements of a subspace, as scan codes.
ElementSet subspace_elements(const GroupRingScan& scan, const IdealSubspace& ideal);

}  // namespace grpring
