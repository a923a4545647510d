#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grpring/error.hpp"

namespace grpring {

/// Position of an element in the fixed enumeration of a finite abelian group.
using ElementIndex = std::uint32_t;

struct GroupElement {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// C_{m_1} x ... x C_{m_k}, written multiplicatively. Elements are enumerated
/// row-major: index = sum_i e_i * prod_{j>i} m_j, so index 0 is the identity
/// and, for a single factor, index i is g^i.
class FiniteAbelianGroup {
 public:
  /// Trivial group.
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> orders);

  const std::vector<std::uint64_t>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  bool is_cyclic_presentation() const noexcept { return orders_.size() == 1; }

  GroupElement element_of(ElementIndex index) const;
  /// Exponents are reduced mod each factor order first, so any integers are accepted.
  ElementIndex index_of(const GroupElement& element) const;

  ElementIndex op(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const;
  ElementIndex power(ElementIndex a, std::int64_t k) const;
  std::uint64_t order_of(ElementIndex a) const;

  GroupElement op(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  std::uint64_t order_of(const GroupElement& a) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::size_t size_ = 1;
  // Cayley table for small groups; shared so copies stay cheap.
  std::shared_ptr<const std::vector<ElementIndex>> table_;
};

FiniteAbelianGroup make_group(std::vector<std::uint64_t> orders);

/// A subgroup in canonical form: the sorted list of its element indices.
/// Generators are informational and never take part in equality.
struct Subgroup {
  std::vector<ElementIndex> elements{0};
  std::vector<GroupElement> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(ElementIndex g) const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  }
};

struct QuotientGroup {
  std::vector<ElementIndex> coset_representatives;
  std::vector<std::uint32_t> coset_of;
  /// table[a * count + b] = coset of (rep_a * rep_b).
  std::vector<std::uint32_t> table;

  std::size_t count() const noexcept { return coset_representatives.size(); }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return table[a * count() + b]; }
};

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteAbelianGroup& group);

/// Closure of the generators under the group operation (finite, so inverses come for free).
Subgroup subgroup_generated(const FiniteAbelianGroup& group, std::span<const GroupElement> gens);
Subgroup subgroup_generated(const FiniteAbelianGroup& group, std::span<const ElementIndex> gens);
Subgroup join(const FiniteAbelianGroup& group, const Subgroup& a, const Subgroup& b);

/// Checks closure under the operation and inverses and membership of the identity.
bool is_subgroup(const FiniteAbelianGroup& group, std::span<const ElementIndex> sorted_elements);

/// Elements of p-power order, p prime.
Subgroup sylow_component(const FiniteAbelianGroup& group, std::uint64_t p);

/// Primes p with G_p != 1.
std::vector<std::uint64_t> supp(const FiniteAbelianGroup& group);

/// True when |G| is a power of p (the trivial group counts for every p).
bool is_p_group(const FiniteAbelianGroup& group, std::uint64_t p);

/// Every subgroup, ordered by (order, element list). Refuses |G| > 4096.
/// Cyclic subgroups are collected first and then joined pairwise until
/// nothing new appears; every subgroup is a join of cyclic ones.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& group);

QuotientGroup quotient(const FiniteAbelianGroup& group, const Subgroup& subgroup);

/// gcd(m, n) for 0 < n < m; <g^n> = <g^d> in C_m.
std::uint64_t cyclic_reduce(std::uint64_t m, std::uint64_t n);

/// Greedy generating set in index order, used to fill Subgroup::generators.
std::vector<GroupElement> generating_set(const FiniteAbelianGroup& group, const Subgroup& subgroup);

/// "<g^4>" for cyclic groups, "<(1,0),(0,2)>" otherwise, "1" for the trivial subgroup.
std::string describe(const FiniteAbelianGroup& group, const Subgroup& subgroup);

}  // namespace grpring
