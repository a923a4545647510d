#include "grpring/group_ring.hpp"

#include <algorithm>
#include <string>

namespace grpring {

namespace {

void require_compatible(const GroupRingElement& x, const GroupRingElement& y) {
  if (!(x.ring() == y.ring()) || !(x.group() == y.group()))
    throw Error(Errc::incompatible_operands, "operands live in different group rings");
}

}  // namespace

GroupRingElement::GroupRingElement(RingDescriptor ring, FiniteAbelianGroup group)
    : ring_(std::move(ring)), group_(std::move(group)), coeffs_(group_.size(), 0) {}

GroupRingElement::GroupRingElement(RingDescriptor ring, FiniteAbelianGroup group, std::vector<std::int64_t> coeffs)
    : ring_(std::move(ring)), group_(std::move(group)) {
  if (coeffs.size() != group_.size())
    throw Error(Errc::invalid_argument, "expected " + std::to_string(group_.size()) + " coefficients, got " +
                                            std::to_string(coeffs.size()));
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(reduce(ring_, c));
}

GroupRingElement GroupRingElement::zero(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  return GroupRingElement(ring, group);
}

GroupRingElement GroupRingElement::one(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  return monomial(ring, group, 0, 1);
}

GroupRingElement GroupRingElement::monomial(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                            ElementIndex g, Residue r) {
  GroupRingElement x(ring, group);
  x.coeffs_.at(g) = r % ring.modulus;
  return x;
}

GroupRingElement GroupRingElement::g_minus_one(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                               ElementIndex g) {
  GroupRingElement x(ring, group);
  x.coeffs_.at(g) = add(ring, x.coeffs_[g], 1 % ring.modulus);
  x.coeffs_[0] = sub(ring, x.coeffs_[0], 1 % ring.modulus);
  return x;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y) {
  require_compatible(x, y);
  GroupRingElement z = x;
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] = add(x.ring(), x.coeffs_[i], y.coeffs_[i]);
  return z;
}

GroupRingElement sub(const GroupRingElement& x, const GroupRingElement& y) {
  require_compatible(x, y);
  GroupRingElement z = x;
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] = sub(x.ring(), x.coeffs_[i], y.coeffs_[i]);
  return z;
}

void multiply_into(const FiniteAbelianGroup& group, std::uint64_t n, std::span<const Residue> a,
                   std::span<const Residue> b, std::span<Residue> out) {
  std::fill(out.begin(), out.end(), 0);
  const auto size = static_cast<ElementIndex>(group.size());
  for (ElementIndex g = 0; g < size; ++g) {
    if (a[g] == 0) continue;
    for (ElementIndex h = 0; h < size; ++h) {
      if (b[h] == 0) continue;
      auto& slot = out[group.op(g, h)];
      slot = (slot + a[g] * b[h]) % n;
    }
  }
}

GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y) {
  require_compatible(x, y);
  GroupRingElement z(x.ring(), x.group());
  multiply_into(x.group(), x.ring().modulus, x.coeffs_, y.coeffs_, z.coeffs_);
  return z;
}

GroupRingElement scalar_mul(Residue r, const GroupRingElement& x) {
  GroupRingElement z = x;
  for (auto& c : z.coeffs_) c = mul(x.ring(), r % x.ring().modulus, c);
  return z;
}

GroupRingElement shift(ElementIndex g, const GroupRingElement& x) {
  GroupRingElement z(x.ring(), x.group());
  for (ElementIndex h = 0; h < x.group().size(); ++h) z.coeffs_[x.group().op(g, h)] = x.coeffs_[h];
  return z;
}

GroupRingElement power(const GroupRingElement& x, std::uint64_t k) {
  GroupRingElement result = GroupRingElement::one(x.ring(), x.group());
  GroupRingElement base = x;
  while (k) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k) base = mul(base, base);
  }
  return result;
}

Residue augmentation(const GroupRingElement& x) {
  Residue s = 0;
  for (auto c : x.coeffs()) s = add(x.ring(), s, c);
  return s;
}

// ---------------------------------------------------------------------------

IdealSubspace::IdealSubspace(RingDescriptor ring, FiniteAbelianGroup group)
    : ring_(std::move(ring)), group_(std::move(group)), basis_(ring_.modulus, group_.size()) {
  require_prime_field(ring_);
}

IdealSubspace IdealSubspace::from_rows(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                       std::span<const Vector> rows) {
  IdealSubspace j(ring, group);
  for (const auto& r : rows) j.basis_.insert(r);
  return j;
}

IdealSubspace IdealSubspace::from_basis(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                                        EchelonBasis basis) {
  IdealSubspace j(ring, group);
  if (basis.prime() != ring.modulus || basis.width() != group.size())
    throw Error(Errc::incompatible_operands, "basis does not fit the group ring");
  j.basis_ = std::move(basis);
  return j;
}

bool IdealSubspace::contains(const GroupRingElement& x) const {
  if (!(x.ring() == ring_) || !(x.group() == group_))
    throw Error(Errc::incompatible_operands, "element and ideal live in different group rings");
  return basis_.contains(x.coeffs());
}

bool IdealSubspace::is_ideal() const {
  Vector moved(group_.size());
  for (const auto& row : basis_.rows()) {
    for (ElementIndex g = 1; g < group_.size(); ++g) {
      for (ElementIndex h = 0; h < group_.size(); ++h) moved[group_.op(g, h)] = row[h];
      if (!basis_.contains(moved)) return false;
    }
  }
  return true;
}

void require_prime_field(const RingDescriptor& ring) {
  if (!ring.is_field)
    throw Error(Errc::unsupported_ring,
                "linear-algebra ideals need a prime field, got Z/" + std::to_string(ring.modulus));
}

IdealSubspace zero_ideal(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  return IdealSubspace(ring, group);
}

IdealSubspace whole_ring(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  return ideal_generated(ring, group, std::vector{GroupRingElement::one(ring, group)});
}

IdealSubspace augmentation_ideal(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  require_prime_field(ring);
  std::vector<Vector> rows;
  for (ElementIndex g = 1; g < group.size(); ++g) rows.push_back(GroupRingElement::g_minus_one(ring, group, g).coeffs());
  return IdealSubspace::from_rows(ring, group, rows);
}

IdealSubspace phi(const RingDescriptor& ring, const FiniteAbelianGroup& group, const Subgroup& n) {
  require_prime_field(ring);
  EchelonBasis basis(ring.modulus, group.size());
  const Residue minus_one = ring.modulus - 1;
  Vector v(group.size(), 0);
  for (auto h : n.elements) {
    if (h == 0) continue;
    for (ElementIndex g = 0; g < group.size(); ++g) {
      if (basis.dimension() == group.size()) break;
      // (h - 1) g = hg - g
      const auto hg = group.op(h, g);
      v[hg] = 1;
      v[g] = minus_one;
      basis.insert(v);
      v[hg] = 0;
      v[g] = 0;
    }
  }
  return IdealSubspace::from_basis(ring, group, std::move(basis));
}

Subgroup psi(const IdealSubspace& ideal) {
  const auto& group = ideal.group();
  Subgroup s;
  for (ElementIndex g = 1; g < group.size(); ++g)
    if (ideal.contains(GroupRingElement::g_minus_one(ideal.ring(), group, g).coeffs())) s.elements.push_back(g);
  if (!is_subgroup(group, s.elements))
    throw Error(Errc::not_an_ideal, "G intersect (1 + J) is not a subgroup; J is not an ideal");
  s.generators = generating_set(group, s);
  return s;
}

IdealSubspace ideal_generated(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                              std::span<const GroupRingElement> generators) {
  require_prime_field(ring);
  EchelonBasis basis(ring.modulus, group.size());
  Vector moved(group.size());
  for (const auto& x : generators) {
    if (!(x.ring() == ring) || !(x.group() == group))
      throw Error(Errc::incompatible_operands, "generator lives in a different group ring");
    for (ElementIndex g = 0; g < group.size(); ++g) {
      if (basis.dimension() == group.size()) break;
      for (ElementIndex h = 0; h < group.size(); ++h) moved[group.op(g, h)] = x[h];
      basis.insert(moved);
    }
  }
  return IdealSubspace::from_basis(ring, group, std::move(basis));
}

IdealSubspace ideal_generated(const GroupRingElement& x) {
  return ideal_generated(x.ring(), x.group(), std::span<const GroupRingElement>(&x, 1));
}

bool contains(const IdealSubspace& ideal, const GroupRingElement& x) { return ideal.contains(x); }

std::optional<Subgroup> in_phi_image(const IdealSubspace& ideal) {
  Subgroup n;
  try {
    n = psi(ideal);
  } catch (const Error& e) {
    if (e.code() == Errc::not_an_ideal) return std::nullopt;
    throw;
  }
  if (phi(ideal.ring(), ideal.group(), n).basis() == ideal.basis()) return n;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

bool StructureConstants::is_commutative() const {
  for (std::size_t i = 0; i < dimension; ++i)
    for (std::size_t j = 0; j < dimension; ++j)
      for (std::size_t k = 0; k < dimension; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

bool StructureConstants::is_associative() const {
  const auto d = dimension;
  // (b_i b_j) b_l versus b_i (b_j b_l), both expanded in the basis.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t t = 0; t < d; ++t) {
          Residue left = 0, right = 0;
          for (std::size_t k = 0; k < d; ++k) {
            left = (left + at(i, j, k) * at(k, l, t)) % prime;
            right = (right + at(j, l, k) * at(i, k, t)) % prime;
          }
          if (left != right) return false;
        }
  return true;
}

std::vector<ElementIndex> quotient_basis(const IdealSubspace& ideal) {
  std::vector<char> is_pivot(ideal.group().size(), 0);
  for (auto c : ideal.basis().pivots()) is_pivot[c] = 1;
  std::vector<ElementIndex> out;
  for (ElementIndex g = 0; g < ideal.group().size(); ++g)
    if (!is_pivot[g]) out.push_back(g);
  return out;
}

StructureConstants quotient_structure(const IdealSubspace& ideal) {
  if (!ideal.is_proper()) throw Error(Errc::not_a_proper_ideal, "RG / RG has no basis");
  const auto& group = ideal.group();
  const auto basis = quotient_basis(ideal);

  StructureConstants sc;
  sc.dimension = basis.size();
  sc.prime = ideal.ring().modulus;
  sc.table.assign(sc.dimension * sc.dimension * sc.dimension, 0);
  Vector v(group.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto prod = group.op(basis[i], basis[j]);
      v[prod] = 1;
      const auto normal = ideal.basis().reduce(v);
      v[prod] = 0;
      // The normal form is supported on non-pivot columns only.
      for (std::size_t k = 0; k < basis.size(); ++k) sc.at(i, j, k) = normal[basis[k]];
    }
  }
  return sc;
}

StructureConstants group_algebra_structure(std::uint64_t p, const QuotientGroup& q) {
  StructureConstants sc;
  sc.dimension = q.count();
  sc.prime = p;
  sc.table.assign(sc.dimension * sc.dimension * sc.dimension, 0);
  for (std::uint32_t a = 0; a < q.count(); ++a)
    for (std::uint32_t b = 0; b < q.count(); ++b) sc.at(a, b, q.multiply(a, b)) = 1;
  return sc;
}

bool verify_quotient_iso(const RingDescriptor& ring, const FiniteAbelianGroup& group, const Subgroup& n) {
  require_prime_field(ring);
  const auto ideal = phi(ring, group, n);
  const auto q = quotient(group, n);
  if (!ideal.is_proper()) return false;
  const auto basis = quotient_basis(ideal);
  if (basis.size() != q.count()) return false;

  // Relabel: basis slot k of RG/J goes to the coset of its group element.
  std::vector<std::uint32_t> slot_to_coset(basis.size());
  std::vector<char> hit(q.count(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    slot_to_coset[k] = q.coset_of[basis[k]];
    if (hit[slot_to_coset[k]]) return false;
    hit[slot_to_coset[k]] = 1;
  }

  // Well-definedness: every g reduces mod J to the basis element of its own coset.
  Vector v(group.size(), 0);
  for (ElementIndex g = 0; g < group.size(); ++g) {
    v[g] = 1;
    const auto normal = ideal.basis().reduce(v);
    v[g] = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Residue expected = slot_to_coset[k] == q.coset_of[g] ? 1 : 0;
      if (normal[basis[k]] != expected) return false;
    }
  }

  const auto lhs = quotient_structure(ideal);
  const auto rhs = group_algebra_structure(ring.modulus, q);
  for (std::size_t i = 0; i < lhs.dimension; ++i)
    for (std::size_t j = 0; j < lhs.dimension; ++j)
      for (std::size_t k = 0; k < lhs.dimension; ++k)
        if (lhs.at(i, j, k) != rhs.at(slot_to_coset[i], slot_to_coset[j], slot_to_coset[k])) return false;
  return true;
}

}  // namespace grpring
