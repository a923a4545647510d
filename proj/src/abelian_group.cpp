#include "grpring/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "grpring/modular_ring.hpp"

namespace grpring {

namespace {

constexpr std::size_t kMaxGroupSize = std::size_t{1} << 20;
constexpr std::size_t kMaxTableSize = 512;
constexpr std::size_t kMaxSubgroupEnumeration = 4096;

std::int64_t mod_floor(std::int64_t a, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = a % mm;
  return r < 0 ? r + mm : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
  size_ = 1;
  for (auto m : orders_) {
    if (m < 2) throw Error(Errc::invalid_argument, "cyclic factor orders must be at least 2");
    if (size_ * m > kMaxGroupSize) throw Error(Errc::too_large, "group order exceeds 2^20");
    size_ *= m;
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];

  if (size_ <= kMaxTableSize && orders_.size() > 1) {
    auto table = std::make_shared<std::vector<ElementIndex>>(size_ * size_);
    for (ElementIndex a = 0; a < size_; ++a) {
      const auto ea = element_of(a);
      for (ElementIndex b = 0; b < size_; ++b) {
        const auto eb = element_of(b);
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i)
          idx += ((ea.exponents[i] + eb.exponents[i]) % orders_[i]) * strides_[i];
        (*table)[a * size_ + b] = static_cast<ElementIndex>(idx);
      }
    }
    table_ = std::move(table);
  }
}

FiniteAbelianGroup make_group(std::vector<std::uint64_t> orders) { return FiniteAbelianGroup(std::move(orders)); }

GroupElement FiniteAbelianGroup::element_of(ElementIndex index) const {
  GroupElement e;
  e.exponents.resize(orders_.size());
  std::uint64_t rest = index;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e.exponents[i] = static_cast<std::int64_t>(rest / strides_[i]);
    rest %= strides_[i];
  }
  return e;
}

ElementIndex FiniteAbelianGroup::index_of(const GroupElement& element) const {
  if (element.exponents.size() != orders_.size())
    throw Error(Errc::invalid_argument, "exponent vector length does not match the group");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    idx += static_cast<std::uint64_t>(mod_floor(element.exponents[i], orders_[i])) * strides_[i];
  return static_cast<ElementIndex>(idx);
}

ElementIndex FiniteAbelianGroup::op(ElementIndex a, ElementIndex b) const {
  if (table_) return (*table_)[a * size_ + b];
  if (orders_.size() == 1) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<ElementIndex>(s >= size_ ? s - size_ : s);
  }
  std::uint64_t idx = 0;
  std::uint64_t ra = a, rb = b;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint64_t da = ra / strides_[i], db = rb / strides_[i];
    ra %= strides_[i];
    rb %= strides_[i];
    idx += ((da + db) % orders_[i]) * strides_[i];
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex FiniteAbelianGroup::inverse(ElementIndex a) const {
  auto e = element_of(a);
  for (auto& x : e.exponents) x = -x;
  return index_of(e);
}

ElementIndex FiniteAbelianGroup::power(ElementIndex a, std::int64_t k) const {
  auto e = element_of(a);
  for (std::size_t i = 0; i < e.exponents.size(); ++i)
    e.exponents[i] = mod_floor(mod_floor(k, orders_[i]) * e.exponents[i], orders_[i]);
  return index_of(e);
}

std::uint64_t FiniteAbelianGroup::order_of(ElementIndex a) const { return order_of(element_of(a)); }

GroupElement FiniteAbelianGroup::op(const GroupElement& a, const GroupElement& b) const {
  return element_of(op(index_of(a), index_of(b)));
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& a) const { return element_of(inverse(index_of(a))); }

std::uint64_t FiniteAbelianGroup::order_of(const GroupElement& a) const {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto e = static_cast<std::uint64_t>(mod_floor(a.exponents[i], orders_[i]));
    order = lcm(order, orders_[i] / gcd(orders_[i], e));
  }
  return order;
}

bool Subgroup::contains(ElementIndex g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

Subgroup trivial_subgroup() { return Subgroup{}; }

Subgroup whole_group(const FiniteAbelianGroup& group) {
  Subgroup s;
  s.elements.resize(group.size());
  std::iota(s.elements.begin(), s.elements.end(), ElementIndex{0});
  s.generators = generating_set(group, s);
  return s;
}

namespace {

std::vector<ElementIndex> closure(const FiniteAbelianGroup& group, std::span<const ElementIndex> gens) {
  std::vector<char> seen(group.size(), 0);
  std::vector<ElementIndex> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : gens) {
      const auto h = group.op(members[i], g);
      if (!seen[h]) {
        seen[h] = 1;
        members.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup subgroup_generated(const FiniteAbelianGroup& group, std::span<const ElementIndex> gens) {
  Subgroup s;
  s.elements = closure(group, gens);
  for (auto g : gens) s.generators.push_back(group.element_of(g));
  return s;
}

Subgroup subgroup_generated(const FiniteAbelianGroup& group, std::span<const GroupElement> gens) {
  std::vector<ElementIndex> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) idx.push_back(group.index_of(g));
  return subgroup_generated(group, std::span<const ElementIndex>(idx));
}

Subgroup join(const FiniteAbelianGroup& group, const Subgroup& a, const Subgroup& b) {
  std::vector<ElementIndex> gens;
  for (const auto& g : a.generators) gens.push_back(group.index_of(g));
  for (const auto& g : b.generators) gens.push_back(group.index_of(g));
  if (a.generators.empty() && a.order() > 1) gens.insert(gens.end(), a.elements.begin(), a.elements.end());
  if (b.generators.empty() && b.order() > 1) gens.insert(gens.end(), b.elements.begin(), b.elements.end());
  auto s = subgroup_generated(group, std::span<const ElementIndex>(gens));
  s.generators = generating_set(group, s);
  return s;
}

bool is_subgroup(const FiniteAbelianGroup& group, std::span<const ElementIndex> sorted_elements) {
  auto has = [&](ElementIndex g) {
    return std::binary_search(sorted_elements.begin(), sorted_elements.end(), g);
  };
  if (!has(0)) return false;
  for (auto a : sorted_elements) {
    if (!has(group.inverse(a))) return false;
    for (auto b : sorted_elements)
      if (!has(group.op(a, b))) return false;
  }
  return true;
}

Subgroup sylow_component(const FiniteAbelianGroup& group, std::uint64_t p) {
  Subgroup s;
  s.elements.clear();
  for (ElementIndex g = 0; g < group.size(); ++g) {
    std::uint64_t order = group.order_of(g);
    while (order % p == 0) order /= p;
    if (order == 1) s.elements.push_back(g);
  }
  s.generators = generating_set(group, s);
  return s;
}

std::vector<std::uint64_t> supp(const FiniteAbelianGroup& group) {
  if (group.size() == 1) return {};
  return prime_divisors(group.size());
}

bool is_p_group(const FiniteAbelianGroup& group, std::uint64_t p) {
  std::uint64_t n = group.size();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& group) {
  if (group.size() > kMaxSubgroupEnumeration)
    throw Error(Errc::too_large, "subgroup enumeration is limited to |G| <= 4096");
  std::set<Subgroup> found;
  for (ElementIndex g = 0; g < group.size(); ++g) {
    const ElementIndex gen[] = {g};
    auto s = subgroup_generated(group, std::span<const ElementIndex>(gen));
    s.generators = generating_set(group, s);
    found.insert(std::move(s));
  }
  std::vector<Subgroup> frontier(found.begin(), found.end());
  const std::vector<Subgroup> cyclic = frontier;
  // Joining with cyclic subgroups alone reaches every finitely generated subgroup.
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& a : frontier) {
      for (const auto& c : cyclic) {
        if (c.is_subset_of(a)) continue;
        auto j = join(group, a, c);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

QuotientGroup quotient(const FiniteAbelianGroup& group, const Subgroup& subgroup) {
  QuotientGroup q;
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  q.coset_of.assign(group.size(), kUnset);
  for (ElementIndex g = 0; g < group.size(); ++g) {
    if (q.coset_of[g] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(q.coset_representatives.size());
    q.coset_representatives.push_back(g);
    for (auto h : subgroup.elements) q.coset_of[group.op(g, h)] = c;
  }
  const std::size_t k = q.count();
  q.table.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      q.table[a * k + b] = q.coset_of[group.op(q.coset_representatives[a], q.coset_representatives[b])];
  return q;
}

std::uint64_t cyclic_reduce(std::uint64_t m, std::uint64_t n) {
  if (n == 0 || n >= m) throw Error(Errc::invalid_argument, "cyclic_reduce requires 0 < n < m");
  return gcd(m, n);
}

std::vector<GroupElement> generating_set(const FiniteAbelianGroup& group, const Subgroup& subgroup) {
  std::vector<ElementIndex> gens;
  std::vector<ElementIndex> current{0};
  for (auto g : subgroup.elements) {
    if (std::binary_search(current.begin(), current.end(), g)) continue;
    gens.push_back(g);
    current = closure(group, gens);
  }
  std::vector<GroupElement> out;
  for (auto g : gens) out.push_back(group.element_of(g));
  return out;
}

std::string describe(const FiniteAbelianGroup& group, const Subgroup& subgroup) {
  if (subgroup.order() == 1) return "1";
  if (group.is_cyclic_presentation()) {
    // Cyclic subgroups of C_m are exactly <g^d> with d = m / |N|.
    return "<g^" + std::to_string(group.size() / subgroup.order()) + ">";
  }
  const auto gens = subgroup.generators.empty() ? generating_set(group, subgroup) : subgroup.generators;
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += "(";
    for (std::size_t j = 0; j < gens[i].exponents.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(gens[i].exponents[j]);
    }
    out += ")";
  }
  return out + ">";
}

}  // namespace grpring
