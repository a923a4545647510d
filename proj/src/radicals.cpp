#include "grpring/radicals.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace grpring {

std::string_view to_string(RadicalKind kind) {
  return kind == RadicalKind::nilradical ? "nilradical" : "jacobson";
}

std::string_view to_string(ClosedForm form) {
  switch (form) {
    case ClosedForm::zero: return "zero";
    case ClosedForm::phi_of: return "phi-of";
    case ClosedForm::no_closed_form_in_scope: return "no-closed-form-in-scope";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

GroupRingScan::GroupRingScan(RingDescriptor ring, FiniteAbelianGroup group)
    : ring_(std::move(ring)), group_(std::move(group)) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < group_.size(); ++i) {
    total *= ring_.modulus;
    if (total > kMaxElements)
      throw Error(Errc::too_large, "exhaustive scans need |R|^|G| <= 2^16");
  }
  count_ = static_cast<std::uint32_t>(total);
}

std::uint32_t GroupRingScan::encode(std::span<const Residue> coeffs) const {
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * ring_.modulus + coeffs[i];
  return static_cast<std::uint32_t>(code);
}

void GroupRingScan::decode(std::uint32_t code, std::span<Residue> out) const {
  for (auto& c : out) {
    c = code % ring_.modulus;
    code /= ring_.modulus;
  }
}

GroupRingElement GroupRingScan::element(std::uint32_t code) const {
  std::vector<std::int64_t> coeffs(group_.size());
  std::vector<Residue> tmp(group_.size());
  decode(code, tmp);
  std::copy(tmp.begin(), tmp.end(), coeffs.begin());
  return GroupRingElement(ring_, group_, std::move(coeffs));
}

std::uint32_t GroupRingScan::add(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t code = 0, place = 1;
  for (std::size_t i = 0; i < group_.size(); ++i) {
    const std::uint64_t s = (a % ring_.modulus + b % ring_.modulus) % ring_.modulus;
    a /= ring_.modulus;
    b /= ring_.modulus;
    code += s * place;
    place *= ring_.modulus;
  }
  return static_cast<std::uint32_t>(code);
}

std::uint32_t GroupRingScan::sub(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t code = 0, place = 1;
  for (std::size_t i = 0; i < group_.size(); ++i) {
    const std::uint64_t s = (a % ring_.modulus + ring_.modulus - b % ring_.modulus) % ring_.modulus;
    a /= ring_.modulus;
    b /= ring_.modulus;
    code += s * place;
    place *= ring_.modulus;
  }
  return static_cast<std::uint32_t>(code);
}

std::uint32_t GroupRingScan::mul(std::uint32_t a, std::uint32_t b) const {
  const auto k = group_.size();
  Residue buf[3 * 64];
  std::vector<Residue> heap;
  Residue* base = buf;
  if (k > 64) {
    heap.resize(3 * k);
    base = heap.data();
  }
  std::span<Residue> va(base, k), vb(base + k, k), out(base + 2 * k, k);
  decode(a, va);
  decode(b, vb);
  multiply_into(group_, ring_.modulus, va, vb, out);
  return encode(out);
}

std::vector<char> GroupRingScan::unit_table() const {
  // status: 1 unit, 0 non-unit, -1 unknown. x is a unit iff any power of x is.
  std::vector<signed char> status(count_, -1);
  status[0] = count_ == 1 ? 1 : 0;  // the zero ring never happens (n >= 2)
  status[one()] = 1;
  std::vector<std::uint32_t> path;
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t x = 0; x < count_; ++x) {
    if (status[x] != -1) continue;
    path.clear();
    seen.clear();
    std::uint32_t y = x;
    signed char verdict = -1;
    while (true) {
      if (status[y] != -1) {
        verdict = status[y];
        break;
      }
      if (!seen.insert(y).second) {
        verdict = 0;  // a cycle that never passed through 1
        break;
      }
      path.push_back(y);
      y = mul(y, x);
    }
    for (auto p : path) status[p] = verdict;
  }
  return {status.begin(), status.end()};
}

ElementSet GroupRingScan::ideal_closure(std::span<const std::uint32_t> gens) const {
  std::vector<std::uint32_t> translates;
  for (auto x : gens) {
    for (ElementIndex g = 0; g < group_.size(); ++g) {
      const std::uint32_t t =
          mul(x, encode(GroupRingElement::monomial(ring_, group_, g).coeffs()));
      if (t != 0) translates.push_back(t);
    }
  }
  std::sort(translates.begin(), translates.end());
  translates.erase(std::unique(translates.begin(), translates.end()), translates.end());

  std::vector<char> in(count_, 0);
  ElementSet members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto t : translates) {
      const auto s = add(members[i], t);
      if (!in[s]) {
        in[s] = 1;
        members.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// ---------------------------------------------------------------------------

bool aug_in_nilradical(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  if (group.size() == 1) return true;
  const auto primes = supp(group);
  if (primes.size() != 1) return false;
  return in_nilradical(ring, primes.front());
}

namespace {

// R G reduced iff R reduced and no p in supp G is a zero divisor of R.
bool group_ring_is_reduced(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  if (!ring.is_reduced) return false;
  for (auto p : supp(group))
    if (is_zero_divisor(ring, p)) return false;
  return true;
}

std::optional<std::uint64_t> char_in_support(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  if (!ring.is_field) return std::nullopt;
  for (auto p : supp(group))
    if (p == ring.characteristic) return p;
  return std::nullopt;
}

void add_nil_containment(const RingDescriptor& ring, const FiniteAbelianGroup& group,
                         std::vector<std::string>& facts) {
  if (aug_in_nilradical(ring, group))
    facts.emplace_back("I(G) is contained in N(RG): G is a p-group and p is nilpotent in R");
  else
    facts.emplace_back("I(G) is not contained in N(RG): no prime p with G a p-group and p nilpotent in R");
}

}  // namespace

RadicalReport nilradical_closed_form(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  RadicalReport report;
  report.kind = RadicalKind::nilradical;
  if (group_ring_is_reduced(ring, group)) {
    report.closed_form = ClosedForm::zero;
    report.subgroup = trivial_subgroup();
    report.containment_facts.emplace_back("RG is reduced: R is reduced and no p in supp G is a zero divisor");
    if (ring.is_field) report.subspace = zero_ideal(ring, group);
    return report;
  }
  if (ring.is_reduced) {
    if (auto p = char_in_support(ring, group)) {
      report.closed_form = ClosedForm::phi_of;
      report.subgroup = sylow_component(group, *p);
      report.containment_facts.emplace_back("R is reduced of characteristic p in supp G: N(RG) = Phi(G_p)");
      report.subspace = phi(ring, group, *report.subgroup);
      return report;
    }
  }
  report.closed_form = ClosedForm::no_closed_form_in_scope;
  add_nil_containment(ring, group, report.containment_facts);
  report.containment_facts.emplace_back(
      "N(RG) is neither 0 nor Phi(N) for any subgroup: RG is not reduced and R is not a reduced ring of "
      "prime characteristic in supp G");
  return report;
}

std::vector<GroupRingElement> jacobson_generators(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  std::vector<GroupRingElement> gens;
  if (ring.jacobson_generator != 0)
    for (ElementIndex g = 0; g < group.size(); ++g)
      gens.push_back(GroupRingElement::monomial(ring, group, g, ring.jacobson_generator));
  for (auto p : supp(group)) {
    const Residue r = colon_jacobson(ring, p);
    if (r == 0) continue;
    for (auto g : sylow_component(group, p).elements) {
      if (g == 0) continue;
      gens.push_back(scalar_mul(r, GroupRingElement::g_minus_one(ring, group, g)));
    }
  }
  return gens;
}

RadicalReport jacobson_closed_form(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  RadicalReport report;
  report.kind = RadicalKind::jacobson;
  report.generators = jacobson_generators(ring, group);
  // For finite G the ring RG is finite, so J(RG) = N(RG).
  if (group_ring_is_reduced(ring, group)) {
    report.closed_form = ClosedForm::zero;
    report.subgroup = trivial_subgroup();
    report.containment_facts.emplace_back("J(RG) = N(RG) = 0 for this finite reduced group ring");
    if (ring.is_field) report.subspace = zero_ideal(ring, group);
    return report;
  }
  if (ring.jacobson_generator == 0) {
    if (auto p = char_in_support(ring, group)) {
      report.closed_form = ClosedForm::phi_of;
      report.subgroup = sylow_component(group, *p);
      report.containment_facts.emplace_back("J(R) = 0 and char R = p in supp G: J(RG) = Phi(G_p)");
      report.subspace = phi(ring, group, *report.subgroup);
      return report;
    }
  }
  report.closed_form = ClosedForm::no_closed_form_in_scope;
  report.containment_facts.emplace_back("J(RG) is generated by J(R)G and r(g - 1), g in G_p, r in (J(R) : p)");
  report.containment_facts.emplace_back(
      "J(RG) is neither 0 nor Phi(N) for any subgroup: RG is not reduced and J(R) = 0 with char R = p in "
      "supp G fails");
  if (ring.is_field) report.subspace = ideal_generated(ring, group, report.generators);
  return report;
}

IdealSubspace nilradical_frobenius(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  require_prime_field(ring);
  if (group.size() > 4096) throw Error(Errc::too_large, "Frobenius kernel is limited to |G| <= 4096");
  const std::uint64_t p = ring.modulus;
  std::uint64_t exponent = 1;
  while (exponent < group.size()) exponent *= p;

  // x -> x^(p^t) is F_p-linear here, so its matrix is given by the images of the basis.
  const auto size = group.size();
  FpMatrix frob(p, size, size);
  for (ElementIndex g = 0; g < size; ++g) {
    const auto image = power(GroupRingElement::monomial(ring, group, g), exponent);
    for (std::size_t r = 0; r < size; ++r) frob(r, g) = image[static_cast<ElementIndex>(r)];
  }
  return IdealSubspace::from_basis(ring, group, null_space(frob));
}

ElementSet nilpotent_bruteforce(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  const GroupRingScan scan(ring, group);
  // x nilpotent iff x^2 nilpotent.
  std::vector<signed char> status(scan.count(), -1);
  status[0] = 1;
  std::vector<std::uint32_t> path;
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t x = 1; x < scan.count(); ++x) {
    if (status[x] != -1) continue;
    path.clear();
    seen.clear();
    std::uint32_t y = x;
    signed char verdict = -1;
    while (true) {
      if (status[y] != -1) {
        verdict = status[y];
        break;
      }
      if (!seen.insert(y).second) {
        verdict = 0;
        break;
      }
      path.push_back(y);
      y = scan.mul(y, y);
    }
    for (auto p : path) status[p] = verdict;
  }
  ElementSet out;
  for (std::uint32_t x = 0; x < scan.count(); ++x)
    if (status[x] == 1) out.push_back(x);
  return out;
}

ElementSet jacobson_bruteforce(const RingDescriptor& ring, const FiniteAbelianGroup& group) {
  const GroupRingScan scan(ring, group);
  const auto unit = scan.unit_table();
  const auto one = scan.one();

  std::vector<std::uint32_t> monomials;
  for (Residue r = 1; r < ring.modulus; ++r)
    for (ElementIndex g = 0; g < group.size(); ++g)
      monomials.push_back(scan.encode(GroupRingElement::monomial(ring, group, g, r).coeffs()));

  // 1 in J, 0 not in J, -1 undecided. J is an ideal, so a member's whole ideal joins it.
  std::vector<signed char> status(scan.count(), -1);
  status[0] = 1;
  constexpr int kRandomProbes = 512;
  std::mt19937 rng(12345);
  for (std::uint32_t x = 1; x < scan.count(); ++x) {
    if (status[x] != -1) continue;
    if (unit[x]) {
      status[x] = 0;
      continue;
    }
    bool out = false;
    for (auto y : monomials) {
      if (!unit[scan.sub(one, scan.mul(x, y))]) {
        out = true;
        break;
      }
    }
    // Random probes find a witness quickly outside J; they only ever reject.
    for (int probe = 0; probe < kRandomProbes && !out; ++probe) {
      const auto y = static_cast<std::uint32_t>(rng() % scan.count());
      out = !unit[scan.sub(one, scan.mul(x, y))];
    }
    if (out) {
      status[x] = 0;
      continue;
    }
    // xRG is exactly {xy : y in RG}; check every element of it.
    const std::uint32_t gen[] = {x};
    const auto multiples = scan.ideal_closure(gen);
    out = std::any_of(multiples.begin(), multiples.end(),
                      [&](std::uint32_t z) { return !unit[scan.sub(one, z)]; });
    if (out) {
      status[x] = 0;
    } else {
      for (auto z : multiples) status[z] = 1;
    }
  }
  ElementSet result;
  for (std::uint32_t x = 0; x < scan.count(); ++x)
    if (status[x] == 1) result.push_back(x);
  return result;
}

ElementSet subspace_elements(const GroupRingScan& scan, const IdealSubspace& ideal) {
  const auto& rows = ideal.basis().rows();
  const std::uint64_t p = ideal.ring().modulus;
  std::vector<std::uint32_t> row_codes;
  for (const auto& r : rows) row_codes.push_back(scan.encode(r));
  ElementSet out{0};
  for (auto rc : row_codes) {
    const std::size_t before = out.size();
    for (std::size_t i = 0; i < before; ++i) {
      std::uint32_t acc = out[i];
      for (std::uint64_t c = 1; c < p; ++c) {
        acc = scan.add(acc, rc);
        out.push_back(acc);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grpring
