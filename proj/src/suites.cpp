#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "grpring/harness.hpp"
#include "grpring/principal.hpp"
#include "grpring/radicals.hpp"

namespace grpring {

void SuiteResult::check(bool condition, std::string key, std::string expected, std::string actual) {
  ++cases;
  if (!condition) failures.push_back({std::move(key), std::move(expected), std::move(actual)});
}

void SuiteResult::merge(SuiteResult other) {
  cases += other.cases;
  for (auto& f : other.failures) failures.push_back(std::move(f));
}

SuiteResult run_jobs(const std::string& name, std::vector<std::function<SuiteResult()>> jobs, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> partial(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        partial[i] = jobs[i]();
      } catch (const std::exception& e) {
        partial[i].check(false, name + " job " + std::to_string(i), "no exception", e.what());
      }
    }
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  SuiteResult result;
  result.name = name;
  for (auto& p : partial) result.merge(std::move(p));
  std::stable_sort(result.failures.begin(), result.failures.end(),
                   [](const CaseFailure& a, const CaseFailure& b) { return a.key < b.key; });
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<std::vector<std::uint64_t>> all_factorizations(std::uint64_t max_order) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  auto recurse = [&](auto&& self, std::uint64_t product, std::uint64_t largest) -> void {
    out.push_back(current);
    for (std::uint64_t f = 2; f <= largest && product * f <= max_order; ++f) {
      current.push_back(f);
      self(self, product * f, f);
      current.pop_back();
    }
  };
  recurse(recurse, 1, max_order);
  return out;
}

namespace {

using Job = std::function<SuiteResult()>;

std::string label(std::uint64_t n, const std::vector<std::uint64_t>& orders) {
  std::string s = "Z/" + std::to_string(n) + "[";
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
  return s + "]";
}

std::uint64_t cap(const SuiteBounds& b, std::uint64_t v) { return b.max_order ? std::min(v, *b.max_order) : v; }

std::string str(std::size_t v) { return std::to_string(v); }

GroupRingElement random_element(const RingDescriptor& ring, const FiniteAbelianGroup& group, std::mt19937_64& rng) {
  std::vector<std::int64_t> c(group.size());
  std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(ring.modulus) - 1);
  for (auto& x : c) x = dist(rng);
  return GroupRingElement(ring, group, std::move(c));
}

bool fits_scan(std::uint64_t n, std::size_t size) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < size; ++i) {
    total *= n;
    if (total > GroupRingScan::kMaxElements) return false;
  }
  return true;
}

// --- section 1 --------------------------------------------------------------

SuiteResult phi_psi_case(std::uint64_t p, const std::vector<std::uint64_t>& orders, std::uint64_t quotient_max,
                         std::uint64_t seed) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group(orders);
  const auto key = label(p, orders);
  const auto subgroups = all_subgroups(group);
  const auto aug = augmentation_ideal(ring, group);
  std::vector<IdealSubspace> phis;
  for (const auto& n : subgroups) {
    const auto j = phi(ring, group, n);
    const auto k = key + " N=" + describe(group, n);
    r.check(psi(j) == n, k + " psi(phi(N)) = N");
    r.check(j.dimension() == group.size() - group.size() / n.order(), k + " dim phi(N)",
            str(group.size() - group.size() / n.order()), str(j.dimension()));
    r.check(aug.contains(j), k + " phi(N) in I(G)");
    r.check(j.is_ideal(), k + " phi(N) closed under G");
    const auto back = in_phi_image(j);
    r.check(back.has_value() && *back == n, k + " in_phi_image round trip");
    if (group.size() <= quotient_max) {
      r.check(verify_quotient_iso(ring, group, n), k + " RG/phi(N) = R(G/N)");
      r.check(quotient(group, n).count() == group.size() / n.order(), k + " coset count");
    }
    phis.push_back(j);
  }
  for (std::size_t a = 0; a < subgroups.size(); ++a)
    for (std::size_t b = 0; b < subgroups.size(); ++b)
      if (subgroups[a].is_subset_of(subgroups[b]))
        r.check(phis[b].contains(phis[a]), key + " monotone " + describe(group, subgroups[a]) + " <= " +
                                               describe(group, subgroups[b]));
  r.check(psi(aug) == whole_group(group), key + " psi(I(G)) = G");
  r.check(psi(zero_ideal(ring, group)) == trivial_subgroup(), key + " psi(0) = 1");

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 8; ++i) {
    const auto j = ideal_generated(random_element(ring, group, rng));
    r.check(j.is_ideal(), key + " ideal_generated closed");
    if (!in_phi_image(j)) {
      const auto n = psi(j);
      r.check(!(phi(ring, group, n) == j), key + " empty in_phi_image means phi(psi(J)) != J");
    }
  }
  return r;
}

SuiteResult augmentation_case(std::uint64_t n, const std::vector<std::uint64_t>& orders, std::uint64_t seed) {
  SuiteResult r;
  const auto ring = make_ring(n);
  const auto group = make_group(orders);
  const auto key = label(n, orders);
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  constexpr int kPairs = 10'000;
  for (int i = 0; i < kPairs; ++i) {
    const auto x = random_element(ring, group, rng);
    const auto y = random_element(ring, group, rng);
    if (augmentation(mul(x, y)) != mul(ring, augmentation(x), augmentation(y))) ++bad;
  }
  r.check(bad == 0, key + " augmentation multiplicative over 10^4 pairs", "0 mismatches", str(bad) + " mismatches");
  return r;
}

// --- section 2 --------------------------------------------------------------

SuiteResult radical_field_case(std::uint64_t p, const std::vector<std::uint64_t>& orders) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group(orders);
  const auto key = label(p, orders);
  const auto primes = supp(group);
  const bool char_in_supp = std::find(primes.begin(), primes.end(), p) != primes.end();
  const auto frob = nilradical_frobenius(ring, group);
  const auto expected = char_in_supp ? phi(ring, group, sylow_component(group, p)) : zero_ideal(ring, group);
  r.check(frob == expected, key + " Frobenius kernel = " + std::string(char_in_supp ? "Phi(G_p)" : "0"),
          str(expected.dimension()), str(frob.dimension()));

  const auto nil = nilradical_closed_form(ring, group);
  r.check(nil.subspace.has_value() && *nil.subspace == frob, key + " nilradical closed form = Frobenius kernel");
  r.check(nil.closed_form == (char_in_supp ? ClosedForm::phi_of : ClosedForm::zero), key + " nilradical tag");
  if (nil.closed_form == ClosedForm::phi_of && nil.subgroup->order() > 1)
    r.check(ring.is_reduced && char_in_supp, key + " phi-of forces reduced R with char in supp G");
  const auto jac = jacobson_closed_form(ring, group);
  r.check(jac.subspace.has_value() && *jac.subspace == frob, key + " Jacobson closed form = Frobenius kernel");
  r.check(ideal_generated(ring, group, jac.generators) == frob, key + " Jacobson generators span the kernel");

  const auto aug = augmentation_ideal(ring, group);
  r.check(aug_in_nilradical(ring, group) == frob.contains(aug), key + " I(G) nil criterion");

  if (fits_scan(p, group.size())) {
    const GroupRingScan scan(ring, group);
    const auto as_set = subspace_elements(scan, frob);
    const auto nil_bf = nilpotent_bruteforce(ring, group);
    const auto jac_bf = jacobson_bruteforce(ring, group);
    r.check(nil_bf == as_set, key + " brute-force nilpotents = Frobenius kernel", str(as_set.size()),
            str(nil_bf.size()));
    r.check(jac_bf == as_set, key + " brute-force Jacobson = Frobenius kernel", str(as_set.size()),
            str(jac_bf.size()));
  }
  return r;
}

SuiteResult radical_composite_case(std::uint64_t n, const std::vector<std::uint64_t>& orders) {
  SuiteResult r;
  const auto ring = make_ring(n);
  const auto group = make_group(orders);
  const auto key = label(n, orders);
  const GroupRingScan scan(ring, group);
  const auto nil_bf = nilpotent_bruteforce(ring, group);
  const auto jac_bf = jacobson_bruteforce(ring, group);
  r.check(nil_bf == jac_bf, key + " finite ring: J = N", str(nil_bf.size()), str(jac_bf.size()));

  std::vector<std::uint32_t> gens;
  for (const auto& g : jacobson_generators(ring, group)) gens.push_back(scan.encode(g));
  const auto closure = scan.ideal_closure(gens);
  r.check(closure == jac_bf, key + " closure of Jacobson generators = brute force", str(jac_bf.size()),
          str(closure.size()));

  bool all_aug_nil = true;
  for (ElementIndex g = 1; g < group.size(); ++g) {
    const auto c = scan.encode(GroupRingElement::g_minus_one(ring, group, g));
    all_aug_nil = all_aug_nil && std::binary_search(nil_bf.begin(), nil_bf.end(), c);
  }
  r.check(aug_in_nilradical(ring, group) == all_aug_nil, key + " I(G) nil criterion");

  const auto nil = nilradical_closed_form(ring, group);
  const auto jac = jacobson_closed_form(ring, group);
  const bool reduced = nil_bf.size() == 1;
  r.check((nil.closed_form == ClosedForm::zero) == reduced, key + " nilradical zero tag matches scan");
  r.check((jac.closed_form == ClosedForm::zero) == (jac_bf.size() == 1), key + " Jacobson zero tag matches scan");

  // Whether N(RG) is some Phi(N), checked against the set I(R,N)RG for every subgroup.
  bool nil_is_phi = false, jac_is_phi = false;
  for (const auto& sub : all_subgroups(group)) {
    if (sub.order() == 1) continue;
    std::vector<std::uint32_t> phi_gens;
    for (auto h : sub.elements)
      if (h != 0) phi_gens.push_back(scan.encode(GroupRingElement::g_minus_one(ring, group, h)));
    const auto phi_set = scan.ideal_closure(phi_gens);
    nil_is_phi = nil_is_phi || phi_set == nil_bf;
    jac_is_phi = jac_is_phi || phi_set == jac_bf;
  }
  r.check(nil_is_phi == (nil.closed_form == ClosedForm::phi_of), key + " nilradical phi-of tag matches scan");
  r.check(jac_is_phi == (jac.closed_form == ClosedForm::phi_of), key + " Jacobson phi-of tag matches scan");
  return r;
}

// --- section 3 --------------------------------------------------------------

SuiteResult counterexample_case(const std::string& kind, std::uint64_t p, const std::vector<std::uint64_t>& orders) {
  SuiteResult r;
  const auto group = make_group(orders);
  const auto key = kind + " " + label(p, orders);
  std::optional<Counterexample> ce;
  if (kind == "odd-square") ce = counterexample_odd_square(p, group);
  if (kind == "order-four-cube") ce = counterexample_order_four_cube(group);
  if (kind == "elementary-pair") ce = counterexample_elementary_pair(group);
  r.check(ce.has_value(), key + " constructed");
  if (!ce) return r;
  r.check(ce->excluded, key + " in_phi_image empty");
  r.check(!ce->element.is_zero() && augmentation(ce->element) == 0, key + " nonzero non-unit generator");
  r.check(ce->ideal.is_proper() && ce->ideal.dimension() > 0, key + " proper nonzero ideal");
  if (kind == "order-four-cube") r.check(ce->chain_verified, key + " strict chain 0 < I < (g-1)^2RG = Phi(<g^2>)");
  return r;
}

SuiteResult census_case(std::uint64_t p, const std::vector<std::uint64_t>& orders) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group(orders);
  const auto key = "census " + label(p, orders);
  const auto c = ideal_census(ring, group);
  r.check(c.ideal_count.has_value(), key + " exhaustive");
  if (!c.ideal_count) return r;
  std::size_t total = 0;
  for (const auto& [n, size] : *c.fiber_sizes) total += size;
  r.check(total == *c.ideal_count, key + " fibers partition T", str(*c.ideal_count), str(total));
  r.check(c.phi_in_own_fiber.value_or(false), key + " Phi(N) in fiber of N");
  for (const auto& j : *c.non_unit_ideals) r.check(j.is_ideal() && j.is_proper(), key + " enumerated ideal");
  const bool expect_all = p == 2 && group.size() == 2;
  if (group.size() > 1)
    r.check(*c.phi_image_is_everything == expect_all, key + " Phi(S) = T iff F_2 C_2",
            expect_all ? "true" : "false", *c.phi_image_is_everything ? "true" : "false");
  if (p == 2 && orders == std::vector<std::uint64_t>{2})
    r.check(*c.ideal_count == 2 && *c.non_unit_ideals == std::vector{zero_ideal(ring, group), augmentation_ideal(ring, group)},
            key + " T = {0, I(G)}");
  return r;
}

SuiteResult unique_prime_case(std::uint64_t p, const std::vector<std::uint64_t>& orders) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group(orders);
  const bool p_group = is_p_group(group, p);
  r.check(unique_prime_check(ring, group) == p_group, "unique prime " + label(p, orders),
          p_group ? "true" : "false", p_group ? "false" : "true");
  return r;
}

// --- section 4 --------------------------------------------------------------

SuiteResult classifier_case(std::uint64_t p, std::uint64_t m) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group({m});
  const auto key = label(p, {m});
  const GroupRingScan scan(ring, group);
  std::size_t mismatches = 0, invariance = 0, rank_mismatches = 0;
  std::string first;
  for (std::uint32_t code = 0; code < scan.count(); ++code) {
    const auto x = scan.element(code);
    const auto report = classify_principal(x);
    const auto ideal = ideal_generated(x);
    const auto oracle = in_phi_image(ideal);
    bool agree = false;
    switch (report.verdict) {
      case Verdict::zero_element: agree = x.is_zero(); break;
      case Verdict::unit_element: agree = !ideal.is_proper(); break;
      case Verdict::in_image: agree = oracle && oracle->order() > 1 && *oracle == *report.subgroup; break;
      case Verdict::not_in_image: agree = !oracle && ideal.is_proper(); break;
    }
    if (!agree && first.empty()) first = key + " code " + std::to_string(code);
    mismatches += !agree;
    if (!x.is_zero() && report.rank_a != ideal.dimension()) ++rank_mismatches;

    // Same ideal, same report.
    const auto rot = classify_principal(shift(1 % static_cast<ElementIndex>(m), x));
    const auto scaled = classify_principal(scalar_mul(p - 1, x));
    for (const auto* other : {&rot, &scaled})
      if (other->verdict != report.verdict || other->rank_a != report.rank_a || other->d != report.d ||
          other->subgroup.has_value() != report.subgroup.has_value() ||
          (other->subgroup && !(*other->subgroup == *report.subgroup)))
        ++invariance;
  }
  r.cases += scan.count() * 3;
  if (mismatches) r.failures.push_back({key + " classifier vs in_phi_image (first " + first + ")", "0", str(mismatches)});
  if (rank_mismatches) r.failures.push_back({key + " rank(A_x) = dim xRG", "0", str(rank_mismatches)});
  if (invariance) r.failures.push_back({key + " rotation/scaling invariance", "0", str(invariance)});
  return r;
}

SuiteResult membership_case(std::uint64_t p, std::uint64_t m) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group({m});
  const auto key = label(p, {m});
  const GroupRingScan scan(ring, group);
  std::vector<GroupRingElement> power_minus_one;
  std::vector<IdealSubspace> power_ideals;
  for (std::uint64_t n = 1; n < m; ++n) {
    power_minus_one.push_back(GroupRingElement::g_minus_one(ring, group, static_cast<ElementIndex>(n)));
    power_ideals.push_back(ideal_generated(power_minus_one.back()));
  }
  std::size_t bad41 = 0, bad43 = 0;
  for (std::uint32_t code = 0; code < scan.count(); ++code) {
    const auto x = scan.element(code);
    const auto ideal = ideal_generated(x);
    for (std::uint64_t n = 1; n < m; ++n) {
      bad41 += contains_power_minus_one(x, n) != ideal.contains(power_minus_one[n - 1]);
      bad43 += in_power_ideal(x, n) != power_ideals[n - 1].contains(x);
    }
  }
  r.cases += 2 * scan.count() * (m - 1);
  if (bad41) r.failures.push_back({key + " g^n - 1 in xRG via ranks", "0", str(bad41)});
  if (bad43) r.failures.push_back({key + " x in (g^n - 1)RG via progression sums", "0", str(bad43)});
  return r;
}

SuiteResult layout_case(std::uint64_t p, std::uint64_t m) {
  SuiteResult r;
  const auto ring = make_ring(p);
  const auto group = make_group({m});
  const GroupRingScan scan(ring, group);
  std::size_t bad = 0;
  for (std::uint32_t code = 0; code < scan.count(); ++code) {
    const auto x = scan.element(code);
    bad += principal_dimension(x) != ideal_generated(x).dimension();
  }
  r.cases += scan.count();
  if (bad) r.failures.push_back({label(p, {m}) + " rank(A_x) = dim xRG", "0", str(bad)});
  return r;
}

// Every element with at most max_terms terms, exponents in [lo, hi], coefficients from coeffs.
template <typename Visit>
void for_each_laurent(std::uint64_t modulus, std::int64_t lo, std::int64_t hi, std::size_t max_terms,
                      const std::vector<std::int64_t>& coeffs, Visit&& visit) {
  std::map<std::int64_t, std::int64_t> terms;
  auto recurse = [&](auto&& self, std::int64_t next) -> void {
    visit(LaurentElement(modulus, terms));
    if (terms.size() == max_terms) return;
    for (std::int64_t e = next; e <= hi; ++e) {
      for (auto c : coeffs) {
        terms[e] = c;
        self(self, e + 1);
        terms.erase(e);
      }
    }
  };
  recurse(recurse, lo);
}

}  // namespace

SuiteResult laurent_sweep(std::uint64_t modulus) {
  SuiteResult r;
  std::vector<std::int64_t> coeffs;
  std::int64_t lo = -4, hi = 4;
  std::size_t max_terms = 4;
  if (modulus == 0) {
    coeffs = {-3, -2, -1, 1, 2, 3};
    lo = -3;
    hi = 3;
    max_terms = 3;
  } else {
    for (std::int64_t c = 1; c < static_cast<std::int64_t>(modulus); ++c) coeffs.push_back(c);
  }
  std::size_t bad = 0, count = 0;
  std::string first;
  for_each_laurent(modulus, lo, hi, max_terms, coeffs, [&](const LaurentElement& x) {
    ++count;
    const auto report = classify_laurent(x);
    std::optional<std::int64_t> oracle_k;
    for (std::int64_t k = 1; k <= hi - lo && !oracle_k; ++k) {
      const auto q = exact_quotient_power_minus_one(x, k);
      if (q && q->terms().size() == 1 && x.is_unit_coefficient(q->terms().begin()->second)) oracle_k = k;
    }
    bool agree = false;
    switch (report.verdict) {
      case LaurentVerdict::zero_element: agree = x.is_zero(); break;
      case LaurentVerdict::unit_element:
        agree = x.terms().size() == 1 && x.is_unit_coefficient(x.terms().begin()->second);
        break;
      case LaurentVerdict::in_image: agree = oracle_k && report.h_exponent == oracle_k; break;
      case LaurentVerdict::not_in_image:
        agree = !oracle_k && !(x.terms().size() == 1 && x.is_unit_coefficient(x.terms().begin()->second));
        break;
    }
    if (!agree) {
      ++bad;
      if (first.empty()) {
        for (const auto& [e, c] : x.terms()) first += std::to_string(c) + "g^" + std::to_string(e) + " ";
      }
    }
  });
  r.cases += count;
  if (bad)
    r.failures.push_back({"laurent mod " + std::to_string(modulus) + " vs division oracle (first " + first + ")",
                          "0", str(bad)});
  return r;
}

SuiteResult run_section1(const SuiteBounds& bounds) {
  std::vector<Job> jobs;
  const auto phi_max = cap(bounds, bounds.phi_max_order);
  const auto q_max = cap(bounds, bounds.quotient_max_order);
  std::uint64_t seed = bounds.seed;
  for (auto p : bounds.primes)
    for (const auto& orders : all_factorizations(phi_max))
      jobs.emplace_back([p, orders, q_max, s = seed++] { return phi_psi_case(p, orders, q_max, s); });
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> tiny = {
      {2, {2}}, {3, {3}}, {2, {4}}, {4, {2}}, {6, {6}}, {5, {2, 2}}, {9, {3}}, {12, {2, 3}}};
  for (const auto& [n, orders] : tiny)
    jobs.emplace_back([n, orders, s = seed++] { return augmentation_case(n, orders, s); });
  return run_jobs("section1", std::move(jobs), bounds.workers);
}

SuiteResult run_section2(const SuiteBounds& bounds) {
  std::vector<Job> jobs;
  const auto max_order = cap(bounds, bounds.radical_max_order);
  for (auto p : bounds.primes)
    for (const auto& orders : all_factorizations(max_order))
      jobs.emplace_back([p, orders] { return radical_field_case(p, orders); });
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> composite = {
      {4, {2}},  {9, {3}},  {4, {3, 2}}, {4, {2, 3}}, {6, {2}},    {6, {3}},  {8, {2}},
      {12, {2}}, {4, {4}},  {4, {2, 2}}, {10, {2}},   {9, {2}},    {6, {4}},  {25, {2}},
      {12, {3}}, {18, {3}}, {8, {4}},    {6, {2, 2}}, {4, {3}},    {6, {6}}};
  for (const auto& [n, orders] : composite) {
    std::uint64_t size = 1;
    for (auto o : orders) size *= o;
    if (size <= max_order) jobs.emplace_back([n, orders] { return radical_composite_case(n, orders); });
  }
  return run_jobs("section2", std::move(jobs), bounds.workers);
}

SuiteResult run_section3(const SuiteBounds& bounds) {
  std::vector<Job> jobs;
  const std::vector<std::tuple<std::string, std::uint64_t, std::vector<std::uint64_t>>> ces = {
      {"odd-square", 3, {3}},      {"odd-square", 5, {5}},         {"odd-square", 3, {9}},
      {"odd-square", 3, {3, 3}},    {"odd-square", 7, {7}},         {"order-four-cube", 2, {4}},
      {"order-four-cube", 2, {8}},  {"order-four-cube", 2, {2, 4}}, {"order-four-cube", 2, {4, 4}},
      {"elementary-pair", 2, {2, 2}}, {"elementary-pair", 2, {2, 2, 2}}};
  for (const auto& [kind, p, orders] : ces) {
    std::uint64_t size = 1;
    for (auto o : orders) size *= o;
    if (!bounds.max_order || size <= *bounds.max_order)
      jobs.emplace_back([kind, p, orders] { return counterexample_case(kind, p, orders); });
  }
  jobs.emplace_back([] {
    SuiteResult r;
    try {
      counterexample_elementary_pair(make_group({2}));
      r.check(false, "elementary-pair on C_2 must be not-applicable");
    } catch (const Error& e) {
      r.check(e.code() == Errc::not_applicable, "elementary-pair on C_2 must be not-applicable");
    }
    return r;
  });
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> censuses = {
      {2, {2}}, {2, {4}}, {3, {3}}, {2, {2, 2}}, {3, {2}}, {2, {3}}, {5, {2}}, {2, {6}}, {3, {4}}, {5, {3}}};
  for (const auto& [p, orders] : censuses) jobs.emplace_back([p, orders] { return census_case(p, orders); });
  for (std::uint64_t p : {2, 3})
    for (const auto& orders : all_factorizations(cap(bounds, 16)))
      if (!orders.empty()) jobs.emplace_back([p, orders] { return unique_prime_case(p, orders); });
  for (auto p : bounds.primes)
    for (std::uint64_t m = 2; m <= cap(bounds, 6); ++m) jobs.emplace_back([p, m] { return phi_surjectivity_check(p, m); });
  return run_jobs("section3", std::move(jobs), bounds.workers);
}

SuiteResult run_section4(const SuiteBounds& bounds) {
  std::vector<Job> jobs;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> sweeps = {
      {2, 2}, {2, 4}, {2, 6}, {2, 8}, {2, 12}, {3, 3}, {3, 4}, {3, 6}, {5, 4}};
  for (const auto& [p, m] : sweeps)
    if (!bounds.max_order || m <= *bounds.max_order) jobs.emplace_back([p, m] { return classifier_case(p, m); });
  // Membership tests g^n - 1 in xRG and x in (g^n - 1)RG, exhaustive for p^m <= 3^6.
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t m = 2; m <= cap(bounds, 12); ++m) {
      std::uint64_t total = 1;
      for (std::uint64_t i = 0; i < m && total <= 729; ++i) total *= p;
      if (total <= 729) jobs.emplace_back([p, m] { return membership_case(p, m); });
    }
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t m = 2; m <= cap(bounds, 8); ++m) jobs.emplace_back([p, m] { return layout_case(p, m); });
  for (std::uint64_t modulus : {2, 3, 5, 0}) jobs.emplace_back([modulus] { return laurent_sweep(modulus); });
  return run_jobs("section4", std::move(jobs), bounds.workers);
}

SuiteResult run_suite(const std::string& name, const SuiteBounds& bounds) {
  if (name == "section1") return run_section1(bounds);
  if (name == "section2") return run_section2(bounds);
  if (name == "section3") return run_section3(bounds);
  if (name == "section4") return run_section4(bounds);
  if (name == "all") {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult all;
    all.name = "all";
    for (const auto& s : {"section1", "section2", "section3", "section4"}) all.merge(run_suite(s, bounds));
    all.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return all;
  }
  throw Error(Errc::unknown_suite, "no suite named '" + name + "'");
}

}  // namespace grpring
