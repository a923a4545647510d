// One PASS/FAIL line per acceptance criterion, each with its own time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "grpring/json_io.hpp"

using namespace grpring;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = ms < limit_ms;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %d  %-34s %10.1f ms (limit %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", id, title, ms, limit_ms,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  if (!in_time) std::printf("      time limit exceeded\n");
  std::fflush(stdout);
}

Outcome from_suite(const SuiteResult& r) {
  Outcome o{r.ok(), std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) + " failures"};
  if (!r.failures.empty()) o.detail += "; first: " + r.failures.front().key;
  return o;
}

SuiteResult subset(const std::string& name, const SuiteResult& r, const std::function<bool(const std::string&)>& keep) {
  SuiteResult out;
  out.name = name;
  out.cases = r.cases;
  for (const auto& f : r.failures)
    if (keep(f.key)) out.failures.push_back(f);
  return out;
}

}  // namespace

int main() {
  criterion(1, "worked example, bit-exact", 10, [] {
    const auto x = GroupRingElement(make_ring(5), make_group({12}), {0, 1, 3, 1, 1, 3, 1, 1, 4, 1, 1, 3});
    const auto r = classify_principal(x);
    const std::string want =
        R"({"verdict":"in-image","d":4,"rank_A":8,"rank_A_tilde":8,"condition42":[0,0,0,0],"subgroup":"<g^4>","quotient":"F_5 C_4"})";
    const auto got = to_json(r).dump();
    return Outcome{got == want, got};
  });

  criterion(2, "psi(phi(N)) = N, |G| <= 24", 10'000, [] {
    SuiteResult r;
    r.name = "psi-phi";
    for (std::uint64_t p : {2, 3, 5}) {
      const auto ring = make_ring(p);
      for (const auto& orders : all_factorizations(24)) {
        const auto group = make_group(orders);
        for (const auto& n : all_subgroups(group)) {
          const auto j = phi(ring, group, n);
          r.check(psi(j) == n, "psi " + std::to_string(p) + " " + describe(group, n));
          r.check(j.dimension() == group.size() - group.size() / n.order(), "dim " + describe(group, n));
        }
      }
    }
    return from_suite(r);
  });

  criterion(3, "RG/Phi(N) = R(G/N), |G| <= 16", 20'000, [] {
    SuiteResult r;
    for (std::uint64_t p : {2, 3, 5})
      for (const auto& orders : all_factorizations(16)) {
        const auto group = make_group(orders);
        for (const auto& n : all_subgroups(group))
          r.check(verify_quotient_iso(make_ring(p), group, n), "iso " + std::to_string(p) + " " + describe(group, n));
      }
    return from_suite(r);
  });

  criterion(4, "classifier vs in_phi_image oracle", 60'000, [] {
    SuiteBounds b;
    b.max_order = 8;
    const auto r = run_section4(b);
    // Laurent cases belong to criterion 7.
    return from_suite(subset("section4", r, [](const std::string& k) { return k.rfind("laurent", 0) != 0; }));
  });

  criterion(5, "radical oracles", 60'000, [] { return from_suite(run_section2(SuiteBounds{})); });

  criterion(6, "counterexamples and censuses", 30'000, [] {
    SuiteResult r;
    for (const auto& [p, orders] : std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>{{3, {3}}, {5, {5}}})
      r.check(counterexample_odd_square(p, make_group(orders)).excluded, "odd square " + std::to_string(p));
    r.check(counterexample_order_four_cube(make_group({4})).excluded, "F_2 C_4");
    r.check(counterexample_elementary_pair(make_group({2, 2})).excluded, "F_2 C_2 x C_2");
    const auto c22 = ideal_census(make_ring(2), make_group({2}));
    r.check(c22.ideal_count == 2u && c22.phi_image_is_everything == true, "census F_2 C_2: T = Phi(S)");
    for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 4}, {3, 3}}) {
      const auto c = ideal_census(make_ring(p), make_group({m}));
      r.check(c.ideal_count.has_value() && *c.ideal_count > c.phi_image.size() && c.phi_image_is_everything == false,
              "census strict " + std::to_string(p) + " " + std::to_string(m));
    }
    return from_suite(r);
  });

  criterion(7, "Laurent classifier vs division", 10'000, [] {
    SuiteResult r;
    for (std::uint64_t modulus : {2, 3, 5, 0}) r.merge(laurent_sweep(modulus));
    return from_suite(r);
  });

  criterion(8, "verify all", 180'000, [] { return from_suite(run_suite("all", SuiteBounds{})); });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
