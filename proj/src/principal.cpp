#include "grpring/principal.hpp"

#include <algorithm>

namespace grpring {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::in_image: return "in-image";
    case Verdict::not_in_image: return "not-in-image";
    case Verdict::zero_element: return "zero-element";
    case Verdict::unit_element: return "unit-element";
  }
  return "unknown";
}

std::string_view to_string(FailedCheck c) {
  switch (c) {
    case FailedCheck::d_not_divisor: return "d-not-divisor";
    case FailedCheck::condition42_failed: return "condition42-failed";
    case FailedCheck::rank_mismatch: return "rank-mismatch";
  }
  return "unknown";
}

namespace {

void require_cyclic_field(const GroupRingElement& x) {
  require_prime_field(x.ring());
  if (!x.group().is_cyclic_presentation())
    throw Error(Errc::unsupported_group, "circulant tests need a group given as one cyclic factor");
}

void require_exponent(const GroupRingElement& x, std::uint64_t n) {
  if (n == 0 || n >= x.group().size())
    throw Error(Errc::invalid_argument, "exponent n must satisfy 0 < n < m");
}

}  // namespace

CirculantMatrix build_circulant(const GroupRingElement& x) {
  require_cyclic_field(x);
  const std::size_t m = x.group().size();
  CirculantMatrix a{m, FpMatrix(x.ring().modulus, m, m)};
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      a.rows(r, c) = x[static_cast<ElementIndex>((2 * m - 1 - r - c) % m)];
  return a;
}

FpMatrix build_augmented(const GroupRingElement& x, std::uint64_t n) {
  require_cyclic_field(x);
  require_exponent(x, n);
  const auto a = build_circulant(x);
  const std::size_t m = a.m;
  FpMatrix aug(x.ring().modulus, m, m + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) aug(r, c) = a.rows(r, c);
  aug(a.row_of_power(n), m) = 1;
  aug(a.row_of_power(0), m) = x.ring().modulus - 1;
  return aug;
}

bool contains_power_minus_one(const GroupRingElement& x, std::uint64_t n) {
  const auto aug = build_augmented(x, n);
  return rank(build_circulant(x).rows) == rank(aug);
}

std::vector<Residue> progression_sums(const GroupRingElement& x, std::uint64_t d) {
  require_cyclic_field(x);
  const std::uint64_t m = x.group().size();
  if (d == 0 || m % d != 0) throw Error(Errc::invalid_argument, "progression step must divide m");
  std::vector<Residue> sums(d, 0);
  for (std::uint64_t i = 0; i < m; ++i) sums[i % d] = add(x.ring(), sums[i % d], x[static_cast<ElementIndex>(i)]);
  return sums;
}

bool in_power_ideal(const GroupRingElement& x, std::uint64_t n) {
  require_cyclic_field(x);
  require_exponent(x, n);
  const auto sums = progression_sums(x, cyclic_reduce(x.group().size(), n));
  return std::all_of(sums.begin(), sums.end(), [](Residue s) { return s == 0; });
}

std::size_t principal_dimension(const GroupRingElement& x) { return rank(build_circulant(x).rows); }

std::string ClassificationReport::subgroup_label() const {
  if (verdict != Verdict::in_image) return {};
  return "<g^" + std::to_string(d) + ">";
}

std::string ClassificationReport::quotient_label() const {
  if (verdict != Verdict::in_image) return {};
  return "F_" + std::to_string(prime) + " C_" + std::to_string(d);
}

ClassificationReport classify_principal(const GroupRingElement& x) {
  require_cyclic_field(x);
  ClassificationReport report;
  report.prime = x.ring().modulus;
  report.m = x.group().size();
  if (x.is_zero()) {
    report.verdict = Verdict::zero_element;
    report.d = report.m;
    return report;
  }
  report.rank_a = principal_dimension(x);
  report.d = report.m - report.rank_a;
  if (report.d == 0) {
    report.verdict = Verdict::unit_element;
    return report;
  }
  report.verdict = Verdict::not_in_image;
  if (report.m % report.d != 0) {
    report.reason = FailedCheck::d_not_divisor;
    return report;
  }
  report.e = report.m / report.d;
  report.condition42 = progression_sums(x, report.d);
  if (std::any_of(report.condition42.begin(), report.condition42.end(), [](Residue s) { return s != 0; })) {
    report.reason = FailedCheck::condition42_failed;
    return report;
  }
  report.rank_a_tilde = rank(build_augmented(x, report.d));
  if (*report.rank_a_tilde != report.rank_a) {
    report.reason = FailedCheck::rank_mismatch;
    return report;
  }
  report.verdict = Verdict::in_image;
  report.reason.reset();
  const ElementIndex gen[] = {static_cast<ElementIndex>(report.d)};
  report.subgroup = subgroup_generated(x.group(), std::span<const ElementIndex>(gen));
  return report;
}

}  // namespace grpring
