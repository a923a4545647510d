#include "grpring/modular_ring.hpp"
#include "grpring/principal.hpp"

namespace grpring {

std::string_view to_string(LaurentVerdict v) {
  switch (v) {
    case LaurentVerdict::in_image: return "in-image";
    case LaurentVerdict::not_in_image: return "not-in-image";
    case LaurentVerdict::zero_element: return "zero-element";
    case LaurentVerdict::unit_element: return "unit-element";
  }
  return "unknown";
}

LaurentElement::LaurentElement(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus != 0 && !is_prime(modulus))
    throw Error(Errc::unsupported_ring, "Laurent coefficients must be a prime field or the integers (0)");
}

LaurentElement::LaurentElement(std::uint64_t modulus, const std::map<std::int64_t, std::int64_t>& terms)
    : LaurentElement(modulus) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentElement LaurentElement::monomial(std::uint64_t modulus, std::int64_t exponent, std::int64_t coeff) {
  LaurentElement x(modulus);
  x.add_term(exponent, coeff);
  return x;
}

std::int64_t LaurentElement::normalize(std::int64_t c) const {
  if (modulus_ == 0) return c;
  const auto p = static_cast<std::int64_t>(modulus_);
  const std::int64_t r = c % p;
  return r < 0 ? r + p : r;
}

bool LaurentElement::is_unit_coefficient(std::int64_t c) const {
  c = normalize(c);
  if (modulus_ == 0) return c == 1 || c == -1;
  return c != 0;
}

std::int64_t LaurentElement::coefficient(std::int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentElement::add_term(std::int64_t exponent, std::int64_t coeff) {
  const std::int64_t sum = normalize(coefficient(exponent) + normalize(coeff));
  if (sum == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = sum;
}

LaurentElement operator+(const LaurentElement& a, const LaurentElement& b) {
  if (a.modulus_ != b.modulus_) throw Error(Errc::incompatible_operands, "Laurent rings differ");
  LaurentElement out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) {
  if (a.modulus_ != b.modulus_) throw Error(Errc::incompatible_operands, "Laurent rings differ");
  LaurentElement out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  if (a.modulus_ != b.modulus_) throw Error(Errc::incompatible_operands, "Laurent rings differ");
  LaurentElement out(a.modulus_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, out.normalize(ca * cb));
  return out;
}

LaurentReport classify_laurent(const LaurentElement& x) {
  LaurentReport report;
  const auto& terms = x.terms();
  if (terms.empty()) {
    report.verdict = LaurentVerdict::zero_element;
    return report;
  }
  // Over a domain with torsion-free G every unit is a trivial unit u g^k.
  if (terms.size() == 1) {
    report.verdict = x.is_unit_coefficient(terms.begin()->second) ? LaurentVerdict::unit_element
                                                                   : LaurentVerdict::not_in_image;
    return report;
  }
  report.verdict = LaurentVerdict::not_in_image;
  if (terms.size() != 2) return report;
  const auto [low_e, low_c] = *terms.begin();
  const auto [high_e, high_c] = *terms.rbegin();
  if (x.normalize(high_c + low_c) != 0 || !x.is_unit_coefficient(high_c)) return report;
  report.verdict = LaurentVerdict::in_image;
  report.unit = high_c;
  report.g1_exponent = high_e;
  report.g2_exponent = low_e;
  report.h_exponent = high_e - low_e;
  return report;
}

std::optional<LaurentElement> exact_quotient_power_minus_one(const LaurentElement& x, std::int64_t k) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  if (x.is_zero()) return x;
  // Divide from the top: the leading term c g^e forces c g^(e-k) in the quotient.
  LaurentElement rest = x;
  LaurentElement q(x.modulus());
  const std::int64_t low = x.terms().begin()->first;
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.terms().rbegin();
    if (e - k < low) return std::nullopt;
    const auto term = LaurentElement::monomial(x.modulus(), e - k, c);
    q = q + term;
    rest = rest - term * (LaurentElement::monomial(x.modulus(), k, 1) - LaurentElement::monomial(x.modulus(), 0, 1));
  }
  return q;
}

}  // namespace grpring
