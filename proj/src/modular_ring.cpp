#include "grpring/modular_ring.hpp"

#include <string>

namespace grpring {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::not_a_unit: return "not-a-unit";
    case Errc::incompatible_operands: return "incompatible-operands";
    case Errc::unsupported_ring: return "unsupported-ring";
    case Errc::unsupported_group: return "unsupported-group";
    case Errc::too_large: return "too-large";
    case Errc::not_a_proper_ideal: return "not-a-proper-ideal";
    case Errc::not_applicable: return "not-applicable";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_an_ideal: return "not-an-ideal";
    case Errc::unknown_suite: return "unknown-suite";
  }
  return "unknown";
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

RingDescriptor make_ring(std::uint64_t n) {
  if (n < 2) throw Error(Errc::invalid_modulus, "modulus must be at least 2, got " + std::to_string(n));
  if (n > 1'000'000'000ULL) throw Error(Errc::invalid_modulus, "modulus exceeds 10^9");
  RingDescriptor r;
  r.modulus = n;
  r.characteristic = n;
  r.primes = prime_divisors(n);
  std::uint64_t radical = 1;
  for (auto p : r.primes) radical *= p;
  r.is_field = r.primes.size() == 1 && r.primes.front() == n;
  r.is_reduced = radical == n;
  r.nilradical_generator = radical % n;
  r.jacobson_generator = r.nilradical_generator;
  return r;
}

Residue reduce(const RingDescriptor& ring, std::int64_t value) {
  const auto n = static_cast<std::int64_t>(ring.modulus);
  std::int64_t v = value % n;
  if (v < 0) v += n;
  return static_cast<Residue>(v);
}

Residue add(const RingDescriptor& ring, Residue a, Residue b) {
  const Residue s = a + b;
  return s >= ring.modulus ? s - ring.modulus : s;
}

Residue sub(const RingDescriptor& ring, Residue a, Residue b) {
  return a >= b ? a - b : a + ring.modulus - b;
}

Residue mul(const RingDescriptor& ring, Residue a, Residue b) { return (a * b) % ring.modulus; }

Residue neg(const RingDescriptor& ring, Residue a) { return a == 0 ? 0 : ring.modulus - a; }

Residue inv(const RingDescriptor& ring, Residue a) {
  // Extended Euclid on signed values; the modulus fits comfortably in int64.
  std::int64_t old_r = static_cast<std::int64_t>(a % ring.modulus);
  std::int64_t r = static_cast<std::int64_t>(ring.modulus);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw Error(Errc::not_a_unit,
                std::to_string(a) + " is not invertible mod " + std::to_string(ring.modulus));
  return reduce(ring, old_s);
}

Residue pow(const RingDescriptor& ring, Residue base, std::uint64_t exponent) {
  Residue result = 1 % ring.modulus;
  base %= ring.modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(ring, result, base);
    base = mul(ring, base, base);
    exponent >>= 1U;
  }
  return result;
}

bool is_unit(const RingDescriptor& ring, Residue a) { return gcd(a % ring.modulus, ring.modulus) == 1; }

bool is_zero_divisor(const RingDescriptor& ring, std::uint64_t p) { return gcd(p, ring.modulus) > 1; }

bool in_nilradical(const RingDescriptor& ring, std::uint64_t p) {
  for (auto q : ring.primes)
    if (p % q != 0) return false;
  return true;
}

Residue colon_jacobson(const RingDescriptor& ring, std::uint64_t p) {
  const std::uint64_t n = ring.modulus;
  const std::uint64_t j = ring.jacobson_generator == 0 ? n : gcd(ring.jacobson_generator, n);
  return (j / gcd(j, p)) % n;
}

}  // namespace grpring
