#pragma once

#include <cstdint>
#include <vector>

#include "grpring/error.hpp"

namespace grpring {

/// Canonical residue in [0, n).
using Residue = std::uint64_t;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// The coefficient ring Z/n together with the attributes the radical
/// computations need. Since Z/n is finite, its Jacobson radical equals its
/// nilradical; both are generated by the radical of n.
struct RingDescriptor {
  std::uint64_t modulus = 2;
  std::uint64_t characteristic = 2;
  bool is_field = true;
  bool is_reduced = true;
  Residue nilradical_generator = 0;
  Residue jacobson_generator = 0;
  std::vector<std::uint64_t> primes;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.modulus == b.modulus;
  }
};

/// Throws Errc::invalid_modulus when n < 2 (or n exceeds the 10^9 contract).
RingDescriptor make_ring(std::uint64_t n);

Residue reduce(const RingDescriptor& ring, std::int64_t value);
Residue add(const RingDescriptor& ring, Residue a, Residue b);
Residue sub(const RingDescriptor& ring, Residue a, Residue b);
Residue mul(const RingDescriptor& ring, Residue a, Residue b);
Residue neg(const RingDescriptor& ring, Residue a);
/// Throws Errc::not_a_unit when gcd(a, n) != 1.
Residue inv(const RingDescriptor& ring, Residue a);
Residue pow(const RingDescriptor& ring, Residue base, std::uint64_t exponent);
bool is_unit(const RingDescriptor& ring, Residue a);

/// True when p annihilates some nonzero residue, i.e. gcd(p, n) > 1.
bool is_zero_divisor(const RingDescriptor& ring, std::uint64_t p);

/// True when the integer p lies in the nilradical of Z/n (some power of p is 0).
bool in_nilradical(const RingDescriptor& ring, std::uint64_t p);

/// Generator g of the colon ideal (J(R) :_R p) = {r : r p in J(R)}.
/// The ideal (g) of Z/n equals the multiples of gcd(g, n); g = 0 is the zero ideal.
Residue colon_jacobson(const RingDescriptor& ring, std::uint64_t p);

}  // namespace grpring
