#pragma once

// Small integer-arithmetic helpers shared by every module: primality,
// modular exponentiation and inverse, Legendre symbols, and validation of
// the primes this engine accepts (q prime, q = 3 mod 4, q > 3).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace heckeq {

// Deterministic for all 64-bit inputs (trial division + Miller-Rabin base set).
bool is_prime(std::uint64_t n);

// b^e mod m for m > 1.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct ExtGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
};
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

// Inverse of a mod m (m > 1, gcd(a,m) = 1); throws InvalidElement otherwise.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);

// Legendre symbol (a/p) for odd prime p: +1, -1, or 0.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// True iff q is prime, q = 3 (mod 4), q > 3.
bool is_valid_q(std::uint64_t q);

// Throws UnsupportedPrime with a specific message when is_valid_q fails.
void require_valid_q(std::uint64_t q);

// All primes q in [lo, hi] with q = 3 (mod 4) and q > 3, ascending.
std::vector<std::uint64_t> valid_q_in_range(std::uint64_t lo, std::uint64_t hi);

// gcd helper for unsigned 64-bit values.
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Floor of sqrt(n).
std::uint64_t isqrt_u64(std::uint64_t n);

// Renders an exact rational as "num/den" in lowest terms; integers keep an
// explicit denominator ("3" renders as "3/1") so the format is uniform.
std::string rational_to_string(const mpq_class& r);

} // namespace heckeq
