#include "heckeq/arith.hpp"

#include "heckeq/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace heckeq {

namespace {

// Multiplication mod m without overflow (m < 2^63).
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    std::uint64_t x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < r - 1; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // These witnesses are a proven deterministic set for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return result;
}

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
    if (b == 0) {
        if (a >= 0) return {a, 1, 0};
        return {-a, -1, 0};
    }
    ExtGcd sub = ext_gcd(b, a % b);
    return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw InvalidElement("mod_inv: modulus must exceed 1");
    ExtGcd e = ext_gcd(static_cast<std::int64_t>(a % m),
                       static_cast<std::int64_t>(m));
    if (e.g != 1)
        throw InvalidElement("mod_inv: " + std::to_string(a) +
                             " is not invertible mod " + std::to_string(m));
    std::int64_t x = e.x % static_cast<std::int64_t>(m);
    if (x < 0) x += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(x);
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    std::uint64_t e = mod_pow(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

bool is_valid_q(std::uint64_t q) {
    return q > 3 && q % 4 == 3 && is_prime(q);
}

void require_valid_q(std::uint64_t q) {
    if (q <= 3) {
        throw UnsupportedPrime(
            "q = " + std::to_string(q) +
            " is not supported: this engine requires a prime q with q = 3 "
            "(mod 4) and q > 3");
    }
    if (!is_prime(q)) {
        throw UnsupportedPrime("q = " + std::to_string(q) + " is not prime");
    }
    if (q % 4 != 3) {
        throw UnsupportedPrime("q = " + std::to_string(q) +
                               " is not congruent to 3 mod 4");
    }
}

std::vector<std::uint64_t> valid_q_in_range(std::uint64_t lo,
                                            std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < lo) return out;
    // First candidate >= max(lo, 7) that is 3 mod 4.
    std::uint64_t start = lo < 7 ? 7 : lo;
    std::uint64_t first = start + ((3 + 4 - start % 4) % 4);
    for (std::uint64_t q = first; q <= hi; q += 4) {
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::string rational_to_string(const mpq_class& r) {
    mpq_class c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace heckeq
