#pragma once

// Cusps of the congruence subgroup of level q consisting of matrices
// congruent to (1, *; 0, 1) mod q: canonical representatives, widths, the
// weight-2 multiplier, cusp parameters kappa, the divisor degree from the
// valence formula, curve genus, and the function-space dimension
// z = m - g + 1 from Riemann-Roch.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "heckeq/cyclotomic.hpp"

namespace heckeq {

// A cusp r/s in lowest terms with s >= 0; infinity is 1/0.
struct Cusp {
    std::int64_t r = 1;
    std::int64_t s = 0;

    std::string to_string() const;

    friend bool operator==(const Cusp& a, const Cusp& b) {
        return a.r == b.r && a.s == b.s;
    }
};

struct CuspData {
    Cusp cusp;
    std::uint64_t width = 0;
    mpq_class kappa; // in [0, 1); nonzero only when s = 0 (mod q)
};

struct DivisorSummary {
    std::uint64_t q = 0;
    std::uint64_t mu = 0;      // index (q^2 - 1)/2
    std::uint64_t g = 0;       // genus
    mpq_class kappa_sum;       // sum of cusp parameters
    mpq_class m;               // divisor degree mu/6 - kappa_sum (an integer)
    std::int64_t z = 0;        // m - g + 1
};

// Index of the level-q subgroup in the full modular group: (q^2 - 1)/2.
std::uint64_t gamma1_index(std::uint64_t q);

// Scale matrix L in SL2(Z) with L(infinity) = r/s (first column r, s).
std::array<std::int64_t, 4> cusp_scale_matrix(const Cusp& cusp);

// True iff the two cusps are equivalent under the level-q subgroup:
// (r', s') = +-(r + j*s, s) (mod q) for some j.
bool cusps_equivalent(std::uint64_t q, const Cusp& a, const Cusp& b);

// Canonical representative of the orbit of r/s (gcd(r, s) = 1).
Cusp canonical_cusp(std::uint64_t q, std::int64_t r, std::int64_t s);

// The q - 1 inequivalent cusps in deterministic order: first r/q for
// r = 1..(q-1)/2 (width 1, kappa = fractional part of r^2/q), then the
// (q-1)/2 cusps with s not divisible by q (width q, kappa = 0).
// Valid for any prime q >= 5.
std::vector<CuspData> cusp_representatives(std::uint64_t q);

// Weight-2 multiplier zeta_q^b of an integer matrix (a, b; c, d) that is
// congruent to (1, *; 0, 1) mod q with determinant 1; NotInGroup otherwise.
CycloNumber multiplier_v(std::uint64_t q,
                         const std::array<std::int64_t, 4>& gamma);

// Least n >= 1 with L P^n L^(-1) in the level-q subgroup, found by search
// and asserted against the closed form (1 when s = 0 mod q, else q).
std::uint64_t cusp_width(std::uint64_t q, const Cusp& cusp);

// kappa in [0, 1): the multiplier of L P^width L^(-1) is exp(2*pi*i*kappa).
// Computed through multiplier_v and asserted against the closed form.
mpq_class cusp_parameter(std::uint64_t q, const Cusp& cusp);

// Genus (q-5)(q-7)/24 of the level-q curve; integral for every prime
// q >= 5, UnsupportedPrime if the formula fails to be integral.
std::uint64_t genus_x1(std::uint64_t q);

// Full divisor bookkeeping; requires q prime, q = 3 (mod 4), q > 3.
// Asserts m integral, m - 2g + 2 = q - 1 - kappa_sum > 0, and z >= 1.
DivisorSummary divisor_summary(std::uint64_t q);

} // namespace heckeq
