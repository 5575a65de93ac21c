#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycloNumber stores a conductor n and a dense coefficient vector of
// length phi(n) over the power basis 1, zeta, ..., zeta^(phi(n)-1), always
// reduced modulo the n-th cyclotomic polynomial.  Mixed-conductor
// arithmetic coerces both operands into Q(zeta_lcm) first; a configurable
// ceiling on the lcm guards against accidental blow-ups.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace heckeq {

// Euler phi.
std::uint64_t euler_phi(std::uint64_t n);

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// leading coefficient (always 1) last.  Computed once per n and cached.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n);

class CycloNumber {
public:
    // Zero in Q(zeta_1) = Q.
    CycloNumber();

    // A rational constant (conductor 1).
    explicit CycloNumber(const mpq_class& value);
    explicit CycloNumber(long value);

    // zeta_n^k, exponent taken mod n.
    static CycloNumber zeta_power(std::uint64_t n, std::int64_t k);

    // A rational constant viewed inside Q(zeta_n).
    static CycloNumber rational_in(std::uint64_t n, const mpq_class& value);

    std::uint64_t conductor() const { return n_; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    // The rational value; throws ExactModeUnavailable if not rational.
    mpq_class rational_value() const;

    // Complex conjugate (zeta^i -> zeta^(n-i)).
    CycloNumber conj() const;

    // Numerical image under zeta_n -> exp(2*pi*i/n), double precision.
    std::complex<double> to_complex() const;

    // Arbitrary-precision embedding (precision_bits >= 53): real and
    // imaginary parts as GMP floats.  Evaluated internally with a guard of
    // 32 extra bits, so the absolute error is below
    // (1 + sum|coeffs|) * 2^-(precision_bits + 16).
    std::pair<mpf_class, mpf_class> to_complex(unsigned precision_bits) const;

    // Re-express in Q(zeta_m); m must be a multiple of the conductor and
    // must not exceed the ceiling.  Throws ConductorTooLarge otherwise.
    CycloNumber in_conductor(std::uint64_t m) const;

    // Drops to the smallest conductor this implementation tracks cheaply:
    // conductor 1 when the value is rational, otherwise unchanged.
    CycloNumber simplified() const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) {
        a += b;
        return a;
    }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) {
        a -= b;
        return a;
    }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) {
        a *= b;
        return a;
    }

    bool operator==(const CycloNumber& rhs) const;
    bool operator!=(const CycloNumber& rhs) const { return !(*this == rhs); }

    // Maximum lcm of conductors allowed during coercion (process-wide).
    static std::uint64_t conductor_ceiling();
    static void set_conductor_ceiling(std::uint64_t ceiling);

private:
    CycloNumber(std::uint64_t n, std::vector<mpq_class> coeffs);

    // Reduces a raw exponent vector (length may reach 2*phi(n)-1 after a
    // product) modulo the cyclotomic polynomial.
    static std::vector<mpq_class> reduce_mod_cyclotomic(
        std::uint64_t n, std::vector<mpq_class> raw);

    std::uint64_t n_;                  // conductor
    std::vector<mpq_class> coeffs_;    // length phi(n_)
};

// Quadratic Gauss sum for an odd prime q: the sum of zeta_q^x over the
// nonzero quadratic residues x mod q.
CycloNumber gauss_sum(std::uint64_t q);

// Same sum over the quadratic nonresidues (the conjugate of gauss_sum when
// q = 3 mod 4).
CycloNumber gauss_sum_conjugate(std::uint64_t q);

} // namespace heckeq
