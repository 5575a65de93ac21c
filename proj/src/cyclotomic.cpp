#include "heckeq/cyclotomic.hpp"

#include "heckeq/arith.hpp"
#include "heckeq/errors.hpp"

#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

namespace heckeq {

namespace {

std::atomic<std::uint64_t> g_conductor_ceiling{1000000};

std::vector<std::uint64_t> divisors_ascending(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Exact division of integer polynomials; den must be monic and divide num.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        mpz_class c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const mpz_class& c : num) {
        if (c != 0)
            throw InternalInconsistency(
                "cyclotomic polynomial division left a remainder");
    }
    return quot;
}

} // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw InvalidElement("cyclotomic_polynomial: n must be >= 1");
    static std::mutex mutex;
    static std::map<std::uint64_t, std::vector<mpz_class>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    // Build Phi_d for every divisor d of n in ascending order, dividing
    // x^d - 1 by the polynomials of the proper divisors of d.
    for (std::uint64_t d : divisors_ascending(n)) {
        if (cache.count(d)) continue;
        std::vector<mpz_class> poly(d + 1, 0);
        poly[0] = -1;
        poly[d] = 1;
        for (std::uint64_t e : divisors_ascending(d)) {
            if (e == d) continue;
            poly = poly_div_exact(std::move(poly), cache.at(e));
        }
        cache.emplace(d, std::move(poly));
    }
    return cache.at(n);
}

CycloNumber::CycloNumber() : n_(1), coeffs_(1, mpq_class(0)) {}

CycloNumber::CycloNumber(const mpq_class& value) : n_(1), coeffs_(1, value) {
    coeffs_[0].canonicalize();
}

CycloNumber::CycloNumber(long value) : n_(1), coeffs_(1, mpq_class(value)) {}

CycloNumber::CycloNumber(std::uint64_t n, std::vector<mpq_class> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {}

std::vector<mpq_class> CycloNumber::reduce_mod_cyclotomic(
    std::uint64_t n, std::vector<mpq_class> raw) {
    // Fold exponents mod n (zeta^n = 1), then divide by the monic
    // cyclotomic polynomial to land in the power basis of length phi(n).
    if (raw.size() > n) {
        for (std::size_t i = n; i < raw.size(); ++i) raw[i % n] += raw[i];
        raw.resize(n);
    }
    const std::vector<mpz_class>& phi_poly = cyclotomic_polynomial(n);
    const std::size_t deg = phi_poly.size() - 1; // = phi(n)
    for (std::size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        mpq_class c = raw[i];
        raw[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            raw[i - deg + j] -= c * phi_poly[j];
    }
    raw.resize(deg, mpq_class(0));
    return raw;
}

CycloNumber CycloNumber::zeta_power(std::uint64_t n, std::int64_t k) {
    if (n == 0) throw InvalidElement("zeta_power: conductor must be >= 1");
    if (n > conductor_ceiling())
        throw ConductorTooLarge("zeta_power: conductor " + std::to_string(n) +
                                " exceeds ceiling " +
                                std::to_string(conductor_ceiling()));
    std::int64_t r = k % static_cast<std::int64_t>(n);
    if (r < 0) r += static_cast<std::int64_t>(n);
    std::vector<mpq_class> raw(n, mpq_class(0));
    raw[static_cast<std::size_t>(r)] = 1;
    return CycloNumber(n, reduce_mod_cyclotomic(n, std::move(raw)));
}

CycloNumber CycloNumber::rational_in(std::uint64_t n, const mpq_class& value) {
    return CycloNumber(value).in_conductor(n);
}

bool CycloNumber::is_zero() const {
    for (const mpq_class& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

mpq_class CycloNumber::rational_value() const {
    if (!is_rational())
        throw ExactModeUnavailable(
            "rational_value: number is not rational (conductor " +
            std::to_string(n_) + ")");
    return coeffs_[0];
}

CycloNumber CycloNumber::conj() const {
    std::vector<mpq_class> raw(n_, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        raw[(n_ - i) % n_] += coeffs_[i];
    return CycloNumber(n_, reduce_mod_cyclotomic(n_, std::move(raw)));
}

std::complex<double> CycloNumber::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double c = coeffs_[i].get_d();
        double angle = step * static_cast<double>(i);
        acc += c * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::pair<mpf_class, mpf_class> CycloNumber::to_complex(
    unsigned precision_bits) const {
    if (precision_bits < 53)
        throw InvalidElement("to_complex: precision_bits must be >= 53");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 32;
    mpfr_t two_pi, angle, cs, sn, re, im, coef;
    mpfr_inits2(prec, two_pi, angle, cs, sn, re, im, coef,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    mpfr_set_ui(re, 0, MPFR_RNDN);
    mpfr_set_ui(im, 0, MPFR_RNDN);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        mpfr_mul_ui(angle, two_pi, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_div_ui(angle, angle, static_cast<unsigned long>(n_), MPFR_RNDN);
        mpfr_sin_cos(sn, cs, angle, MPFR_RNDN);
        mpfr_set_q(coef, coeffs_[i].get_mpq_t(), MPFR_RNDN);
        mpfr_fma(re, coef, cs, re, MPFR_RNDN);
        mpfr_fma(im, coef, sn, im, MPFR_RNDN);
    }
    mpf_class re_out(0, precision_bits), im_out(0, precision_bits);
    mpfr_get_f(re_out.get_mpf_t(), re, MPFR_RNDN);
    mpfr_get_f(im_out.get_mpf_t(), im, MPFR_RNDN);
    mpfr_clears(two_pi, angle, cs, sn, re, im, coef,
                static_cast<mpfr_ptr>(nullptr));
    return {re_out, im_out};
}

CycloNumber CycloNumber::in_conductor(std::uint64_t m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw InvalidElement("in_conductor: " + std::to_string(m) +
                             " is not a multiple of " + std::to_string(n_));
    if (m > conductor_ceiling())
        throw ConductorTooLarge("in_conductor: conductor " +
                                std::to_string(m) + " exceeds ceiling " +
                                std::to_string(conductor_ceiling()));
    const std::uint64_t ratio = m / n_;
    std::vector<mpq_class> raw((coeffs_.size() - 1) * ratio + 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * ratio] = coeffs_[i];
    return CycloNumber(m, reduce_mod_cyclotomic(m, std::move(raw)));
}

CycloNumber CycloNumber::simplified() const {
    if (n_ != 1 && is_rational()) return CycloNumber(coeffs_[0]);
    return *this;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (mpq_class& c : out.coeffs_) c = -c;
    return out;
}

namespace {

std::uint64_t common_conductor(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    return a / g * b;
}

} // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
    std::uint64_t m = common_conductor(n_, rhs.n_);
    if (m != n_) *this = in_conductor(m);
    if (m != rhs.n_) {
        CycloNumber other = rhs.in_conductor(m);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
    } else {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
    *this += -rhs;
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
    std::uint64_t m = common_conductor(n_, rhs.n_);
    CycloNumber a = (m == n_) ? *this : in_conductor(m);
    CycloNumber b = (m == rhs.n_) ? rhs : rhs.in_conductor(m);
    std::vector<mpq_class> raw(a.coeffs_.size() + b.coeffs_.size() - 1,
                               mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    *this = CycloNumber(m, reduce_mod_cyclotomic(m, std::move(raw)));
    return *this;
}

bool CycloNumber::operator==(const CycloNumber& rhs) const {
    if (n_ == rhs.n_) return coeffs_ == rhs.coeffs_;
    return (*this - rhs).is_zero();
}

std::uint64_t CycloNumber::conductor_ceiling() {
    return g_conductor_ceiling.load();
}

void CycloNumber::set_conductor_ceiling(std::uint64_t ceiling) {
    g_conductor_ceiling.store(ceiling == 0 ? 1 : ceiling);
}

CycloNumber gauss_sum(std::uint64_t q) {
    if (!is_prime(q) || q == 2)
        throw UnsupportedPrime("gauss_sum: q = " + std::to_string(q) +
                               " must be an odd prime");
    CycloNumber acc;
    for (std::uint64_t x = 1; x < q; ++x) {
        if (legendre_symbol(static_cast<std::int64_t>(x), q) == 1)
            acc += CycloNumber::zeta_power(q, static_cast<std::int64_t>(x));
    }
    return acc;
}

CycloNumber gauss_sum_conjugate(std::uint64_t q) {
    if (!is_prime(q) || q == 2)
        throw UnsupportedPrime("gauss_sum: q = " + std::to_string(q) +
                               " must be an odd prime");
    CycloNumber acc;
    for (std::uint64_t x = 1; x < q; ++x) {
        if (legendre_symbol(static_cast<std::int64_t>(x), q) == -1)
            acc += CycloNumber::zeta_power(q, static_cast<std::int64_t>(x));
    }
    return acc;
}

} // namespace heckeq
