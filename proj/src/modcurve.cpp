#include "heckeq/modcurve.hpp"

#include "heckeq/arith.hpp"
#include "heckeq/errors.hpp"

#include <numeric>
#include <string>

namespace heckeq {

namespace {

std::uint64_t norm_mod(std::int64_t v, std::uint64_t q) {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(r);
}

void require_prime_ge5(std::uint64_t q) {
    if (q < 5 || !is_prime(q))
        throw UnsupportedPrime("level must be a prime >= 5, got " +
                               std::to_string(q));
}

void require_coprime(std::int64_t r, std::int64_t s) {
    std::int64_t g = std::gcd(r < 0 ? -r : r, s < 0 ? -s : s);
    if (g != 1)
        throw InvalidElement("cusp " + std::to_string(r) + "/" +
                             std::to_string(s) + " is not in lowest terms");
}

// Conjugate of the n-th power of the unipotent generator by the scale
// matrix of r/s: an integer matrix (1 - nrs, nr^2; -ns^2, 1 + nrs).
std::array<std::int64_t, 4> scaled_translation(std::int64_t r, std::int64_t s,
                                               std::int64_t n) {
    return {1 - n * r * s, n * r * r, -n * s * s, 1 + n * r * s};
}

bool in_level_subgroup(std::uint64_t q, const std::array<std::int64_t, 4>& m) {
    return norm_mod(m[0], q) == 1 && norm_mod(m[3], q) == 1 &&
           norm_mod(m[2], q) == 0;
}

} // namespace

std::string Cusp::to_string() const {
    if (s == 0) return "inf";
    return std::to_string(r) + "/" + std::to_string(s);
}

std::uint64_t gamma1_index(std::uint64_t q) {
    require_prime_ge5(q);
    return (q * q - 1) / 2;
}

std::array<std::int64_t, 4> cusp_scale_matrix(const Cusp& cusp) {
    require_coprime(cusp.r, cusp.s);
    ExtGcd e = ext_gcd(cusp.r, cusp.s);
    // r*x + s*y = 1, so L = (r, -y; s, x) has determinant r*x + s*y = 1.
    return {cusp.r, -e.y, cusp.s, e.x};
}

bool cusps_equivalent(std::uint64_t q, const Cusp& a, const Cusp& b) {
    require_prime_ge5(q);
    require_coprime(a.r, a.s);
    require_coprime(b.r, b.s);
    const std::uint64_t ra = norm_mod(a.r, q), sa = norm_mod(a.s, q);
    const std::uint64_t rb = norm_mod(b.r, q), sb = norm_mod(b.s, q);
    for (std::uint64_t j = 0; j < q; ++j) {
        std::uint64_t r_shift = (ra + j * sa) % q;
        if (rb == r_shift && sb == sa) return true;
        if (rb == (q - r_shift) % q && sb == (q - sa) % q) return true;
    }
    return false;
}

Cusp canonical_cusp(std::uint64_t q, std::int64_t r, std::int64_t s) {
    require_prime_ge5(q);
    require_coprime(r, s);
    const std::uint64_t s_mod = norm_mod(s, q);
    if (s_mod == 0) {
        // Class determined by +-r mod q; representative r0/q with
        // r0 in [1, (q-1)/2].
        std::uint64_t r_mod = norm_mod(r, q);
        std::uint64_t r0 = std::min(r_mod, q - r_mod);
        return Cusp{static_cast<std::int64_t>(r0),
                    static_cast<std::int64_t>(q)};
    }
    // Class determined by +-s mod q; representatives 0/1 and 1/s0.
    std::uint64_t s0 = std::min(s_mod, q - s_mod);
    if (s0 == 1) return Cusp{0, 1};
    return Cusp{1, static_cast<std::int64_t>(s0)};
}

std::vector<CuspData> cusp_representatives(std::uint64_t q) {
    require_prime_ge5(q);
    std::vector<CuspData> out;
    out.reserve(q - 1);
    for (std::uint64_t r = 1; r <= (q - 1) / 2; ++r) {
        Cusp c{static_cast<std::int64_t>(r), static_cast<std::int64_t>(q)};
        out.push_back(CuspData{c, cusp_width(q, c), cusp_parameter(q, c)});
    }
    for (std::uint64_t s0 = 1; s0 <= (q - 1) / 2; ++s0) {
        Cusp c = s0 == 1 ? Cusp{0, 1} : Cusp{1, static_cast<std::int64_t>(s0)};
        out.push_back(CuspData{c, cusp_width(q, c), cusp_parameter(q, c)});
    }

    // Sanity: count q - 1 and widths fill the index.  (Pairwise
    // inequivalence is O(q^3) and exercised by tests, not per call.)
    if (out.size() != q - 1)
        throw InternalInconsistency("cusp_representatives: expected " +
                                    std::to_string(q - 1) + " cusps");
    std::uint64_t width_sum = 0;
    for (const CuspData& cd : out) width_sum += cd.width;
    if (width_sum != gamma1_index(q))
        throw InternalInconsistency(
            "cusp_representatives: widths sum to " +
            std::to_string(width_sum) + ", expected " +
            std::to_string(gamma1_index(q)));
    return out;
}

CycloNumber multiplier_v(std::uint64_t q,
                         const std::array<std::int64_t, 4>& gamma) {
    require_prime_ge5(q);
    const __int128 det = static_cast<__int128>(gamma[0]) * gamma[3] -
                         static_cast<__int128>(gamma[1]) * gamma[2];
    if (det != 1)
        throw NotInGroup("multiplier_v: matrix determinant is not 1");
    if (!in_level_subgroup(q, gamma))
        throw NotInGroup(
            "multiplier_v: matrix is not congruent to (1, *; 0, 1) mod " +
            std::to_string(q));
    return CycloNumber::zeta_power(
        q, static_cast<std::int64_t>(norm_mod(gamma[1], q)));
}

std::uint64_t cusp_width(std::uint64_t q, const Cusp& cusp) {
    require_prime_ge5(q);
    require_coprime(cusp.r, cusp.s);
    std::uint64_t found = 0;
    for (std::uint64_t n = 1; n <= q; ++n) {
        if (in_level_subgroup(
                q, scaled_translation(cusp.r, cusp.s,
                                      static_cast<std::int64_t>(n)))) {
            found = n;
            break;
        }
    }
    const std::uint64_t expected = norm_mod(cusp.s, q) == 0 ? 1 : q;
    if (found != expected)
        throw InternalInconsistency(
            "cusp_width: search found " + std::to_string(found) +
            " for cusp " + cusp.to_string() + ", closed form expects " +
            std::to_string(expected));
    return found;
}

mpq_class cusp_parameter(std::uint64_t q, const Cusp& cusp) {
    const std::uint64_t n = cusp_width(q, cusp);
    const std::array<std::int64_t, 4> m =
        scaled_translation(cusp.r, cusp.s, static_cast<std::int64_t>(n));
    const CycloNumber v = multiplier_v(q, m);
    const std::uint64_t e = norm_mod(m[1], q);
    if (v != CycloNumber::zeta_power(q, static_cast<std::int64_t>(e)))
        throw InternalInconsistency("cusp_parameter: multiplier mismatch");
    mpq_class kappa(static_cast<unsigned long>(e),
                    static_cast<unsigned long>(q));
    kappa.canonicalize();

    // Closed form: {r^2/q} on the s = 0 (mod q) cusps, 0 elsewhere.
    mpq_class expected = 0;
    if (norm_mod(cusp.s, q) == 0) {
        expected = mpq_class(
            static_cast<unsigned long>(
                norm_mod(cusp.r * cusp.r, q)),
            static_cast<unsigned long>(q));
        expected.canonicalize();
    }
    if (kappa != expected)
        throw InternalInconsistency("cusp_parameter: computed " +
                                    rational_to_string(kappa) +
                                    " but closed form gives " +
                                    rational_to_string(expected) +
                                    " for cusp " + cusp.to_string());
    return kappa;
}

std::uint64_t genus_x1(std::uint64_t q) {
    require_prime_ge5(q);
    const std::uint64_t num = (q - 5) * (q - 7);
    if (num % 24 != 0)
        throw UnsupportedPrime("genus formula (q-5)(q-7)/24 is not integral "
                               "for q = " + std::to_string(q));
    return num / 24;
}

DivisorSummary divisor_summary(std::uint64_t q) {
    require_valid_q(q);
    DivisorSummary ds;
    ds.q = q;
    ds.mu = gamma1_index(q);
    ds.g = genus_x1(q);
    ds.kappa_sum = 0;
    for (const CuspData& cd : cusp_representatives(q)) ds.kappa_sum += cd.kappa;
    ds.kappa_sum.canonicalize();

    ds.m = mpq_class(static_cast<unsigned long>(ds.mu), 6u) - ds.kappa_sum;
    ds.m.canonicalize();
    if (ds.m.get_den() != 1)
        throw InternalInconsistency("divisor degree m = " +
                                    rational_to_string(ds.m) +
                                    " is not an integer for q = " +
                                    std::to_string(q));

    // The divisor must beat the Riemann-Roch threshold:
    // m - 2g + 2 = q - 1 - kappa_sum > 0.
    mpq_class lhs = ds.m - 2 * static_cast<long>(ds.g) + 2;
    mpq_class rhs =
        mpq_class(static_cast<long>(q) - 1) - ds.kappa_sum;
    if (lhs != rhs)
        throw InternalInconsistency(
            "divisor_summary: m - 2g + 2 != q - 1 - kappa_sum for q = " +
            std::to_string(q));
    if (lhs <= 0)
        throw InternalInconsistency(
            "divisor_summary: degree does not exceed 2g - 2 for q = " +
            std::to_string(q));

    mpq_class z_q = ds.m - static_cast<long>(ds.g) + 1;
    ds.z = static_cast<std::int64_t>(z_q.get_num().get_si());
    if (ds.z < 1)
        throw InternalInconsistency("divisor_summary: z < 1 for q = " +
                                    std::to_string(q));
    return ds;
}

} // namespace heckeq
