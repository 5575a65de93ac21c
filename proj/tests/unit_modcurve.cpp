#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "heckeq/arith.hpp"
#include "heckeq/cyclotomic.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/modcurve.hpp"

using namespace heckeq;

TEST_CASE("index and genus") {
    CHECK(gamma1_index(5) == 12);
    CHECK(gamma1_index(7) == 24);
    CHECK(gamma1_index(11) == 60);
    CHECK(gamma1_index(23) == 264);
    CHECK(genus_x1(7) == 0);
    CHECK(genus_x1(11) == 1);
    CHECK(genus_x1(13) == 2);
    CHECK(genus_x1(19) == 7);
    CHECK(genus_x1(23) == 12);
    CHECK(genus_x1(31) == 26);
    CHECK_THROWS_AS((void)gamma1_index(9), UnsupportedPrime);
    CHECK_THROWS_AS((void)gamma1_index(3), UnsupportedPrime);
}

TEST_CASE("cusp representatives: count, widths, parameters") {
    for (std::uint64_t q : {5u, 7u, 11u, 13u, 19u, 23u, 29u}) {
        std::vector<CuspData> cusps = cusp_representatives(q);
        CHECK(cusps.size() == q - 1);
        std::uint64_t width_sum = 0;
        mpq_class kappa_sum(0);
        for (const CuspData& cd : cusps) {
            width_sum += cd.width;
            kappa_sum += cd.kappa;
            const bool at_level = cd.cusp.s % static_cast<std::int64_t>(q) ==
                                  0;
            if (at_level) {
                CHECK(cd.width == 1);
                mpq_class expect(
                    (cd.cusp.r * cd.cusp.r) % static_cast<std::int64_t>(q),
                    q);
                expect.canonicalize();
                CHECK(cd.kappa == expect);
                CHECK(cd.kappa != 0);
            } else {
                CHECK(cd.width == q);
                CHECK(cd.kappa == 0);
            }
        }
        CHECK(width_sum == (q * q - 1) / 2);
        // kappa_sum is (q - 1)/4 + S/(2q) with S < 0; for q = 3 mod 4 it is
        // a positive integer strictly below (q - 1)/4.
        if (q % 4 == 3) {
            kappa_sum.canonicalize();
            CHECK(kappa_sum.get_den() == 1);
        }
    }
    std::vector<CuspData> c7 = cusp_representatives(7);
    CHECK(c7[0].cusp == Cusp{1, 7});
    CHECK(c7[0].kappa == mpq_class(1, 7));
    CHECK(c7[1].kappa == mpq_class(4, 7));
    CHECK(c7[2].kappa == mpq_class(2, 7));
    CHECK(c7[3].cusp == Cusp{0, 1});
}

TEST_CASE("cusp equivalence and canonical form") {
    // r/s ~ (r + j s)/s and ~ -r/-s at level q.
    CHECK(cusps_equivalent(7, Cusp{1, 7}, Cusp{8, 7}));
    CHECK(cusps_equivalent(7, Cusp{1, 7}, Cusp{6, 7})); // -1/-7 = 6/0 mod 7
    CHECK_FALSE(cusps_equivalent(7, Cusp{1, 7}, Cusp{2, 7}));
    CHECK(cusps_equivalent(7, Cusp{0, 1}, Cusp{1, 1}));
    CHECK_FALSE(cusps_equivalent(7, Cusp{0, 1}, Cusp{1, 2}));
    // infinity = 1/0 is the same cusp as 1/q.
    CHECK(cusps_equivalent(7, Cusp{1, 0}, Cusp{1, 7}));
    CHECK(canonical_cusp(7, 1, 0) == Cusp{1, 7});
    CHECK(canonical_cusp(7, 8, 7) == Cusp{1, 7});
    CHECK(canonical_cusp(7, 6, 7) == Cusp{1, 7});
    CHECK(canonical_cusp(7, 1, 1) == Cusp{0, 1});
    CHECK(canonical_cusp(7, 3, 5) == canonical_cusp(7, 3 - 5, 5));

    // The representative list is pairwise inequivalent and closed: every
    // coprime pair lands on exactly one representative.
    for (std::uint64_t q : {7u, 11u}) {
        std::vector<CuspData> cusps = cusp_representatives(q);
        for (std::size_t i = 0; i < cusps.size(); ++i)
            for (std::size_t j = i + 1; j < cusps.size(); ++j)
                CHECK_FALSE(cusps_equivalent(q, cusps[i].cusp,
                                             cusps[j].cusp));
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (std::int64_t r = -12; r <= 12; ++r)
            for (std::int64_t s = -12; s <= 12; ++s) {
                if (gcd_u64(static_cast<std::uint64_t>(r < 0 ? -r : r),
                            static_cast<std::uint64_t>(s < 0 ? -s : s)) != 1)
                    continue;
                Cusp canon = canonical_cusp(q, r, s);
                bool found = false;
                for (const CuspData& cd : cusps)
                    if (cd.cusp == canon)
                        found = true;
                CHECK(found);
                seen.insert({canon.r, canon.s});
            }
        CHECK(seen.size() == cusps.size());
    }
}

TEST_CASE("cusp scale matrix maps infinity to the cusp") {
    for (std::uint64_t q : {7u, 11u}) {
        for (const CuspData& cd : cusp_representatives(q)) {
            auto L = cusp_scale_matrix(cd.cusp);
            CHECK(L[0] * L[3] - L[1] * L[2] == 1);
            CHECK(L[0] == cd.cusp.r);
            CHECK(L[2] == cd.cusp.s);
        }
    }
}

TEST_CASE("weight-2 multiplier") {
    // The standard unipotent generator has multiplier zeta_q.
    CHECK(multiplier_v(7, {1, 1, 0, 1}) == CycloNumber::zeta_power(7, 1));
    CHECK(multiplier_v(7, {1, -3, 0, 1}) == CycloNumber::zeta_power(7, -3));
    CHECK(multiplier_v(7, {1, 0, 7, 1}) == CycloNumber(1L));
    CHECK(multiplier_v(7, {8, 3, 21, 8}) == CycloNumber::zeta_power(7, 3));
    // Not integer determinant one / not congruent to upper unitriangular.
    CHECK_THROWS_AS((void)multiplier_v(7, {1, 1, 1, 1}), NotInGroup);
    CHECK_THROWS_AS((void)multiplier_v(7, {2, 0, 0, 4}), NotInGroup);
    CHECK_THROWS_AS((void)multiplier_v(7, {2, 1, 1, 1}), NotInGroup);
    CHECK_THROWS_AS((void)multiplier_v(7, {1, 0, 1, 1}), NotInGroup);
}

TEST_CASE("cusp width and parameter closed forms") {
    CHECK(cusp_width(7, Cusp{1, 7}) == 1);
    CHECK(cusp_width(7, Cusp{0, 1}) == 7);
    CHECK(cusp_width(7, Cusp{1, 2}) == 7);
    CHECK(cusp_parameter(7, Cusp{3, 7}) == mpq_class(2, 7));
    CHECK(cusp_parameter(11, Cusp{5, 11}) == mpq_class(3, 11));
    CHECK(cusp_parameter(11, Cusp{1, 3}) == 0);
}

TEST_CASE("divisor summary chains") {
    DivisorSummary d7 = divisor_summary(7);
    CHECK(d7.mu == 24);
    CHECK(d7.g == 0);
    CHECK(d7.kappa_sum == 1);
    CHECK(d7.m == 3);
    CHECK(d7.z == 4);

    DivisorSummary d11 = divisor_summary(11);
    CHECK(d11.mu == 60);
    CHECK(d11.g == 1);
    CHECK(d11.kappa_sum == 2);
    CHECK(d11.m == 8);
    CHECK(d11.z == 8);

    DivisorSummary d23 = divisor_summary(23);
    CHECK(d23.mu == 264);
    CHECK(d23.g == 12);
    CHECK(d23.kappa_sum == 4);
    CHECK(d23.m == 40);
    CHECK(d23.z == 29);

    CHECK_THROWS_AS((void)divisor_summary(13), UnsupportedPrime);

    // m - 2g + 2 = (q - 1) - kappa_sum stays positive.
    for (std::uint64_t q : valid_q_in_range(7, 200)) {
        DivisorSummary d = divisor_summary(q);
        mpq_class lhs = d.m - 2 * mpq_class(d.g) + 2;
        mpq_class rhs = mpq_class(q - 1) - d.kappa_sum;
        CHECK(lhs == rhs);
        CHECK(lhs > 0);
    }
}

TEST_CASE("cusp label formatting") {
    CHECK(Cusp{1, 0}.to_string() == "inf");
    CHECK(Cusp{1, 7}.to_string() == "1/7");
    CHECK(Cusp{0, 1}.to_string() == "0/1");
}
