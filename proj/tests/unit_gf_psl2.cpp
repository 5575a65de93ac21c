#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "heckeq/arith.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/gf_psl2.hpp"

using namespace heckeq;

namespace {

// Every element of PSL2(F_q), via its packed canonical form.
std::vector<PSL2Element> all_elements(std::uint64_t q) {
    std::set<PSL2Element> out;
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            for (std::uint64_t c = 0; c < q; ++c)
                for (std::uint64_t d = 0; d < q; ++d)
                    if (a * d % q == (1 + b * c) % q)
                        out.insert(PSL2Element(
                            q, static_cast<std::int64_t>(a),
                            static_cast<std::int64_t>(b),
                            static_cast<std::int64_t>(c),
                            static_cast<std::int64_t>(d)));
    return {out.begin(), out.end()};
}

PSL2Element random_element(std::mt19937_64& rng, std::uint64_t q) {
    // Random product of the two standard generators.
    PSL2Element s(q, 0, -1, 1, 0);
    PSL2Element t(q, 1, 1, 0, 1);
    PSL2Element x = PSL2Element::identity(q);
    std::uniform_int_distribution<int> len(3, 24);
    std::uniform_int_distribution<int> coin(0, 1);
    int n = len(rng);
    for (int i = 0; i < n; ++i)
        x = psl2_mul(x, coin(rng) ? s : t);
    return x;
}

} // namespace

TEST_CASE("group order") {
    CHECK(psl2_group_order(7) == 168);
    CHECK(psl2_group_order(11) == 660);
    CHECK(psl2_group_order(19) == 3420);
    CHECK(psl2_group_order(23) == 6072);
}

TEST_CASE("canonicalization identifies M with -M and validates det") {
    PSL2Element x(7, 2, 0, 0, 4);
    PSL2Element y(7, -2, 0, 0, -4); // same element of PSL2
    CHECK(x == y);
    PSL2Element z(7, 9, 7, 0, 11); // reduces mod 7 to diag(2, 4)
    CHECK(x == z);
    CHECK(PSL2Element::identity(7) == PSL2Element(7, -1, 0, 0, -1));
    CHECK_THROWS_AS(PSL2Element(7, 1, 0, 0, 2), InvalidElement);
    CHECK_THROWS_AS(PSL2Element(7, 0, 0, 0, 0), InvalidElement);
    // The stored representative has its first nonzero entry in [1, (q-1)/2].
    PSL2Element w(7, 0, -1, 1, 0);
    CHECK(w.a() == 0);
    CHECK(w.b() <= 3);
}

TEST_CASE("multiplication, inverse, and order") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 500; ++iter) {
        PSL2Element x = random_element(rng, 11);
        CHECK(psl2_mul(x, psl2_inverse(x)) == PSL2Element::identity(11));
        CHECK(psl2_mul(psl2_inverse(x), x) == PSL2Element::identity(11));
    }
    PSL2Element s(7, 0, -1, 1, 0);
    PSL2Element t(7, 1, 1, 0, 1);
    CHECK(element_order(PSL2Element::identity(7)) == 1);
    CHECK(element_order(s) == 2);
    CHECK(element_order(t) == 7);
    CHECK(element_order(PSL2Element(7, 2, 0, 0, 4)) == 3);
    CHECK_THROWS_AS(psl2_mul(PSL2Element::identity(7),
                             PSL2Element::identity(11)),
                    ModulusMismatch);
}

TEST_CASE("class enumeration: counts and sizes") {
    for (std::uint64_t q : {7u, 11u, 19u, 23u, 31u}) {
        std::vector<ConjClassLabel> classes = enumerate_classes(q);
        CHECK(classes.size() == (q + 5) / 2);
        std::uint64_t total = 0;
        for (const ConjClassLabel& c : classes)
            total += c.size;
        CHECK(total == psl2_group_order(q));
    }
    std::vector<ConjClassLabel> c7 = enumerate_classes(7);
    std::multiset<std::uint64_t> sizes;
    for (const ConjClassLabel& c : c7)
        sizes.insert(c.size);
    CHECK(sizes == std::multiset<std::uint64_t>{1, 21, 24, 24, 42, 56});
    CHECK_THROWS_AS((void)enumerate_classes(13), UnsupportedPrime);
}

TEST_CASE("label canonicalization and formatting") {
    // diag(3, 5) mod 7 is the same class as diag(2, 4).
    CHECK(ConjClassLabel::split(7, 3) == ConjClassLabel::split(7, 2));
    CHECK(ConjClassLabel::split(7, 3).to_string() == "Split{2,4}");
    CHECK(ConjClassLabel::identity(7).to_string() == "Identity");
    CHECK(ConjClassLabel::unipotent_plus(7).to_string() == "UnipotentPlus");
    CHECK(ConjClassLabel::unipotent_minus(7).to_string() ==
          "UnipotentMinus");
    CHECK(ConjClassLabel::nonsplit(7, 0, 6) ==
          ConjClassLabel::nonsplit(7, 0, 1));
    CHECK(ConjClassLabel::nonsplit(7, 5, 5).to_string() == "NonSplit{2,2}");
    CHECK(ConjClassLabel::identity(7).size == 1);
    CHECK(ConjClassLabel::split(7, 2).size == 56);
    CHECK(ConjClassLabel::nonsplit(7, 0, 1).size == 21);
    CHECK(ConjClassLabel::nonsplit(7, 2, 2).size == 42);
    CHECK(ConjClassLabel::unipotent_plus(7).size == 24);
    // t = 1 or t = -1 is not a split element.
    CHECK_THROWS_AS((void)ConjClassLabel::split(7, 1), InvalidElement);
    CHECK_THROWS_AS((void)ConjClassLabel::split(7, 6), InvalidElement);
    // (a, b) must lie on a^2 + b^2 = 1 with b != 0.
    CHECK_THROWS_AS((void)ConjClassLabel::nonsplit(7, 1, 0), InvalidElement);
    CHECK_THROWS_AS((void)ConjClassLabel::nonsplit(7, 3, 3), InvalidElement);
}

TEST_CASE("classify_class round-trips representatives") {
    for (std::uint64_t q : {7u, 11u, 19u, 23u}) {
        for (const ConjClassLabel& label : enumerate_classes(q)) {
            PSL2Element rep = class_representative(q, label);
            CHECK(classify_class(rep) == label);
        }
    }
    // diag(3, 5) and diag(2, 4) are conjugate at q = 7.
    CHECK(classify_class(PSL2Element(7, 3, 0, 0, 5)) ==
          ConjClassLabel::split(7, 2));
    // The two unipotent classes are distinguished by the residue character.
    CHECK(classify_class(PSL2Element(7, 1, 1, 0, 1)) ==
          ConjClassLabel::unipotent_plus(7));
    CHECK(classify_class(PSL2Element(7, 1, -1, 0, 1)) ==
          ConjClassLabel::unipotent_minus(7));
    CHECK(classify_class(PSL2Element(7, 1, 3, 0, 1)) ==
          ConjClassLabel::unipotent_minus(7));
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(777);
    for (std::uint64_t q : {7u, 11u}) {
        for (int iter = 0; iter < 1000; ++iter) {
            PSL2Element x = random_element(rng, q);
            PSL2Element g = random_element(rng, q);
            PSL2Element conj =
                psl2_mul(psl2_mul(g, x), psl2_inverse(g));
            CHECK(classify_class(conj) == classify_class(x));
        }
    }
}

TEST_CASE("brute-force partition of the full group by class") {
    for (std::uint64_t q : {7u, 11u}) {
        std::vector<PSL2Element> elements = all_elements(q);
        CHECK(elements.size() == psl2_group_order(q));
        std::map<ConjClassLabel, std::uint64_t> buckets;
        for (const PSL2Element& x : elements)
            buckets[classify_class(x)]++;
        std::vector<ConjClassLabel> classes = enumerate_classes(q);
        CHECK(buckets.size() == classes.size());
        for (const ConjClassLabel& c : classes) {
            REQUIRE(buckets.count(c) == 1);
            CHECK(buckets.at(c) == c.size);
        }
    }
}

TEST_CASE("torus subgroups are closed cyclic groups of the right size") {
    for (std::uint64_t q : {7u, 11u, 19u}) {
        for (TorusSubgroup which : {TorusSubgroup::H2, TorusSubgroup::H1}) {
            std::vector<PSL2Element> h = subgroup_elements(q, which);
            const std::uint64_t expect =
                which == TorusSubgroup::H2 ? (q - 1) / 2 : (q + 1) / 2;
            CHECK(h.size() == expect);
            std::set<PSL2Element> members(h.begin(), h.end());
            // Closed under multiplication, and some element generates all.
            bool has_generator = false;
            for (const PSL2Element& x : h) {
                for (const PSL2Element& y : h)
                    CHECK(members.count(psl2_mul(x, y)) == 1);
                if (element_order(x) == expect)
                    has_generator = true;
            }
            CHECK(has_generator);
        }
    }
}
