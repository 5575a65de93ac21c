// Acceptance suite: one line per criterion, PASS or FAIL, exit 1 on any
// failure.  Each criterion is verified from scratch against closed-form or
// brute-force oracles; nothing here trusts intermediate library state.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "heckeq/arith.hpp"
#include "heckeq/character_table.hpp"
#include "heckeq/cyclotomic.hpp"
#include "heckeq/gf_psl2.hpp"
#include "heckeq/hecke.hpp"
#include "heckeq/modcurve.hpp"

using namespace heckeq;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond)
        throw Failure(what);
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// 1. Full sweep over 7 <= q <= 2000: every report verified exactly.
void criterion_sweep() {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<HeckeReport> reports = sweep_verify(7, 2000, workers);
    require(reports.size() == 154,
            "expected 154 primes in [7, 2000], got " + str(reports.size()));
    for (const HeckeReport& r : reports) {
        require(r.error.empty(), "q=" + str(r.q) + " error: " + r.error);
        require(r.verdict, "q=" + str(r.q) + " verdict false");
        require(r.y_diff == r.h_forms && r.h_forms == r.h_dirichlet,
                "q=" + str(r.q) + " multiplicity difference " +
                    str(r.y_diff) + " != class number " + str(r.h_forms));
    }
}

// 2. Frozen class numbers through both independent computations.
void criterion_class_numbers() {
    const std::map<std::uint64_t, std::int64_t> expected{
        {7, 1}, {11, 1}, {23, 3}, {31, 3}, {47, 5}, {71, 7}};
    for (auto [q, h] : expected) {
        auto [hf, forms] = class_number_forms(q);
        require(hf == h, "h(-" + str(q) + ") from forms = " + str(hf) +
                             ", expected " + str(h));
        require(static_cast<std::int64_t>(forms.size()) == h,
                "form list size mismatch at q=" + str(q));
        require(class_number_dirichlet(q) == h,
                "h(-" + str(q) + ") from the character sum != " + str(h));
    }
}

// 3. Frozen dimension chains (mu, kappa_sum, m, g, z).
void criterion_dimension_chains() {
    struct Chain {
        std::uint64_t q, mu;
        std::int64_t kappa_sum, m;
        std::uint64_t g;
        std::int64_t z;
    };
    for (const Chain& c :
         {Chain{7, 24, 1, 3, 0, 4}, Chain{11, 60, 2, 8, 1, 8},
          Chain{23, 264, 4, 40, 12, 29}}) {
        DivisorSummary d = divisor_summary(c.q);
        require(d.mu == c.mu, "mu mismatch at q=" + str(c.q));
        require(d.kappa_sum == c.kappa_sum,
                "kappa_sum mismatch at q=" + str(c.q));
        require(d.m == c.m, "m mismatch at q=" + str(c.q));
        require(d.g == c.g, "genus mismatch at q=" + str(c.q));
        require(d.z == c.z, "z mismatch at q=" + str(c.q));
    }
}

// 4. Orthogonality: exact for q in {7, 11, 19, 23}, numeric to 1e-8 for the
// remaining q <= 100.
void criterion_orthogonality() {
    for (std::uint64_t q : {7u, 11u, 19u, 23u}) {
        CharacterTable t = CharacterTable::build(q);
        std::uint64_t sq = 0;
        for (const IrrepLabel& irrep : t.irreps())
            sq += t.degree(irrep) * t.degree(irrep);
        require(sq == t.group_order(),
                "sum of squared degrees != |G| at q=" + str(q));
        for (const IrrepLabel& a : t.irreps())
            for (const IrrepLabel& b : t.irreps())
                require(t.inner_product(a, b) == mpq_class(a == b ? 1 : 0),
                        "row orthogonality failed at q=" + str(q) + " (" +
                            a.to_string() + ", " + b.to_string() + ")");
        for (const ConjClassLabel& c1 : t.classes())
            for (const ConjClassLabel& c2 : t.classes()) {
                mpq_class expect =
                    c1 == c2
                        ? mpq_class(t.group_order()) / mpq_class(c1.size)
                        : mpq_class(0);
                expect.canonicalize();
                require(t.column_inner_product(c1, c2) == expect,
                        "column orthogonality failed at q=" + str(q) +
                            " (" + c1.to_string() + ", " + c2.to_string() +
                            ")");
            }
    }
    for (std::uint64_t q : valid_q_in_range(24, 100)) {
        NumericCharacterTable t = NumericCharacterTable::build(q);
        const std::size_t n = t.irreps.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                double want = a == b ? 1.0 : 0.0;
                require(std::abs(t.inner_product(a, b) - want) < 1e-8,
                        "numeric row orthogonality failed at q=" + str(q));
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                double want =
                    a == b ? static_cast<double>(psl2_group_order(q)) /
                                 static_cast<double>(t.classes[a].size)
                           : 0.0;
                require(std::abs(t.column_inner_product(a, b) - want) <
                            1e-8,
                        "numeric column orthogonality failed at q=" +
                            str(q));
            }
    }
}

// 5. Eigenvalue multiplicity vectors match their closed forms.
void criterion_p_tables() {
    for (std::uint64_t q : {7u, 11u, 19u, 23u}) {
        CharacterTable t = CharacterTable::build(q);
        for (const IrrepLabel& irrep : t.irreps()) {
            PVector pv = p_table_for_irrep(t, irrep);
            require(pv.p.size() == q, "p-vector length at q=" + str(q));
            require(pv.sum() == t.degree(irrep),
                    "p-vector sum != degree at q=" + str(q));
            for (std::uint64_t n = 0; n < q; ++n) {
                std::uint64_t want = 0;
                switch (irrep.kind) {
                case IrrepKind::Trivial: want = n == 0; break;
                case IrrepKind::Steinberg: want = 1; break;
                case IrrepKind::PiChi: want = n == 0 ? 2 : 1; break;
                case IrrepKind::PiRho: want = n == 0 ? 0 : 1; break;
                case IrrepKind::PiPlus:
                    want = legendre_symbol(static_cast<std::int64_t>(n),
                                           q) == 1;
                    break;
                case IrrepKind::PiMinus:
                    want = legendre_symbol(static_cast<std::int64_t>(n),
                                           q) == -1;
                    break;
                }
                require(pv.p[n] == want,
                        "p-vector entry mismatch: q=" + str(q) + " " +
                            irrep.to_string() + " n=" + str(n));
            }
        }
    }
}

// 6. Restriction multiplicities to both torus subgroups, plus the formal
// x / S recovery identities built from them.
void criterion_restrictions() {
    for (std::uint64_t q : {7u, 11u, 19u}) {
        CharacterTable t = CharacterTable::build(q);
        for (const IrrepLabel& irrep : t.irreps()) {
            std::uint64_t want_h2 = 0, want_h1 = 0;
            switch (irrep.kind) {
            case IrrepKind::Trivial: want_h2 = 1; want_h1 = 1; break;
            case IrrepKind::Steinberg: want_h2 = 3; want_h1 = 1; break;
            case IrrepKind::PiChi:
            case IrrepKind::PiRho: want_h2 = 2; want_h1 = 2; break;
            case IrrepKind::PiPlus:
            case IrrepKind::PiMinus: want_h2 = 1; want_h1 = 1; break;
            }
            require(t.trivial_multiplicity_on_subgroup(
                        irrep, TorusSubgroup::H2) == want_h2,
                    "H2 multiplicity mismatch at q=" + str(q) + " " +
                        irrep.to_string());
            require(t.trivial_multiplicity_on_subgroup(
                        irrep, TorusSubgroup::H1) == want_h1,
                    "H1 multiplicity mismatch at q=" + str(q) + " " +
                        irrep.to_string());
        }
        XSIdentityChecks checks = check_xs_identities(t);
        require(checks.coefficients_ok, "coefficient table at q=" + str(q));
        require(checks.x_identity_ok, "x identity at q=" + str(q));
        require(checks.s_identity_ok, "S identity at q=" + str(q));
    }
}

// 7. Gauss sum identities, exactly, for every valid q up to 200.
void criterion_gauss_sums() {
    for (std::uint64_t q : valid_q_in_range(7, 200)) {
        CycloNumber g = gauss_sum(q);
        CycloNumber gc = gauss_sum_conjugate(q);
        require(gc == g.conj(), "conjugate mismatch at q=" + str(q));
        require(g + gc == CycloNumber(-1L),
                "G + conj(G) != -1 at q=" + str(q));
        CycloNumber d = g - gc;
        require(d * d == CycloNumber(-static_cast<long>(q)),
                "(G - conj(G))^2 != -q at q=" + str(q));
    }
}

// 8. Cusp structure for every prime 5 <= q <= 200 (both residue classes).
void criterion_cusps() {
    for (std::uint64_t q = 5; q <= 200; ++q) {
        if (!is_prime(q))
            continue;
        std::vector<CuspData> cusps = cusp_representatives(q);
        require(cusps.size() == q - 1,
                "cusp count != q - 1 at q=" + str(q));
        std::uint64_t width_sum = 0;
        for (const CuspData& cd : cusps) {
            width_sum += cd.width;
            const bool at_level =
                cd.cusp.s % static_cast<std::int64_t>(q) == 0;
            if (at_level) {
                mpq_class expect(
                    (cd.cusp.r * cd.cusp.r) % static_cast<std::int64_t>(q),
                    q);
                expect.canonicalize();
                require(cd.kappa == expect && cd.kappa != 0,
                        "kappa != {r^2/q} at q=" + str(q) + " cusp " +
                            cd.cusp.to_string());
            } else {
                require(cd.kappa == 0, "kappa != 0 at wide cusp, q=" +
                                           str(q));
            }
        }
        require(width_sum == (q * q - 1) / 2,
                "width sum != (q^2 - 1)/2 at q=" + str(q));
    }
}

// 9. Positivity: m - 2g + 2 = (q - 1) - kappa_sum > 0 on every tested q.
void criterion_positivity() {
    for (std::uint64_t q : valid_q_in_range(7, 500)) {
        DivisorSummary d = divisor_summary(q);
        mpq_class lhs = d.m - 2 * mpq_class(d.g) + 2;
        mpq_class rhs = mpq_class(q - 1) - d.kappa_sum;
        require(lhs == rhs,
                "m - 2g + 2 != (q - 1) - kappa_sum at q=" + str(q));
        require(lhs > 0, "m - 2g + 2 not positive at q=" + str(q));
    }
}

// 10. Brute-force partition of the whole group into the enumerated classes.
void criterion_partition() {
    for (std::uint64_t q : {7u, 11u, 19u}) {
        std::set<PSL2Element> elements;
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                for (std::uint64_t c = 0; c < q; ++c)
                    for (std::uint64_t d = 0; d < q; ++d)
                        if (a * d % q == (1 + b * c) % q)
                            elements.insert(PSL2Element(
                                q, static_cast<std::int64_t>(a),
                                static_cast<std::int64_t>(b),
                                static_cast<std::int64_t>(c),
                                static_cast<std::int64_t>(d)));
        require(elements.size() == psl2_group_order(q),
                "group enumeration size at q=" + str(q));
        std::map<ConjClassLabel, std::uint64_t> buckets;
        for (const PSL2Element& x : elements)
            buckets[classify_class(x)]++;
        std::vector<ConjClassLabel> classes = enumerate_classes(q);
        require(buckets.size() == classes.size(),
                "partition bucket count at q=" + str(q));
        for (const ConjClassLabel& cls : classes) {
            auto it = buckets.find(cls);
            require(it != buckets.end(),
                    "class missing from partition at q=" + str(q) + ": " +
                        cls.to_string());
            require(it->second == cls.size,
                    "class size mismatch at q=" + str(q) + ": " +
                        cls.to_string() + " counted " + str(it->second) +
                        ", labeled " + str(cls.size));
        }
        if (q == 7) {
            std::multiset<std::uint64_t> sizes;
            for (const ConjClassLabel& cls : classes)
                sizes.insert(cls.size);
            require(sizes == std::multiset<std::uint64_t>{1, 21, 24, 24, 42,
                                                          56},
                    "q=7 class sizes are not {1,21,24,24,42,56}");
        }
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* description;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "sweep 7..2000: all 154 primes verify exactly",
         criterion_sweep},
        {2, "frozen class numbers via forms and character sum",
         criterion_class_numbers},
        {3, "frozen dimension chains for q = 7, 11, 23",
         criterion_dimension_chains},
        {4, "character-table orthogonality (exact and numeric)",
         criterion_orthogonality},
        {5, "eigenvalue multiplicity vectors match closed forms",
         criterion_p_tables},
        {6, "torus restriction multiplicities and x/S identities",
         criterion_restrictions},
        {7, "gauss sum identities, exact, q <= 200", criterion_gauss_sums},
        {8, "cusp structure for every prime 5 <= q <= 200",
         criterion_cusps},
        {9, "positivity m - 2g + 2 = (q-1) - kappa_sum > 0",
         criterion_positivity},
        {10, "brute-force conjugacy partition for q = 7, 11, 19",
         criterion_partition},
    };

    bool any_failed = false;
    for (const Criterion& c : criteria) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string(" [") + e.what() + "]";
            any_failed = true;
        }
        std::cout << "criterion " << c.id << ": " << verdict << " - "
                  << c.description << detail << "\n";
    }
    std::cout << (any_failed ? "acceptance: FAIL" : "acceptance: PASS")
              << std::endl;
    return any_failed ? 1 : 0;
}
