#include "heckeq/character_table.hpp"

#include "heckeq/arith.hpp"
#include "heckeq/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <unordered_map>
#include <utility>

namespace heckeq {

namespace {

std::uint64_t mul_mod_q(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % q);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Smallest generator of F_q^x.
std::uint64_t find_gsplit(std::uint64_t q) {
    const std::vector<std::uint64_t> ps = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (std::uint64_t p : ps) {
            if (mod_pow(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalInconsistency("find_gsplit: no generator found");
}

// The norm-one group N1 = {(a, b) : a^2 + b^2 = 1 mod q}, cyclic of order
// q + 1, with multiplication (a,b)*(c,d) = (ac - bd, ad + bc).
struct Norm1 {
    std::uint64_t q;

    std::pair<std::uint64_t, std::uint64_t> mul(
        std::pair<std::uint64_t, std::uint64_t> x,
        std::pair<std::uint64_t, std::uint64_t> y) const {
        std::uint64_t a =
            (mul_mod_q(x.first, y.first, q) + q * q -
             mul_mod_q(x.second, y.second, q)) % q;
        std::uint64_t b =
            (mul_mod_q(x.first, y.second, q) + mul_mod_q(x.second, y.first, q)) %
            q;
        return {a, b};
    }

    std::pair<std::uint64_t, std::uint64_t> pow(
        std::pair<std::uint64_t, std::uint64_t> x, std::uint64_t e) const {
        std::pair<std::uint64_t, std::uint64_t> acc{1, 0};
        while (e > 0) {
            if (e & 1) acc = mul(acc, x);
            x = mul(x, x);
            e >>= 1;
        }
        return acc;
    }
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> norm1_elements(
    std::uint64_t q) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t a = 0; a < q; ++a) {
        std::uint64_t b2 = (1 + q - mul_mod_q(a, a, q)) % q;
        if (b2 == 0) {
            out.emplace_back(a, 0);
            continue;
        }
        if (legendre_symbol(static_cast<std::int64_t>(b2), q) != 1) continue;
        std::uint64_t b = mod_pow(b2, (q + 1) / 4, q);
        out.emplace_back(a, b);
        out.emplace_back(a, q - b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lexicographically first generator of N1 (order exactly q + 1).
std::pair<std::uint64_t, std::uint64_t> find_gnorm1(std::uint64_t q) {
    const Norm1 n1{q};
    const std::vector<std::uint64_t> ps = prime_factors(q + 1);
    for (const auto& cand : norm1_elements(q)) {
        bool ok = true;
        for (std::uint64_t p : ps) {
            if (n1.pow(cand, (q + 1) / p) ==
                std::pair<std::uint64_t, std::uint64_t>{1, 0}) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw InternalInconsistency("find_gnorm1: no generator found");
}

// Shared table data: generators, discrete-log tables, class/irrep lists.
struct TableSkeleton {
    std::uint64_t q;
    std::uint64_t gsplit;
    std::pair<std::uint64_t, std::uint64_t> gnorm1;
    std::vector<std::uint64_t> dlog;                    // index: t in F_q^x
    std::unordered_map<std::uint64_t, std::uint64_t> dlog1; // key a*q+b
    std::vector<ConjClassLabel> classes;
    std::vector<IrrepLabel> irreps;

    std::uint64_t dlog1_at(std::uint64_t a, std::uint64_t b) const {
        auto it = dlog1.find(a * q + b);
        if (it == dlog1.end())
            throw InternalInconsistency(
                "character table: norm-one element missing from the "
                "discrete-log table");
        return it->second;
    }
};

TableSkeleton build_skeleton(std::uint64_t q) {
    require_valid_q(q);
    TableSkeleton sk;
    sk.q = q;
    sk.gsplit = find_gsplit(q);
    sk.gnorm1 = find_gnorm1(q);

    sk.dlog.assign(q, 0);
    std::uint64_t acc = 1;
    for (std::uint64_t m = 0; m < q - 1; ++m) {
        sk.dlog[acc] = m;
        acc = mul_mod_q(acc, sk.gsplit, q);
    }
    if (acc != 1)
        throw InternalInconsistency("build_skeleton: gsplit order mismatch");

    const Norm1 n1{q};
    std::pair<std::uint64_t, std::uint64_t> cur{1, 0};
    for (std::uint64_t m = 0; m < q + 1; ++m) {
        sk.dlog1[cur.first * q + cur.second] = m;
        cur = n1.mul(cur, sk.gnorm1);
    }
    if (cur != std::pair<std::uint64_t, std::uint64_t>{1, 0})
        throw InternalInconsistency("build_skeleton: gnorm1 order mismatch");

    sk.classes = enumerate_classes(q);

    sk.irreps.push_back(IrrepLabel::trivial());
    sk.irreps.push_back(IrrepLabel::steinberg());
    for (std::uint64_t j = 1; j <= (q - 3) / 4; ++j)
        sk.irreps.push_back(IrrepLabel::pi_chi(j));
    for (std::uint64_t k = 1; k <= (q - 3) / 4; ++k)
        sk.irreps.push_back(IrrepLabel::pi_rho(k));
    sk.irreps.push_back(IrrepLabel::pi_plus());
    sk.irreps.push_back(IrrepLabel::pi_minus());
    if (sk.irreps.size() != sk.classes.size())
        throw InternalInconsistency(
            "build_skeleton: irrep and class counts differ");
    return sk;
}

// Number-producing primitives, instantiated exactly (CycloNumber) and
// numerically (complex<double>).
struct ExactOps {
    using Value = CycloNumber;
    std::uint64_t q;
    CycloNumber gauss, gauss_conj;

    explicit ExactOps(std::uint64_t q_in)
        : q(q_in), gauss(gauss_sum(q_in)), gauss_conj(gauss_sum_conjugate(q_in)) {}

    Value integer(std::int64_t v) const { return CycloNumber(mpq_class(static_cast<long>(v))); }
    Value zeta(std::uint64_t n, std::int64_t k) const {
        return CycloNumber::zeta_power(n, k);
    }
    Value gauss_plus() const { return gauss; }
    Value gauss_minus() const { return gauss_conj; }
};

struct NumericOps {
    using Value = std::complex<double>;
    std::uint64_t q;
    std::complex<double> gauss{0.0, 0.0};

    explicit NumericOps(std::uint64_t q_in) : q(q_in) {
        for (std::uint64_t x = 1; x < q; ++x) {
            if (legendre_symbol(static_cast<std::int64_t>(x), q) == 1)
                gauss += zeta(q, static_cast<std::int64_t>(x));
        }
    }

    Value integer(std::int64_t v) const {
        return {static_cast<double>(v), 0.0};
    }
    Value zeta(std::uint64_t n, std::int64_t k) const {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
        return {std::cos(angle), std::sin(angle)};
    }
    Value gauss_plus() const { return gauss; }
    Value gauss_minus() const { return std::conj(gauss); }
};

template <typename Ops>
typename Ops::Value table_entry(const TableSkeleton& sk, const Ops& ops,
                                const IrrepLabel& irrep,
                                const ConjClassLabel& cls) {
    const std::uint64_t q = sk.q;
    const std::uint64_t half_minus = (q - 1) / 2;
    const std::uint64_t half_plus = (q + 1) / 2;
    switch (irrep.kind) {
        case IrrepKind::Trivial:
            return ops.integer(1);
        case IrrepKind::Steinberg:
            switch (cls.kind) {
                case ClassKind::Identity: return ops.integer(static_cast<std::int64_t>(q));
                case ClassKind::Split: return ops.integer(1);
                case ClassKind::NonSplit: return ops.integer(-1);
                default: return ops.integer(0);
            }
        case IrrepKind::PiChi:
            switch (cls.kind) {
                case ClassKind::Identity:
                    return ops.integer(static_cast<std::int64_t>(q + 1));
                case ClassKind::Split: {
                    std::int64_t jm = static_cast<std::int64_t>(
                        mul_mod_q(irrep.index % half_minus, sk.dlog[cls.p1] % half_minus,
                                  half_minus));
                    return ops.zeta(half_minus, jm) + ops.zeta(half_minus, -jm);
                }
                case ClassKind::NonSplit: return ops.integer(0);
                default: return ops.integer(1);
            }
        case IrrepKind::PiRho:
            switch (cls.kind) {
                case ClassKind::Identity:
                    return ops.integer(static_cast<std::int64_t>(q - 1));
                case ClassKind::Split: return ops.integer(0);
                case ClassKind::NonSplit: {
                    std::uint64_t m = sk.dlog1_at(cls.p1, cls.p2);
                    std::int64_t km = static_cast<std::int64_t>(
                        mul_mod_q(irrep.index % half_plus, m % half_plus, half_plus));
                    return ops.integer(0) - ops.zeta(half_plus, km) -
                           ops.zeta(half_plus, -km);
                }
                default: return ops.integer(-1);
            }
        case IrrepKind::PiPlus:
        case IrrepKind::PiMinus:
            switch (cls.kind) {
                case ClassKind::Identity:
                    return ops.integer(static_cast<std::int64_t>((q - 1) / 2));
                case ClassKind::Split: return ops.integer(0);
                case ClassKind::NonSplit: {
                    // -rho0(eps), rho0 the order-2 character of the
                    // norm-one group mod +-1: the parity of the discrete log.
                    std::uint64_t m = sk.dlog1_at(cls.p1, cls.p2);
                    return ops.integer(m % 2 == 0 ? -1 : 1);
                }
                case ClassKind::UnipotentPlus:
                    return irrep.kind == IrrepKind::PiPlus ? ops.gauss_minus()
                                                           : ops.gauss_plus();
                case ClassKind::UnipotentMinus:
                    return irrep.kind == IrrepKind::PiPlus ? ops.gauss_plus()
                                                           : ops.gauss_minus();
            }
    }
    throw UnknownLabel("table_entry: unrecognized labels");
}

// Assigns a term of an exact inner-product sum to its conductor family.
// The families {1, (q-1)/2, (q+1)/2, q} are pairwise coprime, so the fields
// Q(zeta_f) are linearly disjoint over Q and a sum of one element per
// family is rational iff every summand is.  Accumulating per family keeps
// every intermediate at conductor <= q (no lcm blow-up).
class FamilyBuckets {
public:
    explicit FamilyBuckets(std::uint64_t q)
        : families_{1, (q - 1) / 2, (q + 1) / 2, q} {}

    void add(const CycloNumber& term) {
        const std::uint64_t n = term.conductor();
        for (std::size_t i = 0; i < families_.size(); ++i) {
            if (families_[i] % n == 0) {
                buckets_[i] += term;
                return;
            }
        }
        throw InternalInconsistency(
            "inner product: term conductor " + std::to_string(n) +
            " outside all table conductor families");
    }

    // Sum of all buckets, which must be rational; throws otherwise.
    mpq_class rational_total() const {
        mpq_class total = 0;
        for (const CycloNumber& b : buckets_) {
            if (!b.is_rational())
                throw InternalInconsistency(
                    "inner product: a conductor-family bucket is not "
                    "rational");
            total += b.rational_value();
        }
        return total;
    }

private:
    std::array<std::uint64_t, 4> families_;
    std::array<CycloNumber, 4> buckets_;
};

} // namespace

std::string IrrepLabel::to_string() const {
    switch (kind) {
        case IrrepKind::Trivial: return "Trivial";
        case IrrepKind::Steinberg: return "Steinberg";
        case IrrepKind::PiChi: return "PiChi(" + std::to_string(index) + ")";
        case IrrepKind::PiRho: return "PiRho(" + std::to_string(index) + ")";
        case IrrepKind::PiPlus: return "PiPlus";
        case IrrepKind::PiMinus: return "PiMinus";
    }
    return "?";
}

std::uint64_t PVector::sum() const {
    std::uint64_t s = 0;
    for (std::uint64_t v : p) s += v;
    return s;
}

std::uint64_t DecompVector::U() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : u) s += v;
    return s;
}

std::uint64_t DecompVector::V() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : v) s += v;
    return s;
}

CharacterTable CharacterTable::build(std::uint64_t q) {
    if (q > CycloNumber::conductor_ceiling())
        throw ExactModeUnavailable(
            "build: exact table entries need conductor " + std::to_string(q) +
            ", above the ceiling " +
            std::to_string(CycloNumber::conductor_ceiling()) +
            "; raise the ceiling or use the numeric table");
    TableSkeleton sk = build_skeleton(q);
    ExactOps ops(q);

    CharacterTable t;
    t.q_ = q;
    t.gsplit_ = sk.gsplit;
    t.gnorm1_ = sk.gnorm1;
    t.classes_ = sk.classes;
    t.irreps_ = sk.irreps;
    t.values_.resize(t.irreps_.size());
    for (std::size_t r = 0; r < t.irreps_.size(); ++r) {
        t.values_[r].reserve(t.classes_.size());
        for (std::size_t c = 0; c < t.classes_.size(); ++c)
            t.values_[r].push_back(
                table_entry(sk, ops, t.irreps_[r], t.classes_[c]).simplified());
    }
    for (std::size_t r = 0; r < t.irreps_.size(); ++r)
        t.row_index_[t.irreps_[r]] = r;
    for (std::size_t c = 0; c < t.classes_.size(); ++c)
        t.col_index_[t.classes_[c]] = c;

    // Degree bookkeeping: the squares of the degrees must fill the group.
    std::uint64_t sq = 0;
    for (const IrrepLabel& irrep : t.irreps_) {
        std::uint64_t d = t.degree(irrep);
        sq += d * d;
    }
    if (sq != psl2_group_order(q))
        throw InternalInconsistency(
            "build: sum of squared degrees is " + std::to_string(sq) +
            ", expected " + std::to_string(psl2_group_order(q)));
    return t;
}

std::uint64_t CharacterTable::group_order() const {
    return psl2_group_order(q_);
}

const CycloNumber& CharacterTable::value(const IrrepLabel& irrep,
                                         const ConjClassLabel& cls) const {
    return values_[row_index(irrep)][col_index(cls)];
}

const CycloNumber& CharacterTable::value_at(std::size_t row,
                                            std::size_t col) const {
    return values_.at(row).at(col);
}

std::uint64_t CharacterTable::degree(const IrrepLabel& irrep) const {
    const CycloNumber& v = values_[row_index(irrep)][0];
    mpq_class d = v.rational_value();
    if (d.get_den() != 1 || d < 0)
        throw InternalInconsistency("degree: identity-column entry is not a "
                                    "nonnegative integer");
    return static_cast<std::uint64_t>(d.get_num().get_ui());
}

mpq_class CharacterTable::inner_product(const IrrepLabel& a,
                                        const IrrepLabel& b) const {
    const std::size_t ra = row_index(a);
    const std::size_t rb = row_index(b);
    FamilyBuckets buckets(q_);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const CycloNumber term = values_[ra][c] * values_[rb][c].conj();
        if (term.is_zero()) continue;
        CycloNumber weighted =
            term * CycloNumber(mpq_class(static_cast<unsigned long>(
                       classes_[c].size)));
        buckets.add(weighted.simplified());
    }
    mpq_class total = buckets.rational_total();
    total /= mpq_class(static_cast<unsigned long>(group_order()));
    total.canonicalize();
    return total;
}

mpq_class CharacterTable::column_inner_product(const ConjClassLabel& c1,
                                               const ConjClassLabel& c2) const {
    const std::size_t i = col_index(c1);
    const std::size_t j = col_index(c2);
    FamilyBuckets buckets(q_);
    for (std::size_t r = 0; r < irreps_.size(); ++r) {
        const CycloNumber term = values_[r][i] * values_[r][j].conj();
        if (term.is_zero()) continue;
        buckets.add(term.simplified());
    }
    return buckets.rational_total();
}

std::uint64_t CharacterTable::trivial_multiplicity_on_subgroup(
    const IrrepLabel& irrep, TorusSubgroup which) const {
    const std::vector<PSL2Element> elems = subgroup_elements(q_, which);
    const std::size_t r = row_index(irrep);
    FamilyBuckets buckets(q_);
    for (const PSL2Element& h : elems) {
        const ConjClassLabel cls = classify_class(h);
        buckets.add(values_[r][col_index(cls)]);
    }
    mpq_class total = buckets.rational_total();
    total /= mpq_class(static_cast<unsigned long>(elems.size()));
    total.canonicalize();
    if (total.get_den() != 1 || total < 0)
        throw InternalInconsistency(
            "trivial_multiplicity_on_subgroup: character sum over " +
            std::string(which == TorusSubgroup::H1 ? "H1" : "H2") +
            " is not a nonnegative integer for row " + irrep.to_string());
    return static_cast<std::uint64_t>(total.get_num().get_ui());
}

std::size_t CharacterTable::row_index(const IrrepLabel& irrep) const {
    auto it = row_index_.find(irrep);
    if (it == row_index_.end())
        throw UnknownLabel("character table for q = " + std::to_string(q_) +
                           " has no row " + irrep.to_string());
    return it->second;
}

std::size_t CharacterTable::col_index(const ConjClassLabel& cls) const {
    auto it = col_index_.find(cls);
    if (it == col_index_.end())
        throw UnknownLabel("character table for q = " + std::to_string(q_) +
                           " has no column " + cls.to_string());
    return it->second;
}

NumericCharacterTable NumericCharacterTable::build(std::uint64_t q) {
    TableSkeleton sk = build_skeleton(q);
    NumericOps ops(q);
    NumericCharacterTable t;
    t.q = q;
    t.gsplit = sk.gsplit;
    t.gnorm1 = sk.gnorm1;
    t.classes = sk.classes;
    t.irreps = sk.irreps;
    t.values.resize(t.irreps.size());
    for (std::size_t r = 0; r < t.irreps.size(); ++r) {
        t.values[r].reserve(t.classes.size());
        for (std::size_t c = 0; c < t.classes.size(); ++c)
            t.values[r].push_back(table_entry(sk, ops, t.irreps[r], t.classes[c]));
    }
    return t;
}

std::complex<double> NumericCharacterTable::inner_product(
    std::size_t row_a, std::size_t row_b) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        acc += static_cast<double>(classes[c].size) * values[row_a][c] *
               std::conj(values[row_b][c]);
    }
    return acc / static_cast<double>(psl2_group_order(q));
}

std::complex<double> NumericCharacterTable::column_inner_product(
    std::size_t col_a, std::size_t col_b) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t r = 0; r < irreps.size(); ++r)
        acc += values[r][col_a] * std::conj(values[r][col_b]);
    return acc;
}

PVector solve_p_vector(std::uint64_t q, std::uint64_t degree,
                       const CycloNumber& trace_P_inverse) {
    if (q % trace_P_inverse.conductor() != 0)
        throw NotARepresentationTrace(
            "solve_p_vector: trace conductor " +
            std::to_string(trace_P_inverse.conductor()) +
            " does not divide q = " + std::to_string(q));
    const CycloNumber trace = trace_P_inverse.in_conductor(q);

    // In the power basis of Q(zeta_q) the trace's coefficients are
    // c(n) = p(n) - p(q-1) for n <= q-2 (using 1 + zeta + ... = 0), and the
    // degree equation pins p(q-1) = (degree - sum c(n)) / q.
    const std::vector<mpq_class>& coeffs = trace.coefficients();
    mpz_class csum = 0;
    std::vector<mpz_class> c(q - 1);
    for (std::uint64_t n = 0; n + 1 < q; ++n) {
        const mpq_class& cn = coeffs[n];
        if (cn.get_den() != 1)
            throw NotARepresentationTrace(
                "solve_p_vector: non-integer coefficient at power " +
                std::to_string(n));
        c[n] = cn.get_num();
        csum += c[n];
    }
    mpz_class num = mpz_class(static_cast<unsigned long>(degree)) - csum;
    mpz_class p_last_z = num / static_cast<long>(q);
    if (p_last_z * static_cast<long>(q) != num || p_last_z < 0)
        throw NotARepresentationTrace(
            "solve_p_vector: no nonnegative integer solution for p(q-1)");
    PVector out;
    out.p.assign(q, 0);
    for (std::uint64_t n = 0; n + 1 < q; ++n) {
        mpz_class pn = c[n] + p_last_z;
        if (pn < 0)
            throw NotARepresentationTrace(
                "solve_p_vector: negative multiplicity at power " +
                std::to_string(n));
        out.p[n] = static_cast<std::uint64_t>(pn.get_ui());
    }
    out.p[q - 1] = static_cast<std::uint64_t>(p_last_z.get_ui());
    if (out.sum() != degree)
        throw InternalInconsistency(
            "solve_p_vector: multiplicities do not sum to the degree");
    return out;
}

PVector p_table_for_irrep(const CharacterTable& table,
                          const IrrepLabel& irrep) {
    // The inverse of the unipotent generator lies in the UnipotentMinus
    // class (its normal-form parameter is -1, a nonresidue), so its trace
    // is that column's entry.
    const CycloNumber& trace =
        table.value(irrep, ConjClassLabel::unipotent_minus(table.q()));
    return solve_p_vector(table.q(), table.degree(irrep), trace);
}

std::uint64_t zeta_eigenspace_dim(const CharacterTable& table,
                                  const DecompVector& cusp_form_decomp) {
    const std::uint64_t q = table.q();
    const std::uint64_t max_index = (q - 3) / 4;
    for (const auto& [j, mult] : cusp_form_decomp.u) {
        if (j < 1 || j > max_index)
            throw UnknownLabel("zeta_eigenspace_dim: chi index " +
                               std::to_string(j) + " out of range for q = " +
                               std::to_string(q));
    }
    for (const auto& [k, mult] : cusp_form_decomp.v) {
        if (k < 1 || k > max_index)
            throw UnknownLabel("zeta_eigenspace_dim: rho index " +
                               std::to_string(k) + " out of range for q = " +
                               std::to_string(q));
    }

    auto p_at_1 = [&table](const IrrepLabel& irrep) {
        return p_table_for_irrep(table, irrep).p[1];
    };

    std::uint64_t dim = 0;
    dim += cusp_form_decomp.x * p_at_1(IrrepLabel::steinberg());
    dim += cusp_form_decomp.y_plus * p_at_1(IrrepLabel::pi_plus());
    dim += cusp_form_decomp.y_minus * p_at_1(IrrepLabel::pi_minus());
    for (const auto& [j, mult] : cusp_form_decomp.u)
        dim += mult * p_at_1(IrrepLabel::pi_chi(j));
    for (const auto& [k, mult] : cusp_form_decomp.v)
        dim += mult * p_at_1(IrrepLabel::pi_rho(k));

    // The Eisenstein part decomposes as one Steinberg plus two copies of
    // every pi_chi; its contribution is read off the same p-vectors.
    dim += p_at_1(IrrepLabel::steinberg());
    for (std::uint64_t j = 1; j <= max_index; ++j)
        dim += 2 * p_at_1(IrrepLabel::pi_chi(j));
    return dim;
}

std::uint64_t zeta_eigenspace_dim(std::uint64_t q,
                                  const DecompVector& cusp_form_decomp) {
    return zeta_eigenspace_dim(CharacterTable::build(q), cusp_form_decomp);
}

} // namespace heckeq
