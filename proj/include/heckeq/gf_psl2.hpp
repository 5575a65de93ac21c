#pragma once

// Canonical elements of PSL2(F_q) = SL2(F_q)/{+-I} for odd primes q,
// conjugacy-class labels and classification, class enumeration, and the two
// torus subgroups H1 (nonsplit, order (q+1)/2) and H2 (split, order
// (q-1)/2) used for restriction multiplicities.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace heckeq {

enum class ClassKind : int {
    Identity = 0,
    Split = 1,
    NonSplit = 2,
    UnipotentPlus = 3,
    UnipotentMinus = 4,
};

// A conjugacy class of PSL2(F_q).
//
// Split classes carry the eigenvalue pair {t, 1/t}; the PSL2 parameter is
// only defined up to {t, -t, 1/t, -1/t}, and the canonical pair is
// {x, 1/x} sorted ascending where x is the least of the four variants.
// NonSplit classes carry (a, b) with a^2 + b^2 = 1, the element being
// conjugate to (a, -b; b, a); the parameter is defined up to the four sign
// variants (a, +-b), (-a, +-b) and canonicalized to the lexicographic
// minimum.  The involution class is the one with a = 0.
struct ConjClassLabel {
    ClassKind kind = ClassKind::Identity;
    std::uint64_t p1 = 0;
    std::uint64_t p2 = 0;
    std::uint64_t size = 1;

    static ConjClassLabel identity(std::uint64_t q);
    static ConjClassLabel split(std::uint64_t q, std::uint64_t t);
    static ConjClassLabel nonsplit(std::uint64_t q, std::uint64_t a,
                                   std::uint64_t b);
    static ConjClassLabel unipotent_plus(std::uint64_t q);
    static ConjClassLabel unipotent_minus(std::uint64_t q);

    std::string to_string() const;

    // size is derived from (kind, parameters), so comparisons ignore it.
    friend bool operator==(const ConjClassLabel& a, const ConjClassLabel& b) {
        return a.kind == b.kind && a.p1 == b.p1 && a.p2 == b.p2;
    }
    friend bool operator!=(const ConjClassLabel& a, const ConjClassLabel& b) {
        return !(a == b);
    }
    friend bool operator<(const ConjClassLabel& a, const ConjClassLabel& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        if (a.p1 != b.p1) return a.p1 < b.p1;
        return a.p2 < b.p2;
    }
};

// Canonical representative of {M, -M}: of the two sign choices, keep the one
// whose first nonzero entry in scan order (a, b, c, d) lies in
// [1, (q-1)/2].  Stored entries are always reduced into [0, q).
class PSL2Element {
public:
    PSL2Element() = default;

    // Canonicalizes; throws InvalidElement unless a*d - b*c = 1 (mod q).
    PSL2Element(std::uint64_t q, std::int64_t a, std::int64_t b,
                std::int64_t c, std::int64_t d);

    static PSL2Element identity(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint64_t a() const { return m_[0]; }
    std::uint64_t b() const { return m_[1]; }
    std::uint64_t c() const { return m_[2]; }
    std::uint64_t d() const { return m_[3]; }
    const std::array<std::uint64_t, 4>& entries() const { return m_; }

    bool is_identity() const;

    friend bool operator==(const PSL2Element& x, const PSL2Element& y) {
        return x.q_ == y.q_ && x.m_ == y.m_;
    }
    friend bool operator!=(const PSL2Element& x, const PSL2Element& y) {
        return !(x == y);
    }
    friend bool operator<(const PSL2Element& x, const PSL2Element& y) {
        if (x.q_ != y.q_) return x.q_ < y.q_;
        return x.m_ < y.m_;
    }

    // Packs the four entries into a single integer (for hashing); only
    // valid when q^4 fits in 64 bits, which holds for every q this engine
    // accepts in enumeration contexts.
    std::uint64_t pack() const;

private:
    std::uint64_t q_ = 0;
    std::array<std::uint64_t, 4> m_{1, 0, 0, 1};
};

std::uint64_t psl2_group_order(std::uint64_t q);

// Constructs the canonical representative; same contract as the
// PSL2Element constructor.
PSL2Element psl2_canonicalize(std::uint64_t q, std::int64_t a, std::int64_t b,
                              std::int64_t c, std::int64_t d);

// Canonical product; throws ModulusMismatch when the moduli differ.
PSL2Element psl2_mul(const PSL2Element& x, const PSL2Element& y);

PSL2Element psl2_inverse(const PSL2Element& x);

// Least k >= 1 with x^k = identity.
std::uint64_t element_order(const PSL2Element& x);

// Conjugacy class of x (see ConjClassLabel for parameter conventions).
// Conjugation-invariant: classify_class(g x g^-1) = classify_class(x).
ConjClassLabel classify_class(const PSL2Element& x);

// All (q+5)/2 classes in deterministic order: Identity, Split ascending by
// parameter, NonSplit ascending by parameter, UnipotentPlus,
// UnipotentMinus.  Requires q prime, q = 3 (mod 4), q > 3.
std::vector<ConjClassLabel> enumerate_classes(std::uint64_t q);

// A fixed representative element of the class.
PSL2Element class_representative(std::uint64_t q, const ConjClassLabel& label);

enum class TorusSubgroup { H1, H2 };

// H1: all (a, -b; b, a) with a^2 + b^2 = 1, modulo +-I (order (q+1)/2).
// H2: all (t, 0; 0, 1/t), modulo +-I (order (q-1)/2).  Both cyclic.
std::vector<PSL2Element> subgroup_elements(std::uint64_t q,
                                           TorusSubgroup which);

} // namespace heckeq
