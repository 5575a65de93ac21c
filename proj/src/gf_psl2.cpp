#include "heckeq/gf_psl2.hpp"

#include "heckeq/arith.hpp"
#include "heckeq/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace heckeq {

namespace {

std::uint64_t norm_mod(std::int64_t v, std::uint64_t q) {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod_q(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % q);
}

// Square root of a quadratic residue mod q = 3 (mod 4): a^((q+1)/4).
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t q) {
    std::uint64_t r = mod_pow(a, (q + 1) / 4, q);
    if (mul_mod_q(r, r, q) != a % q)
        throw InternalInconsistency("sqrt_mod: input is not a residue");
    return r;
}

} // namespace

ConjClassLabel ConjClassLabel::identity(std::uint64_t q) {
    (void)q;
    return ConjClassLabel{ClassKind::Identity, 0, 0, 1};
}

ConjClassLabel ConjClassLabel::split(std::uint64_t q, std::uint64_t t) {
    t %= q;
    if (t == 0 || t == 1 || t == q - 1)
        throw InvalidElement("split class parameter must satisfy t != 0, +-1");
    std::uint64_t ti = mod_inv(t, q);
    std::uint64_t x = std::min({t, q - t, ti, q - ti});
    std::uint64_t xi = mod_inv(x, q);
    ConjClassLabel label;
    label.kind = ClassKind::Split;
    label.p1 = std::min(x, xi);
    label.p2 = std::max(x, xi);
    label.size = q * (q + 1);
    return label;
}

ConjClassLabel ConjClassLabel::nonsplit(std::uint64_t q, std::uint64_t a,
                                        std::uint64_t b) {
    a %= q;
    b %= q;
    if ((mul_mod_q(a, a, q) + mul_mod_q(b, b, q)) % q != 1)
        throw InvalidElement("nonsplit class parameter must lie on a^2+b^2=1");
    if (b == 0)
        throw InvalidElement("nonsplit class parameter must have b != 0");
    std::uint64_t a_min = std::min(a, (q - a) % q);
    std::uint64_t b_min = std::min(b, q - b);
    ConjClassLabel label;
    label.kind = ClassKind::NonSplit;
    label.p1 = a_min;
    label.p2 = b_min;
    // The involution class (a = 0) is half the size of the generic ones.
    label.size = a_min == 0 ? q * (q - 1) / 2 : q * (q - 1);
    return label;
}

ConjClassLabel ConjClassLabel::unipotent_plus(std::uint64_t q) {
    return ConjClassLabel{ClassKind::UnipotentPlus, 0, 0, (q * q - 1) / 2};
}

ConjClassLabel ConjClassLabel::unipotent_minus(std::uint64_t q) {
    return ConjClassLabel{ClassKind::UnipotentMinus, 0, 0, (q * q - 1) / 2};
}

std::string ConjClassLabel::to_string() const {
    switch (kind) {
        case ClassKind::Identity:
            return "Identity";
        case ClassKind::Split:
            return "Split{" + std::to_string(p1) + "," + std::to_string(p2) +
                   "}";
        case ClassKind::NonSplit:
            return "NonSplit{" + std::to_string(p1) + "," +
                   std::to_string(p2) + "}";
        case ClassKind::UnipotentPlus:
            return "UnipotentPlus";
        case ClassKind::UnipotentMinus:
            return "UnipotentMinus";
    }
    return "?";
}

PSL2Element::PSL2Element(std::uint64_t q, std::int64_t a, std::int64_t b,
                         std::int64_t c, std::int64_t d)
    : q_(q) {
    if (q < 3 || q % 2 == 0)
        throw InvalidElement("PSL2Element: modulus must be an odd prime >= 3");
    m_ = {norm_mod(a, q), norm_mod(b, q), norm_mod(c, q), norm_mod(d, q)};
    std::uint64_t det =
        (mul_mod_q(m_[0], m_[3], q) + q - mul_mod_q(m_[1], m_[2], q)) % q;
    if (det != 1)
        throw InvalidElement("PSL2Element: determinant is " +
                             std::to_string(det) + ", expected 1 (mod " +
                             std::to_string(q) + ")");
    // Sign-normalize: first nonzero entry in scan order must lie in the
    // lower half-range [1, (q-1)/2].
    for (std::uint64_t& e : m_) {
        if (e == 0) continue;
        if (e > (q - 1) / 2) {
            for (std::uint64_t& f : m_) f = (q - f) % q;
        }
        break;
    }
}

PSL2Element PSL2Element::identity(std::uint64_t q) {
    return PSL2Element(q, 1, 0, 0, 1);
}

bool PSL2Element::is_identity() const {
    return m_[0] == 1 && m_[1] == 0 && m_[2] == 0 && m_[3] == 1;
}

std::uint64_t PSL2Element::pack() const {
    return ((m_[0] * q_ + m_[1]) * q_ + m_[2]) * q_ + m_[3];
}

std::uint64_t psl2_group_order(std::uint64_t q) {
    return q * (q * q - 1) / 2;
}

PSL2Element psl2_canonicalize(std::uint64_t q, std::int64_t a, std::int64_t b,
                              std::int64_t c, std::int64_t d) {
    return PSL2Element(q, a, b, c, d);
}

PSL2Element psl2_mul(const PSL2Element& x, const PSL2Element& y) {
    if (x.q() != y.q())
        throw ModulusMismatch("psl2_mul: moduli " + std::to_string(x.q()) +
                              " and " + std::to_string(y.q()) + " differ");
    const std::uint64_t q = x.q();
    auto mul = [q](std::uint64_t a, std::uint64_t b) {
        return mul_mod_q(a, b, q);
    };
    std::uint64_t a = (mul(x.a(), y.a()) + mul(x.b(), y.c())) % q;
    std::uint64_t b = (mul(x.a(), y.b()) + mul(x.b(), y.d())) % q;
    std::uint64_t c = (mul(x.c(), y.a()) + mul(x.d(), y.c())) % q;
    std::uint64_t d = (mul(x.c(), y.b()) + mul(x.d(), y.d())) % q;
    return PSL2Element(q, static_cast<std::int64_t>(a),
                       static_cast<std::int64_t>(b),
                       static_cast<std::int64_t>(c),
                       static_cast<std::int64_t>(d));
}

PSL2Element psl2_inverse(const PSL2Element& x) {
    const std::uint64_t q = x.q();
    return PSL2Element(q, static_cast<std::int64_t>(x.d()),
                       static_cast<std::int64_t>((q - x.b()) % q),
                       static_cast<std::int64_t>((q - x.c()) % q),
                       static_cast<std::int64_t>(x.a()));
}

std::uint64_t element_order(const PSL2Element& x) {
    std::uint64_t order = 1;
    PSL2Element acc = x;
    while (!acc.is_identity()) {
        acc = psl2_mul(acc, x);
        ++order;
        if (order > x.q() + 1)
            throw InternalInconsistency(
                "element_order: order exceeds the maximum possible in "
                "PSL2(F_q)");
    }
    return order;
}

ConjClassLabel classify_class(const PSL2Element& x) {
    const std::uint64_t q = x.q();
    if (x.is_identity()) return ConjClassLabel::identity(q);

    const std::uint64_t t = (x.a() + x.d()) % q;
    const std::uint64_t disc = (mul_mod_q(t, t, q) + q - 4 % q) % q;

    if (disc == 0) {
        // Unipotent.  Sign-normalize to trace 2, find a fixed vector e,
        // extend to a determinant-1 basis g, and read u from
        // g^-1 * M * g = (1, u; 0, 1); the residue class of u is the
        // complete invariant (u is well defined modulo nonzero squares).
        std::array<std::uint64_t, 4> m = x.entries();
        if (t != 2 % q) {
            for (std::uint64_t& e : m) e = (q - e) % q;
        }
        std::uint64_t e1, e2;
        if (m[2] != 0) {
            e1 = (1 + q - m[3]) % q;
            e2 = m[2];
        } else {
            e1 = 1;
            e2 = 0;
        }
        // Basis extension (e, f) with e1*f2 - e2*f1 = 1.
        std::uint64_t f1, f2;
        if (e1 != 0) {
            f1 = 0;
            f2 = mod_inv(e1, q);
        } else {
            f1 = (q - mod_inv(e2, q)) % q;
            f2 = 0;
        }
        // u = top-right entry of g^-1 m g, where g = (e1, f1; e2, f2).
        // g^-1 = (f2, -f1; -e2, e1).
        auto mul = [q](std::uint64_t a, std::uint64_t b) {
            return mul_mod_q(a, b, q);
        };
        // col = m * (f1, f2)^T
        std::uint64_t c1 = (mul(m[0], f1) + mul(m[1], f2)) % q;
        std::uint64_t c2 = (mul(m[2], f1) + mul(m[3], f2)) % q;
        // u = (g^-1 * col)[0] = f2*c1 - f1*c2
        std::uint64_t u = (mul(f2, c1) + q - mul(f1, c2)) % q;
        // Consistency: lower-left of g^-1 m g must vanish and diagonal be 1.
        std::uint64_t l1 = (mul(m[0], e1) + mul(m[1], e2)) % q;
        std::uint64_t l2 = (mul(m[2], e1) + mul(m[3], e2)) % q;
        std::uint64_t diag = (mul(f2, l1) + q - mul(f1, l2)) % q;
        std::uint64_t low = (mul(e1, l2) + q - mul(e2, l1)) % q;
        if (diag != 1 || low != 0 || u == 0)
            throw InternalInconsistency(
                "classify_class: unipotent normal form failed");
        return legendre_symbol(static_cast<std::int64_t>(u), q) == 1
                   ? ConjClassLabel::unipotent_plus(q)
                   : ConjClassLabel::unipotent_minus(q);
    }

    if (legendre_symbol(static_cast<std::int64_t>(disc), q) == 1) {
        // Split: eigenvalues (t +- s)/2 with s^2 = t^2 - 4.
        std::uint64_t s = sqrt_mod(disc, q);
        std::uint64_t half = mod_inv(2, q);
        std::uint64_t eig = mul_mod_q((t + s) % q, half, q);
        return ConjClassLabel::split(q, eig);
    }

    // NonSplit: conjugate to (a, -b; b, a) with 2a = t and b^2 = 1 - a^2;
    // 1 - a^2 = -(t^2-4)/4 is a residue because both -1 and t^2-4 are not.
    std::uint64_t half = mod_inv(2, q);
    std::uint64_t a = mul_mod_q(t, half, q);
    std::uint64_t b2 = (1 + q - mul_mod_q(a, a, q)) % q;
    std::uint64_t b = sqrt_mod(b2, q);
    return ConjClassLabel::nonsplit(q, a, b);
}

std::vector<ConjClassLabel> enumerate_classes(std::uint64_t q) {
    require_valid_q(q);
    std::vector<ConjClassLabel> out;
    out.push_back(ConjClassLabel::identity(q));

    std::set<ConjClassLabel> split;
    for (std::uint64_t t = 2; t <= q - 2; ++t) split.insert(ConjClassLabel::split(q, t));
    out.insert(out.end(), split.begin(), split.end());

    std::set<ConjClassLabel> nonsplit;
    for (std::uint64_t a = 0; a < q; ++a) {
        std::uint64_t b2 = (1 + q - mul_mod_q(a, a, q)) % q;
        if (b2 == 0) continue; // b = 0 gives +-I
        if (legendre_symbol(static_cast<std::int64_t>(b2), q) != 1) continue;
        std::uint64_t b = sqrt_mod(b2, q);
        nonsplit.insert(ConjClassLabel::nonsplit(q, a, b));
    }
    out.insert(out.end(), nonsplit.begin(), nonsplit.end());

    out.push_back(ConjClassLabel::unipotent_plus(q));
    out.push_back(ConjClassLabel::unipotent_minus(q));

    if (out.size() != (q + 5) / 2)
        throw InternalInconsistency("enumerate_classes: expected " +
                                    std::to_string((q + 5) / 2) +
                                    " classes, found " +
                                    std::to_string(out.size()));
    std::uint64_t total = 0;
    for (const ConjClassLabel& c : out) total += c.size;
    if (total != psl2_group_order(q))
        throw InternalInconsistency(
            "enumerate_classes: class sizes sum to " + std::to_string(total) +
            ", expected " + std::to_string(psl2_group_order(q)));
    return out;
}

PSL2Element class_representative(std::uint64_t q, const ConjClassLabel& label) {
    switch (label.kind) {
        case ClassKind::Identity:
            return PSL2Element::identity(q);
        case ClassKind::Split:
            return PSL2Element(q, static_cast<std::int64_t>(label.p1), 0, 0,
                               static_cast<std::int64_t>(label.p2));
        case ClassKind::NonSplit:
            return PSL2Element(q, static_cast<std::int64_t>(label.p1),
                               static_cast<std::int64_t>((q - label.p2) % q),
                               static_cast<std::int64_t>(label.p2),
                               static_cast<std::int64_t>(label.p1));
        case ClassKind::UnipotentPlus:
            return PSL2Element(q, 1, 1, 0, 1);
        case ClassKind::UnipotentMinus:
            return PSL2Element(q, 1, -1, 0, 1);
    }
    throw UnknownLabel("class_representative: unrecognized class kind");
}

std::vector<PSL2Element> subgroup_elements(std::uint64_t q,
                                           TorusSubgroup which) {
    std::set<PSL2Element> elems;
    if (which == TorusSubgroup::H2) {
        for (std::uint64_t t = 1; t < q; ++t) {
            elems.insert(PSL2Element(
                q, static_cast<std::int64_t>(t), 0, 0,
                static_cast<std::int64_t>(mod_inv(t, q))));
        }
    } else {
        for (std::uint64_t a = 0; a < q; ++a) {
            std::uint64_t b2 = (1 + q - mul_mod_q(a, a, q)) % q;
            if (b2 == 0) {
                elems.insert(PSL2Element::identity(q));
                continue;
            }
            if (legendre_symbol(static_cast<std::int64_t>(b2), q) != 1)
                continue;
            std::uint64_t b = sqrt_mod(b2, q);
            for (std::uint64_t bb : {b, q - b}) {
                elems.insert(PSL2Element(
                    q, static_cast<std::int64_t>(a),
                    static_cast<std::int64_t>((q - bb) % q),
                    static_cast<std::int64_t>(bb),
                    static_cast<std::int64_t>(a)));
            }
        }
    }
    std::vector<PSL2Element> out(elems.begin(), elems.end());
    const std::uint64_t expect =
        which == TorusSubgroup::H1 ? (q + 1) / 2 : (q - 1) / 2;
    if (out.size() != expect)
        throw InternalInconsistency(
            "subgroup_elements: expected " + std::to_string(expect) +
            " elements, found " + std::to_string(out.size()));
    return out;
}

} // namespace heckeq
