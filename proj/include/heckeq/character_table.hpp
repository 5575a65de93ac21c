#pragma once

// The full character table of PSL2(F_q) for q = 3 (mod 4), q > 3:
// irreducible-representation labels, exact cyclotomic table entries, inner
// products and subgroup restriction multiplicities, the eigenvalue
// multiplicity vectors p(n) of the unipotent generator's inverse, and the
// zeta-eigenspace dimension of a formally decomposed representation.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "heckeq/cyclotomic.hpp"
#include "heckeq/gf_psl2.hpp"

namespace heckeq {

enum class IrrepKind : int {
    Trivial = 0,
    Steinberg = 1,
    PiChi = 2,
    PiRho = 3,
    PiPlus = 4,
    PiMinus = 5,
};

// PiChi(j), j in [1, (q-3)/4]: parametrized by the nontrivial characters of
// F_q^x / {+-1} (cyclic of odd order (q-1)/2), identified with inverses.
// PiRho(k), k in [1, (q-3)/4]: nontrivial characters of the norm-one group
// modulo +-1, excluding the order-2 character, identified with inverses.
struct IrrepLabel {
    IrrepKind kind = IrrepKind::Trivial;
    std::uint64_t index = 0; // used by PiChi / PiRho only

    static IrrepLabel trivial() { return {IrrepKind::Trivial, 0}; }
    static IrrepLabel steinberg() { return {IrrepKind::Steinberg, 0}; }
    static IrrepLabel pi_chi(std::uint64_t j) { return {IrrepKind::PiChi, j}; }
    static IrrepLabel pi_rho(std::uint64_t k) { return {IrrepKind::PiRho, k}; }
    static IrrepLabel pi_plus() { return {IrrepKind::PiPlus, 0}; }
    static IrrepLabel pi_minus() { return {IrrepKind::PiMinus, 0}; }

    std::string to_string() const;

    friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const IrrepLabel& a, const IrrepLabel& b) {
        return !(a == b);
    }
    friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
        if (a.kind != b.kind)
            return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.index < b.index;
    }
};

// p(0..q-1): multiplicity of zeta_q^n among the eigenvalues of the image of
// the inverse unipotent generator under a representation.
struct PVector {
    std::vector<std::uint64_t> p;

    std::uint64_t sum() const;
};

// A formal decomposition of a representation into Steinberg (x), the two
// degree-(q-1)/2 constituents (y_plus, y_minus), and the principal/discrete
// series with multiplicities u (by chi index) and v (by rho index).
struct DecompVector {
    std::uint64_t x = 0;
    std::uint64_t y_plus = 0;
    std::uint64_t y_minus = 0;
    std::map<std::uint64_t, std::uint64_t> u;
    std::map<std::uint64_t, std::uint64_t> v;

    std::uint64_t U() const;
    std::uint64_t V() const;
    std::uint64_t Y() const { return y_plus + y_minus; }
    std::uint64_t S() const { return Y() + 2 * U() + 2 * V(); }
};

class CharacterTable {
public:
    // Exact build; requires q prime, q = 3 (mod 4), q > 3 (UnsupportedPrime
    // otherwise) and q within the cyclotomic conductor ceiling
    // (ExactModeUnavailable otherwise).
    static CharacterTable build(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint64_t group_order() const;
    const std::vector<ConjClassLabel>& classes() const { return classes_; }
    const std::vector<IrrepLabel>& irreps() const { return irreps_; }

    // Fixed generator of F_q^x used to parametrize the chi characters.
    std::uint64_t generator_gsplit() const { return gsplit_; }
    // Fixed generator (a, b) of the norm-one group used for the rho
    // characters.
    std::pair<std::uint64_t, std::uint64_t> generator_gnorm1() const {
        return gnorm1_;
    }

    // Exact table entry; throws UnknownLabel for labels not in this table.
    const CycloNumber& value(const IrrepLabel& irrep,
                             const ConjClassLabel& cls) const;
    const CycloNumber& value_at(std::size_t row, std::size_t col) const;

    std::uint64_t degree(const IrrepLabel& irrep) const;

    // (1/|G|) sum over classes of size * value(a) * conj(value(b)); exact.
    // Equals 1 when a = b and 0 otherwise for the rows of this table.
    mpq_class inner_product(const IrrepLabel& a, const IrrepLabel& b) const;

    // Column (second) orthogonality: sum over rows of
    // value(row, c1) * conj(value(row, c2)); exact.  Equals
    // |G| / size(c1) when c1 = c2 and 0 otherwise.
    mpq_class column_inner_product(const ConjClassLabel& c1,
                                   const ConjClassLabel& c2) const;

    // (1/|H|) sum over h in H of the character value at the class of h;
    // throws InternalInconsistency if the result is not a nonnegative
    // integer.
    std::uint64_t trivial_multiplicity_on_subgroup(const IrrepLabel& irrep,
                                                   TorusSubgroup which) const;

    std::size_t row_index(const IrrepLabel& irrep) const;
    std::size_t col_index(const ConjClassLabel& cls) const;

private:
    CharacterTable() = default;

    std::uint64_t q_ = 0;
    std::uint64_t gsplit_ = 0;
    std::pair<std::uint64_t, std::uint64_t> gnorm1_{0, 0};
    std::vector<ConjClassLabel> classes_;
    std::vector<IrrepLabel> irreps_;
    std::vector<std::vector<CycloNumber>> values_;
    std::map<IrrepLabel, std::size_t> row_index_;
    std::map<ConjClassLabel, std::size_t> col_index_;
};

// Same table with complex<double> entries; the degraded mode used when the
// exact build is unavailable under a small conductor ceiling.  Built from
// the same formulas with floating primitives, never from an exact table.
struct NumericCharacterTable {
    std::uint64_t q = 0;
    std::uint64_t gsplit = 0;
    std::pair<std::uint64_t, std::uint64_t> gnorm1{0, 0};
    std::vector<ConjClassLabel> classes;
    std::vector<IrrepLabel> irreps;
    std::vector<std::vector<std::complex<double>>> values;

    static NumericCharacterTable build(std::uint64_t q);

    // Row inner product (1/|G|) sum size * v_a * conj(v_b).
    std::complex<double> inner_product(std::size_t row_a,
                                       std::size_t row_b) const;
    // Column product sum over rows (times size-normalization left to the
    // caller, mirroring CharacterTable::column_inner_product).
    std::complex<double> column_inner_product(std::size_t col_a,
                                              std::size_t col_b) const;
};

// Unique nonnegative-integer solution p(0..q-1) of
//   sum_n p(n) = degree   and   sum_n p(n) * zeta_q^n = trace_P_inverse.
// Throws NotARepresentationTrace when no such solution exists (including
// when the trace does not lie in Q(zeta_q)).
PVector solve_p_vector(std::uint64_t q, std::uint64_t degree,
                       const CycloNumber& trace_P_inverse);

// The p-vector of an irreducible row: solve_p_vector applied to its degree
// and its trace at the inverse unipotent generator (the UnipotentMinus
// column, where that element's class lies).
PVector p_table_for_irrep(const CharacterTable& table,
                          const IrrepLabel& irrep);

// Dimension of the zeta-eigenspace of the inverse unipotent generator
// acting on (cusp-form decomposition) + (the fixed Eisenstein-part
// decomposition: one Steinberg plus two copies of every pi_chi).
// All contributions are read off the p-vectors at n = 1.
std::uint64_t zeta_eigenspace_dim(const CharacterTable& table,
                                  const DecompVector& cusp_form_decomp);
// Convenience overload that builds the exact table for q.
std::uint64_t zeta_eigenspace_dim(std::uint64_t q,
                                  const DecompVector& cusp_form_decomp);

} // namespace heckeq
