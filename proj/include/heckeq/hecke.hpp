#pragma once

// Both sides of the identity: the Riemann-Roch dimension z from modcurve,
// its inversion to the multiplicity difference y_plus - y_minus, and the
// class number h(-q) by two independent methods (reduced binary quadratic
// forms, and the finite Dirichlet character sum).  A verified report ties
// them together per prime; sweeps run many primes on a worker pool.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "heckeq/character_table.hpp"

namespace heckeq {

// Positive-definite integral binary quadratic form a*x^2 + b*x*y + c*y^2
// of discriminant b^2 - 4ac = -q.
struct QuadForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const QuadForm& f, const QuadForm& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
    friend bool operator<(const QuadForm& f, const QuadForm& g) {
        if (f.a != g.a) return f.a < g.a;
        if (f.b != g.b) return f.b < g.b;
        return f.c < g.c;
    }
};

struct HeckeReport {
    std::uint64_t q = 0;
    std::uint64_t mu = 0;
    std::uint64_t g = 0;
    mpq_class kappa_sum;
    std::int64_t m = 0;
    std::int64_t z_rr = 0;
    std::int64_t sum_nchi = 0;
    std::int64_t h_forms = 0;
    std::int64_t h_dirichlet = 0;
    std::int64_t y_diff = 0;
    bool verdict = false;
    double elapsed_ms = 0.0;
    std::string error; // nonempty when the computation failed
};

// Sum of n * legendre(n, q) over n = 1..q-1; divisible by q and negative
// for the primes this engine accepts.
std::int64_t sum_n_chi(std::uint64_t q);

// Count and list of reduced primitive positive-definite forms of
// discriminant -q, by exhaustive scan (a <= sqrt(q/3), b odd, |b| <= a).
std::pair<std::int64_t, std::vector<QuadForm>> class_number_forms(
    std::uint64_t q);

// -sum_n_chi(q)/q; asserted positive integral and equal to the forms
// oracle (SignConventionViolation on mismatch).
std::int64_t class_number_dirichlet(std::uint64_t q);

// Inverts the representation-theoretic dimension formula:
// y_plus - y_minus = 2z - (q-1)/2 - (q^2-1)/12.  Recomputes the exact
// rational simplification chain behind the formula and throws
// InternalInconsistency if anything fails to be integral.
std::int64_t y_diff_from_z(std::uint64_t q, std::int64_t z);

// Formal identities bridging the restriction multiplicities and the
// dimension formula, checked over symbolic decomposition vectors: with
// Z(H) the trivial multiplicity of a decomposed representation on the
// torus subgroup H, verifies the per-irrep coefficient tables
// (H2: Steinberg 3, others (1, 2, 2)); (H1: all (1, 1, 2, 2)) and their
// consequences x = (Z(H2) - Z(H1))/2 and S = Z(H1) - x.
struct XSIdentityChecks {
    bool coefficients_ok = false; // every irrep matches the expected table
    bool x_identity_ok = false;   // (Z(H2) - Z(H1))/2 recovers x formally
    bool s_identity_ok = false;   // Z(H1) - x recovers S = Y + 2U + 2V
    // Coefficients found, ordered like table.irreps().
    std::vector<std::uint64_t> h2_coefficients;
    std::vector<std::uint64_t> h1_coefficients;
};
XSIdentityChecks check_xs_identities(const CharacterTable& table);

// Full per-prime verification: divisor bookkeeping, the dimension
// inversion, both class numbers, the kappa-sum/character-sum cross
// identity, and the verdict y_diff == h_forms == h_dirichlet.
HeckeReport verify_hecke_identity(std::uint64_t q);

// One report per prime q = 3 (mod 4), q > 3 in [q_min, q_max], in
// ascending q order regardless of worker count.  Per-prime failures are
// recorded in the report's error field; the sweep never aborts.
std::vector<HeckeReport> sweep_verify(std::uint64_t q_min, std::uint64_t q_max,
                                      unsigned workers);

} // namespace heckeq
