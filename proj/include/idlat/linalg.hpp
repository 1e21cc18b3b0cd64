#pragma once

/* Exact integer linear algebra: extended gcd, normal forms (HNF, incomplete
 * HNF, SNF), determinant, adjugate and lattice membership.
 *
 * Conventions. Rows are lattice generators. The HNF is lower triangular
 * with a positive diagonal and every entry below the diagonal in column i
 * reduced into [0, h_ii).
 *
 * All functions are pure; no state is shared between calls.
 */

#include "idlat/integer.hpp"
#include "idlat/matrix.hpp"

#include <span>

namespace idlat {

struct ExtGcdResult {
    Integer x;
    Integer y;
    Integer d;
};

/* x*a + y*b = d = gcd(a, b) > 0.
 *
 * Normalized so that, for b != 0, x lies in (-|b|/2d, |b|/2d]; for b == 0,
 * x = sign(a) and y = 0. Throws GcdUndefined when a == b == 0.
 */
ExtGcdResult ext_gcd(Integer const& a, Integer const& b);

/* Incomplete HNF  u * B = ((D | 0), (b' | d)). */
struct IhnfResult {
    IntMatrix d_block;   // (n-1) x (n-1)
    IntVector b_prime;   // length n-1
    Integer d;           // > 0, gcd of the last column of B
    IntMatrix u;         // n x n unimodular

    /* Reassembled ((D | 0), (b' | d)). */
    IntMatrix matrix() const;
};

/* A chain of 2x2 unimodular row operations driven by the
 * extended gcd of consecutive last-column entries. */
IhnfResult ihnf(IntMatrix const& b);

/* Lower triangular row HNF of a nonsingular square matrix.
 *
 * Works modulo |det B| (a multiple of the lattice determinant), so entry
 * sizes stay bounded by the determinant throughout. */
IntMatrix hnf(IntMatrix const& b);

/* Same normal form by plain elimination over Z with least-magnitude
 * pivoting. Intermediate entries can grow far beyond the determinant;
 * kept as an independent reference route. */
IntMatrix hnf_elimination(IntMatrix const& b);

bool is_hnf(IntMatrix const& h);

/* Fraction-free (Bareiss) elimination. */
Integer determinant(IntMatrix const& b);

/* Fast certificate of nonsingularity: rank modulo a few word-size primes,
 * falling back to the exact determinant only when all of them vanish. */
bool is_nonsingular(IntMatrix const& b);

/* adj(B) with B * adj(B) = det(B) * I, via fraction-free Gauss-Jordan. */
IntMatrix adjugate(IntMatrix const& b);

/* left_p * B * right_t = diag(s), s_i | s_{i+1}, s_i > 0. */
struct SnfResult {
    IntVector s;
    IntMatrix right_t;
    IntMatrix left_p;
};

/* Smith form together with a right transform. This is the part of the SNF
 * used for lattice membership (see smith_massager below); it does not form
 * the left transform. */
struct SmithMassager {
    IntVector s;
    IntMatrix right_t;
};

/* Full Smith form with both transforms. */
SnfResult snf(IntMatrix const& b);

/* Smith form and right transform only.
 *
 * From P*B*T = S with P, T unimodular, B^{-1} = T*S^{-1}*P, hence for a row
 * vector v:
 *
 *     v*B^{-1} in Z^n  <=>  (v*T)*S^{-1} in Z^n  <=>  v*T == 0 cmod S,
 *
 * i.e. component j of v*T is divisible by s_j. So T is a Smith massager
 * for B and the left transform is never needed for membership tests.
 *
 * The elimination runs on the HNF of B, which generates the same lattice;
 * T is therefore a right transform of B itself: if H = U*B then
 * (P_H*U)*B*T = S.
 */
SmithMassager smith_massager(IntMatrix const& b);

/* Same, when the caller already holds the HNF of the lattice. */
SmithMassager smith_massager_from_hnf(IntMatrix const& h);

/* True iff v*b^{-1} is integral for every row v of rows, tested as
 * v*T == 0 cmod S. An empty row set passes. */
bool integral_rows_check(IntMatrix const& rows, SmithMassager const& sm);
bool integral_rows_check(IntMatrix const& rows, IntMatrix const& b);

/* Independent route: rows * adj(b) == 0 elementwise mod det(b). */
bool integral_rows_check_adjugate(IntMatrix const& rows, IntMatrix const& b);

bool in_lattice(std::span<Integer const> v, IntMatrix const& b);

/* Necessary condition for an ideal lattice: h_ii | h_jl for all
 * l <= j <= i. h must be in HNF. */
bool divisibility_precheck(IntMatrix const& h);

} // namespace idlat
