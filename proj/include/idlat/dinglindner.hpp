#pragma once

/* The earlier Ding-Lindner identification procedure, reconstructed to
 * reproduce its behaviour (including its blind spot) for comparison.
 *
 * It works in the column convention: the lattice is spanned by the columns
 * of B^T. With H the upper triangular column HNF of B^T, A = adj(H) and M
 * the down-shift matrix ((0 0), (I_{n-1} 0)), it forms A*M*H mod det(B)
 * and accepts only when every column except the last is zero *and* the
 * last one is not. Lattices for which the whole product vanishes (those
 * whose ring class contains x^n) are ideal lattices but get rejected.
 */

#include "idlat/matrix.hpp"
#include "idlat/polyring.hpp"

#include <optional>

namespace idlat {

struct DLTrace {
    IntMatrix h;           // column HNF of B^T, upper triangular
    IntMatrix adj;         // adj(H)
    IntMatrix shift;       // M
    IntMatrix amh_mod_det; // A*M*H reduced into [0, |det B|)
    Integer det;           // |det B|
};

struct DLResult {
    /* set iff the acceptance test passed */
    std::optional<MonicPoly> poly;
    DLTrace trace;

    bool accepted() const noexcept { return poly.has_value(); }
};

DLResult dl_identify(IntMatrix const& b);

/* Upper triangular HNF of a matrix whose columns generate the lattice. */
IntMatrix column_hnf(IntMatrix const& cols);

/* ((0 0), (I_{n-1} 0)) */
IntMatrix shift_matrix(std::size_t n);

/* An ideal lattice the procedure fails to recognise; it is an ideal of
 * Z[x]/(x^3 + 3x^2 + x - 3). */
IntMatrix flaw_witness();

} // namespace idlat
