#include "idlat/dinglindner.hpp"
#include "idlat/errors.hpp"
#include "idlat/linalg.hpp"

namespace idlat {

IntMatrix column_hnf(IntMatrix const& cols)
{
    /* the columns of cols are the rows of its transpose */
    return hnf(cols.transposed()).transposed();
}

IntMatrix shift_matrix(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i)
        m(i, i - 1) = 1;
    return m;
}

IntMatrix flaw_witness()
{
    return IntMatrix{{6, -8, -5}, {3, -7, -4}, {6, 1, -1}};
}

DLResult dl_identify(IntMatrix const& b)
{
    if (!b.is_square() || b.rows() == 0)
        throw DimensionMismatch("dl_identify: basis must be square and "
                                "non-empty");
    std::size_t const n = b.rows();

    DLResult res;
    DLTrace& tr = res.trace;
    tr.det = abs(determinant(b));
    if (sgn(tr.det) == 0)
        throw NotFullRank();
    tr.h = column_hnf(b.transposed());
    tr.adj = adjugate(tr.h);
    tr.shift = shift_matrix(n);
    IntMatrix const amh = tr.adj * tr.shift * tr.h;
    tr.amh_mod_det = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            tr.amh_mod_det(i, j) = mod_floor(amh(i, j), tr.det);

    /* Accept iff columns 1..n-1 vanish and column n does not. An
     * identically zero product is rejected, which is the witness case. */
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (sgn(tr.amh_mod_det(i, j)) != 0)
                return res;
    bool last_nonzero = false;
    for (std::size_t i = 0; i < n; ++i)
        last_nonzero = last_nonzero || sgn(tr.amh_mod_det(i, n - 1)) != 0;
    if (!last_nonzero)
        return res;

    /* Reconstruction from the last column c of A*M*H: H*c = det(H)*M*h_n,
     * and f = M*h_n / h_nn makes x*h_n - h_nn*f = 0 a lattice vector. */
    IntVector c = amh.col_vector(n - 1);
    IntVector hc(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            addmul(hc[i], tr.h(i, k), c[k]);
    Integer const denom = tr.det * tr.h(n - 1, n - 1);
    IntVector f(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!divides(denom, hc[i]))
            throw InternalError("dl_identify: reconstruction is not integral");
        f[i] = exact_div(hc[i], denom);
    }
    res.poly = MonicPoly(std::move(f));
    return res;
}

} // namespace idlat
