#include "idlat/linalg.hpp"
#include "idlat/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace idlat {

ExtGcdResult ext_gcd(Integer const& a, Integer const& b)
{
    if (sgn(a) == 0 && sgn(b) == 0)
        throw GcdUndefined();
    if (sgn(b) == 0)
        return {Integer(sgn(a)), Integer(0), abs(a)};

    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Integer m = exact_div(abs(b), g);
    Integer x = mod_floor(s, m);
    if (2 * x > m)
        x -= m;
    Integer y = exact_div(g - x * a, b);
    return {std::move(x), std::move(y), std::move(g)};
}

IntMatrix IhnfResult::matrix() const
{
    std::size_t const n = u.rows();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j)
            m(i, j) = d_block(i, j);
    for (std::size_t j = 0; j + 1 < n; ++j)
        m(n - 1, j) = b_prime[j];
    m(n - 1, n - 1) = d;
    return m;
}

namespace {

void require_square(IntMatrix const& b, char const* who)
{
    if (!b.is_square())
        throw DimensionMismatch(std::string(who) + ": matrix is not square");
}

/* (r_i, r_j) := (a*r_i + c*r_j, e*r_i + f*r_j) */
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j,
                  Integer const& a, Integer const& c, Integer const& e,
                  Integer const& f)
{
    auto ri = m.row(i);
    auto rj = m.row(j);
    Integer ni, nj;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        ni = a * ri[k];
        addmul(ni, c, rj[k]);
        nj = e * ri[k];
        addmul(nj, f, rj[k]);
        mpz_swap(ri[k].get_mpz_t(), ni.get_mpz_t());
        mpz_swap(rj[k].get_mpz_t(), nj.get_mpz_t());
    }
}

} // namespace

IhnfResult ihnf(IntMatrix const& b)
{
    require_square(b, "ihnf");
    if (!is_nonsingular(b))
        throw NotFullRank();

    std::size_t const n = b.rows();
    std::size_t const last = n - 1;
    IntMatrix w = b;
    IntMatrix u = IntMatrix::identity(n);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        Integer const bi = w(i, last);
        Integer const bj = w(i + 1, last);
        /* row i already has a zero last entry; the running gcd stays in
         * row i+1 */
        if (sgn(bi) == 0)
            continue;
        auto const g = ext_gcd(bi, bj);
        Integer const a = -exact_div(bj, g.d);
        Integer const c = exact_div(bi, g.d);
        combine_rows(w, i, i + 1, a, c, g.x, g.y);
        combine_rows(u, i, i + 1, a, c, g.x, g.y);
    }
    /* skipped steps leave the sign of the last entry untouched */
    if (sgn(w(last, last)) < 0) {
        w.negate_row(last);
        u.negate_row(last);
    }
    if (sgn(w(last, last)) == 0)
        throw NotFullRank();

    IhnfResult r;
    r.d_block = w.submatrix(0, 0, last, last);
    r.b_prime.assign(w.row(last).begin(), w.row(last).begin() + last);
    r.d = w(last, last);
    r.u = std::move(u);
    return r;
}

IntMatrix hnf_elimination(IntMatrix const& b)
{
    require_square(b, "hnf_elimination");
    std::size_t const n = b.rows();
    IntMatrix w = b;
    IntMatrix h(n, n);
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i)
        active[i] = i;

    for (std::size_t jj = n; jj-- > 0;) {
        std::size_t const j = jj;
        std::size_t p = 0;
        /* Euclid on column j across all active rows, always reducing by
         * the entry of least magnitude */
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t k = 0; k < active.size(); ++k) {
                auto const& x = w(active[k], j);
                if (sgn(x) == 0)
                    continue;
                if (!best || cmpabs(x, w(active[*best], j)) < 0)
                    best = k;
            }
            if (!best)
                throw NotFullRank();
            p = *best;
            std::size_t const pr = active[p];
            bool rest_zero = true;
            for (std::size_t k = 0; k < active.size(); ++k) {
                std::size_t const r = active[k];
                if (k == p || sgn(w(r, j)) == 0)
                    continue;
                Integer const q = round_div(w(r, j), w(pr, j));
                w.row_submul(r, q, pr);
                if (sgn(w(r, j)) != 0)
                    rest_zero = false;
            }
            if (rest_zero)
                break;
        }
        std::size_t const pr = active[p];
        if (sgn(w(pr, j)) < 0)
            w.negate_row(pr);
        h.set_row(j, w.row(pr));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(p));

        for (std::size_t k = j + 1; k < n; ++k) {
            Integer const q = floor_div(h(k, j), h(j, j));
            h.row_submul(k, q, j);
        }
    }
    return h;
}

IntMatrix hnf(IntMatrix const& b)
{
    require_square(b, "hnf");
    std::size_t const n = b.rows();
    Integer modulus = abs(determinant(b));
    if (sgn(modulus) == 0)
        throw NotFullRank();

    /* Invariant before pivot column j is settled: R = modulus is the
     * determinant of K_j = L(B) cap (Z^{j+1} x 0), hence R*e_c lies in the
     * lattice for every c <= j. Rows may be reduced modulo R without
     * changing the lattice, and once column j has pivot g the next
     * modulus is R/g. */
    IntMatrix w = b;
    IntMatrix h(n, n);
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i)
        active[i] = i;

    /* truncating remainder; entries already below R in magnitude (the
     * common case for small inputs) are left untouched */
    auto reduce = [](std::span<Integer> r, std::size_t count,
                     Integer const& m) {
        for (std::size_t c = 0; c < count; ++c)
            if (cmpabs(r[c], m) >= 0)
                mpz_tdiv_r(r[c].get_mpz_t(), r[c].get_mpz_t(), m.get_mpz_t());
    };

    Integer ni, nj, q;
    for (std::size_t jj = n; jj-- > 0;) {
        std::size_t const j = jj;

        /* fold column j into the active row of least nonzero magnitude */
        std::optional<std::size_t> piv;
        for (std::size_t k = 0; k < active.size(); ++k) {
            auto const& x = w(active[k], j);
            if (sgn(x) != 0 && (!piv || cmpabs(x, w(active[*piv], j)) < 0))
                piv = k;
        }
        if (piv) {
            std::size_t const p = active[*piv];
            for (std::size_t k = 0; k < active.size(); ++k) {
                std::size_t const r = active[k];
                if (k == *piv || sgn(w(r, j)) == 0)
                    continue;
                auto rp = w.row(p);
                auto rr = w.row(r);
                if (divides(rp[j], rr[j])) {
                    mpz_divexact(q.get_mpz_t(), rr[j].get_mpz_t(),
                                 rp[j].get_mpz_t());
                    for (std::size_t col = 0; col < j; ++col)
                        if (sgn(rp[col]) != 0)
                            submul(rr[col], q, rp[col]);
                    rr[j] = 0;
                    reduce(rr, j, modulus);
                    continue;
                }
                auto const g = ext_gcd(rp[j], rr[j]);
                Integer const a = exact_div(rr[j], g.d);
                Integer const c = exact_div(rp[j], g.d);
                for (std::size_t col = 0; col < j; ++col) {
                    ni = g.x * rp[col];
                    addmul(ni, g.y, rr[col]);
                    nj = c * rr[col];
                    submul(nj, a, rp[col]);
                    mpz_swap(rp[col].get_mpz_t(), ni.get_mpz_t());
                    mpz_swap(rr[col].get_mpz_t(), nj.get_mpz_t());
                }
                rp[j] = g.d;
                rr[j] = 0;
                reduce(rp, j, modulus);
                reduce(rr, j, modulus);
            }
        }

        auto hj = h.row(j);
        Integer g;
        if (!piv) {
            /* column j vanishes on the active rows: the pivot is R*e_j */
            g = modulus;
            hj[j] = modulus;
        } else {
            std::size_t const p = active[*piv];
            auto const e = ext_gcd(w(p, j), modulus);
            g = e.d;
            auto rp = w.row(p);
            for (std::size_t col = 0; col < j; ++col)
                hj[col] = e.x * rp[col];
            hj[j] = g;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(*piv));
        }
        modulus = exact_div(modulus, g);
        reduce(hj, j, modulus);

        for (std::size_t k = j + 1; k < n; ++k) {
            auto hk = h.row(k);
            if (sgn(hk[j]) == 0)
                continue;
            q = floor_div(hk[j], hj[j]);
            for (std::size_t col = 0; col < j; ++col)
                if (sgn(hj[col]) != 0)
                    submul(hk[col], q, hj[col]);
            submul(hk[j], q, hj[j]);
            reduce(hk, j, modulus);
        }

        for (std::size_t r : active) {
            w(r, j) = 0;
            reduce(w.row(r), j, modulus);
        }
    }
    return h;
}

bool is_hnf(IntMatrix const& h)
{
    if (!h.is_square())
        return false;
    std::size_t const n = h.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(h(i, i)) <= 0)
            return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (sgn(h(i, j)) != 0)
                return false;
        for (std::size_t k = i + 1; k < n; ++k)
            if (sgn(h(k, i)) < 0 || h(k, i) >= h(i, i))
                return false;
    }
    return true;
}

Integer determinant(IntMatrix const& b)
{
    require_square(b, "determinant");
    std::size_t const n = b.rows();
    if (n == 0)
        return 1;
    IntMatrix w = b;
    int sign = 1;
    Integer prev = 1;
    Integer t;
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<std::size_t> piv;
        for (std::size_t r = k; r < n; ++r)
            if (sgn(w(r, k)) != 0 &&
                (!piv || cmpabs(w(r, k), w(*piv, k)) < 0))
                piv = r;
        if (!piv)
            return 0;
        if (*piv != k) {
            w.swap_rows(*piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = w(k, k) * w(i, j);
                submul(t, w(i, k), w(k, j));
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

namespace {

constexpr std::array<std::uint64_t, 3> kRankPrimes = {
    0x1fffffffffffffffULL,       // 2^61 - 1
    0xffffffff00000001ULL,       // 2^64 - 2^32 + 1
    0xfffffffffffffe95ULL,       // 2^64 - 363
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool full_rank_mod(IntMatrix const& b, std::uint64_t p)
{
    std::size_t const n = b.rows();
    std::vector<std::uint64_t> w(n * n);
    Integer r;
    Integer const pz = Integer(std::to_string(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpz_fdiv_r(r.get_mpz_t(), b(i, j).get_mpz_t(), pz.get_mpz_t());
            w[i * n + j] = mpz_get_ui(r.get_mpz_t());
        }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w[piv * n + k] == 0)
            ++piv;
        if (piv == n)
            return false;
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w[piv * n + j], w[k * n + j]);
        std::uint64_t const inv = powmod(w[k * n + k], p - 2, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            std::uint64_t const f = mulmod(w[i * n + k], inv, p);
            if (f == 0)
                continue;
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t const s = mulmod(f, w[k * n + j], p);
                std::uint64_t& x = w[i * n + j];
                x = x >= s ? x - s : x + (p - s);
            }
        }
    }
    return true;
}

} // namespace

bool is_nonsingular(IntMatrix const& b)
{
    require_square(b, "is_nonsingular");
    static_assert(sizeof(unsigned long) == 8);
    for (auto p : kRankPrimes)
        if (full_rank_mod(b, p))
            return true;
    return sgn(determinant(b)) != 0;
}

IntMatrix adjugate(IntMatrix const& b)
{
    require_square(b, "adjugate");
    std::size_t const n = b.rows();
    if (n == 0)
        return {};
    /* Gauss-Jordan on [B | I] with Bareiss division. At the end the left
     * block is p*I with p = +-det(B) and the right block is p*B^{-1}. */
    std::size_t const m = 2 * n;
    IntMatrix w(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = b(i, j);
        w(i, n + i) = 1;
    }
    int sign = 1;
    Integer prev = 1;
    Integer t;
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<std::size_t> piv;
        for (std::size_t r = k; r < n; ++r)
            if (sgn(w(r, k)) != 0 &&
                (!piv || cmpabs(w(r, k), w(*piv, k)) < 0))
                piv = r;
        if (!piv)
            throw NotFullRank("adjugate: matrix is singular");
        if (*piv != k) {
            w.swap_rows(*piv, k);
            sign = -sign;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == k)
                    continue;
                t = w(k, k) * w(i, j);
                submul(t, w(i, k), w(k, j));
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    /* rows processed before the last pivot carry the last pivot value on
     * the diagonal; the right block is prev * B^{-1} and det = sign*prev */
    IntMatrix a = w.submatrix(0, n, n, n);
    if (sign < 0)
        for (std::size_t i = 0; i < n; ++i)
            a.negate_row(i);
    return a;
}

namespace {

struct SmithWork {
    IntMatrix w;
    IntMatrix t;
    IntMatrix p;
    bool track_left = false;

    void swap_rows(std::size_t i, std::size_t j)
    {
        w.swap_rows(i, j);
        if (track_left)
            p.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        w.swap_cols(i, j);
        t.swap_cols(i, j);
    }
    void row_submul(std::size_t i, Integer const& k, std::size_t j)
    {
        w.row_submul(i, k, j);
        if (track_left)
            p.row_submul(i, k, j);
    }
    void col_submul(std::size_t i, Integer const& k, std::size_t j)
    {
        w.col_submul(i, k, j);
        t.col_submul(i, k, j);
    }
};

/* Diagonalize w by unimodular row and column operations with
 * least-magnitude pivoting, enforcing the divisibility chain. */
IntVector smith_eliminate(SmithWork& sw)
{
    IntMatrix& w = sw.w;
    std::size_t const n = w.rows();
    IntVector s(n);

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            bool unit = false;
            for (std::size_t i = k; i < n && !unit; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    auto const& x = w(i, j);
                    if (sgn(x) == 0)
                        continue;
                    if (!best || cmpabs(x, w(best->first, best->second)) < 0) {
                        best = {i, j};
                        unit = cmpabs(x, 1ul) == 0;
                        if (unit)
                            break;
                    }
                }
            if (!best)
                throw NotFullRank("snf: matrix is singular");
            sw.swap_rows(k, best->first);
            sw.swap_cols(k, best->second);

            for (;;) {
                bool dirty = false;
                for (std::size_t i = k + 1; i < n; ++i) {
                    if (sgn(w(i, k)) == 0)
                        continue;
                    sw.row_submul(i, round_div(w(i, k), w(k, k)), k);
                    dirty = dirty || sgn(w(i, k)) != 0;
                }
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (sgn(w(k, j)) == 0)
                        continue;
                    sw.col_submul(j, round_div(w(k, j), w(k, k)), k);
                    dirty = dirty || sgn(w(k, j)) != 0;
                }
                if (!dirty)
                    break;
                /* a remainder is now smaller than the pivot: move it in */
                std::size_t bi = k, bj = k;
                for (std::size_t i = k + 1; i < n; ++i)
                    if (sgn(w(i, k)) != 0 &&
                        cmpabs(w(i, k), w(bi, bj)) < 0) {
                        bi = i;
                        bj = k;
                    }
                for (std::size_t j = k + 1; j < n; ++j)
                    if (sgn(w(k, j)) != 0 &&
                        cmpabs(w(k, j), w(bi, bj)) < 0) {
                        bi = k;
                        bj = j;
                    }
                sw.swap_rows(k, bi);
                sw.swap_cols(k, bj);
            }

            if (cmpabs(w(k, k), 1ul) == 0)
                break;
            std::optional<std::size_t> offender;
            for (std::size_t i = k + 1; i < n && !offender; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!divides(w(k, k), w(i, j))) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            /* row k += row i, then redo this pivot */
            sw.row_submul(k, Integer(-1), *offender);
        }
        if (sgn(w(k, k)) < 0) {
            w.negate_col(k);
            sw.t.negate_col(k);
        }
        s[k] = w(k, k);
    }
    return s;
}

} // namespace

SmithMassager smith_massager_from_hnf(IntMatrix const& h)
{
    require_square(h, "smith_massager");
    SmithWork sw{h, IntMatrix::identity(h.rows()), {}, false};
    IntVector s = smith_eliminate(sw);
    return {std::move(s), std::move(sw.t)};
}

SmithMassager smith_massager(IntMatrix const& b)
{
    return smith_massager_from_hnf(hnf(b));
}

SnfResult snf(IntMatrix const& b)
{
    require_square(b, "snf");
    std::size_t const n = b.rows();
    IntMatrix const h = hnf(b);
    SmithWork sw{h, IntMatrix::identity(n), IntMatrix::identity(n), true};
    IntVector s = smith_eliminate(sw);

    /* H = U*B with U = H*adj(B)/det(B) unimodular */
    Integer const det = determinant(b);
    IntMatrix const u = divexact(h * adjugate(b), det);
    return {std::move(s), std::move(sw.t), sw.p * u};
}

bool integral_rows_check(IntMatrix const& rows, SmithMassager const& sm)
{
    std::size_t const n = sm.s.size();
    if (rows.rows() == 0)
        return true;
    if (rows.cols() != n)
        throw DimensionMismatch("integral_rows_check: row length differs "
                                "from lattice dimension");
    /* columns with s_j = 1 impose nothing; reduce the rest cmod S */
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
        if (sm.s[j] != 1)
            cols.push_back(j);
    if (cols.empty())
        return true;
    IntMatrix reduced(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < n; ++k)
            reduced(k, c) = mod_floor(sm.right_t(k, cols[c]), sm.s[cols[c]]);

    Integer acc;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        auto r = rows.row(i);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(r[k]) != 0)
                    addmul(acc, r[k], reduced(k, c));
            if (!divides(sm.s[cols[c]], acc))
                return false;
        }
    }
    return true;
}

bool integral_rows_check(IntMatrix const& rows, IntMatrix const& b)
{
    require_square(b, "integral_rows_check");
    if (rows.rows() == 0)
        return true;
    return integral_rows_check(rows, smith_massager(b));
}

bool integral_rows_check_adjugate(IntMatrix const& rows, IntMatrix const& b)
{
    require_square(b, "integral_rows_check_adjugate");
    if (rows.rows() == 0)
        return true;
    if (rows.cols() != b.rows())
        throw DimensionMismatch("integral_rows_check_adjugate: row length "
                                "differs from lattice dimension");
    Integer const det = abs(determinant(b));
    if (sgn(det) == 0)
        throw NotFullRank();
    IntMatrix const prod = rows * adjugate(b);
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!divides(det, prod(i, j)))
                return false;
    return true;
}

bool in_lattice(std::span<Integer const> v, IntMatrix const& b)
{
    require_square(b, "in_lattice");
    if (v.size() != b.rows())
        throw DimensionMismatch("in_lattice: vector length differs from "
                                "lattice dimension");
    IntMatrix row(1, v.size());
    row.set_row(0, v);
    return integral_rows_check(row, b);
}

bool divisibility_precheck(IntMatrix const& h)
{
    std::size_t const n = h.rows();
    for (std::size_t i = 0; i < n; ++i) {
        auto const& hii = h(i, i);
        if (hii == 1)
            continue;
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t l = 0; l <= j; ++l)
                if (!divides(hii, h(j, l)))
                    return false;
    }
    return true;
}

} // namespace idlat
