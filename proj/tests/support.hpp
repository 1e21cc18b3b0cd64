#pragma once

#include "idlat/integer.hpp"
#include "idlat/matrix.hpp"
#include "idlat/polyring.hpp"
#include "idlat/random.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace idlat::test {

inline IntMatrix random_matrix(Xoshiro256ss& rng, std::size_t rows,
                               std::size_t cols, long lo, long hi)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.uniform(lo, hi);
    return m;
}

/* Rational Gaussian elimination, independent of the library. */
inline mpq_class rational_det(IntMatrix const& b)
{
    std::size_t const n = b.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = b(i, j);
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            mpq_class const f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

inline IntMatrix random_nonsingular(Xoshiro256ss& rng, std::size_t n,
                                    long lo, long hi)
{
    for (;;) {
        IntMatrix m = random_matrix(rng, n, n, lo, hi);
        if (rational_det(m) != 0)
            return m;
    }
}

/* Solves x * B = v over Q; nullopt when B is singular. */
inline std::optional<std::vector<mpq_class>>
rational_solve_left(IntMatrix const& b, std::vector<mpq_class> const& v)
{
    // x * B = v  <=>  B^T x^T = v^T
    std::size_t const n = b.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = b(j, i);
        a[i][n] = v[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            mpq_class const f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

inline bool rational_in_lattice(IntVector const& v, IntMatrix const& b)
{
    std::vector<mpq_class> q(v.begin(), v.end());
    auto x = rational_solve_left(b, q);
    if (!x)
        return false;
    for (auto& c : *x)
        if (c.get_den() != 1)
            return false;
    return true;
}

/* U * B for a random unimodular U built from elementary row operations. */
inline IntMatrix random_unimodular_change(Xoshiro256ss& rng,
                                          IntMatrix const& b,
                                          std::size_t ops = 0)
{
    std::size_t const n = b.rows();
    IntMatrix m = b;
    if (n == 1) {
        if (rng.below(2))
            m.negate_row(0);
        return m;
    }
    if (ops == 0)
        ops = 3 * n;
    for (std::size_t t = 0; t < ops; ++t) {
        std::size_t const i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i)
            ++j;
        switch (rng.below(4)) {
        case 0:
            m.swap_rows(i, j);
            break;
        case 1:
            m.negate_row(i);
            break;
        default:
            m.row_submul(i, Integer(rng.uniform(-2, 2)), j);
        }
    }
    return m;
}

inline IntMatrix random_unimodular(Xoshiro256ss& rng, std::size_t n)
{
    return random_unimodular_change(rng, IntMatrix::identity(n));
}

/* Plain lower-triangular HNF by repeated Euclid steps (small inputs). */
inline IntMatrix naive_hnf(IntMatrix m)
{
    std::size_t const n = m.rows();
    for (std::size_t c = n; c-- > 0;) {
        std::size_t const top = c; // rows 0..c still active
        for (;;) {
            std::size_t piv = n;
            for (std::size_t r = 0; r <= top; ++r)
                if (m(r, c) != 0 &&
                    (piv == n || abs(m(r, c)) < abs(m(piv, c))))
                    piv = r;
            bool done = true;
            for (std::size_t r = 0; r <= top; ++r) {
                if (r == piv || m(r, c) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(),
                           m(piv, c).get_mpz_t());
                m.row_submul(r, q, piv);
                if (m(r, c) != 0)
                    done = false;
            }
            if (done) {
                m.swap_rows(piv, c);
                break;
            }
        }
        if (m(c, c) < 0)
            m.negate_row(c);
        for (std::size_t r = c + 1; r < n; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(),
                       m(c, c).get_mpz_t());
            m.row_submul(r, q, c);
        }
    }
    return m;
}

/* Test-side ideal decision. With v the lattice vector whose last entry is
 * d = gcd of the last column, any valid g satisfies d*g in shift(v) + L.
 * Those g are searched among residues of Z^n mod L (box of the HNF
 * diagonal); the first hit is then checked against every row. */
struct OracleVerdict {
    bool ideal = false;
    IntVector g;
};

inline IntVector shift_up(std::span<Integer const> v)
{
    IntVector s(v.size());
    for (std::size_t i = 1; i < v.size(); ++i)
        s[i] = v[i - 1];
    return s;
}

inline bool acts_as_ring(IntMatrix const& b, IntVector const& g)
{
    std::size_t const n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        IntVector w = shift_up(b.row(i));
        for (std::size_t k = 0; k < n; ++k)
            w[k] -= b(i, n - 1) * g[k];
        if (!rational_in_lattice(w, b))
            return false;
    }
    return true;
}

inline OracleVerdict oracle_identify(IntMatrix const& b)
{
    std::size_t const n = b.rows();
    IntMatrix const h = naive_hnf(b);
    Integer const d = h(n - 1, n - 1);
    IntVector const target = shift_up(h.row(n - 1));

    // w in L iff w * (D * H^{-1}) == 0 mod D, D = det H
    Integer det = 1;
    for (std::size_t i = 0; i < n; ++i)
        det *= h(i, i);
    std::vector<IntVector> scaled(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> e(n, 0);
        e[i] = 1;
        auto const row = *rational_solve_left(h, e);
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class const t = row[c] * det;
            scaled[i][c] = t.get_num();
        }
    }
    auto in_l = [&](IntVector const& w) {
        Integer acc;
        for (std::size_t c = 0; c < n; ++c) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc += w[k] * scaled[k][c];
            if (mpz_divisible_p(acc.get_mpz_t(), det.get_mpz_t()) == 0)
                return false;
        }
        return true;
    };

    IntVector g(n, 0);
    IntVector w(n);
    for (;;) {
        for (std::size_t k = 0; k < n; ++k)
            w[k] = d * g[k] - target[k];
        if (in_l(w)) {
            OracleVerdict out;
            out.ideal = acts_as_ring(b, g);
            out.g = g;
            return out;
        }
        std::size_t k = 0;
        for (; k < n; ++k) {
            g[k] += 1;
            if (g[k] < h(k, k))
                break;
            g[k] = 0;
        }
        if (k == n)
            return {};
    }
}

} // namespace idlat::test
