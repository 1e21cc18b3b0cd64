#include "support.hpp"

#include "idlat/errors.hpp"
#include "idlat/identify.hpp"
#include "idlat/linalg.hpp"

#include <doctest.h>

#include <numeric>

using namespace idlat;
using idlat::test::random_matrix;
using idlat::test::random_nonsingular;

namespace {

IntMatrix witness() { return {{6, -8, -5}, {3, -7, -4}, {6, 1, -1}}; }

Integer gcd_of_column(IntMatrix const& b, std::size_t j)
{
    Integer g = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
        g = gcd(g, b(i, j));
    return g;
}

bool mutual_membership(IntMatrix const& a, IntMatrix const& b)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!test::rational_in_lattice(a.row_vector(i), b) ||
            !test::rational_in_lattice(b.row_vector(i), a))
            return false;
    return true;
}

} // namespace

TEST_CASE("ext_gcd examples")
{
    auto r = ext_gcd(0, 5);
    CHECK(r.x == 0);
    CHECK(r.y == 1);
    CHECK(r.d == 5);

    r = ext_gcd(3, 2);
    CHECK(r.x == 1);
    CHECK(r.y == -1);
    CHECK(r.d == 1);

    r = ext_gcd(4, 6);
    CHECK(r.x == -1);
    CHECK(r.y == 1);
    CHECK(r.d == 2);

    r = ext_gcd(-7, 0);
    CHECK(r.d == 7);
    CHECK(r.x * -7 == 7);

    CHECK_THROWS_AS(ext_gcd(0, 0), GcdUndefined);
}

TEST_CASE("ext_gcd bezout and normalization")
{
    Xoshiro256ss rng(11);
    for (int t = 0; t < 2000; ++t) {
        Integer a = rng.uniform(-1000, 1000);
        Integer b = rng.uniform(-1000, 1000);
        if (a == 0 && b == 0)
            continue;
        auto r = ext_gcd(a, b);
        REQUIRE(r.d > 0);
        CHECK(r.d == gcd(a, b));
        CHECK(r.x * a + r.y * b == r.d);
        if (b != 0)
            CHECK(2 * r.d * abs(r.x) <= abs(b));
    }
}

TEST_CASE("determinant examples")
{
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix::diagonal({2, 3})) == 6);
    CHECK(abs(determinant(witness())) == 9);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("determinant agrees with rational elimination")
{
    Xoshiro256ss rng(12);
    for (int t = 0; t < 300; ++t) {
        std::size_t const n = 1 + rng.below(6);
        IntMatrix const b = random_matrix(rng, n, n, -9, 9);
        CHECK(mpq_class(determinant(b)) == test::rational_det(b));
        CHECK(is_nonsingular(b) == (determinant(b) != 0));
    }
}

TEST_CASE("adjugate examples")
{
    CHECK(adjugate(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(adjugate(IntMatrix{{9, 6, 0}, {0, 1, 0}, {0, 0, 1}}) ==
          IntMatrix{{1, -6, 0}, {0, 9, 0}, {0, 0, 9}});
    CHECK(adjugate(IntMatrix::diagonal({2, 3})) ==
          IntMatrix::diagonal({3, 2}));
    CHECK_THROWS_AS(adjugate(IntMatrix{{1, 1}, {1, 1}}), NotFullRank);
}

TEST_CASE("b * adj(b) = det(b) * I")
{
    Xoshiro256ss rng(13);
    for (int t = 0; t < 300; ++t) {
        std::size_t const n = 1 + rng.below(6);
        IntMatrix const b = random_nonsingular(rng, n, -8, 8);
        IntMatrix const a = adjugate(b);
        Integer const det = determinant(b);
        CHECK(b * a == det * IntMatrix::identity(n));
        CHECK(a * b == det * IntMatrix::identity(n));
    }
}

TEST_CASE("hnf examples")
{
    CHECK(hnf(IntMatrix{{0, 1}, {1, 0}}) == IntMatrix::identity(2));
    CHECK(hnf(IntMatrix{{2, 1}, {0, 1}}) == IntMatrix{{2, 0}, {0, 1}});
    CHECK(mutual_membership(IntMatrix{{2, 1}, {0, 1}},
                            IntMatrix{{2, 0}, {0, 1}}));
    // transpose of the column-convention display
    CHECK(hnf(witness()) == IntMatrix{{9, 0, 0}, {6, 1, 0}, {0, 0, 1}});
    CHECK(hnf(IntMatrix{{-4}}) == IntMatrix{{4}});
    CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), NotFullRank);
    CHECK_THROWS_AS(hnf(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("hnf shape, lattice and uniqueness")
{
    Xoshiro256ss rng(14);
    for (int t = 0; t < 400; ++t) {
        std::size_t const n = 1 + rng.below(6);
        IntMatrix const b = random_nonsingular(rng, n, -8, 8);
        IntMatrix const h = hnf(b);
        REQUIRE(is_hnf(h));
        CHECK(mutual_membership(h, b));
        CHECK(h == test::naive_hnf(b));
        CHECK(h == hnf_elimination(b));
        CHECK(hnf(test::random_unimodular_change(rng, b)) == h);
    }
}

TEST_CASE("hnf on larger and degenerate-looking inputs")
{
    Xoshiro256ss rng(15);
    for (int t = 0; t < 20; ++t) {
        std::size_t const n = 8 + rng.below(8);
        IntMatrix const b = random_nonsingular(rng, n, -1000, 1000);
        CHECK(hnf(b) == hnf_elimination(b));
    }
    // columns with zeros force pivots to move between rows
    IntMatrix z{{0, 0, 3}, {0, 5, 0}, {7, 0, 0}};
    CHECK(hnf(z) == IntMatrix::diagonal({7, 5, 3}));
    IntMatrix big = 1000000007 * IntMatrix::identity(3);
    big(2, 0) = 5;
    CHECK(hnf(big) == hnf_elimination(big));
}

TEST_CASE("is_hnf")
{
    CHECK(is_hnf(IntMatrix::identity(3)));
    CHECK(is_hnf(IntMatrix{{9, 0, 0}, {6, 1, 0}, {0, 0, 1}}));
    CHECK_FALSE(is_hnf(IntMatrix{{9, 0, 0}, {9, 1, 0}, {0, 0, 1}}));
    CHECK_FALSE(is_hnf(IntMatrix{{1, 1}, {0, 1}}));
    CHECK_FALSE(is_hnf(IntMatrix{{-1, 0}, {0, 1}}));
}

TEST_CASE("ihnf examples")
{
    auto r = ihnf(IntMatrix::identity(3));
    CHECK(r.matrix() == IntMatrix::identity(3));
    CHECK(r.d == 1);
    CHECK(r.u == IntMatrix::identity(3));

    IntMatrix const b{{2, 3}, {1, 2}};
    r = ihnf(b);
    CHECK(r.matrix() == IntMatrix{{-1, 0}, {1, 1}});
    CHECK(r.d == 1);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(hnf(r.matrix()) == hnf(b));

    CHECK(ihnf(witness()).d == 1);

    auto one = ihnf(IntMatrix{{-6}});
    CHECK(one.d == 6);
    CHECK(one.d_block.rows() == 0);
    CHECK(one.u * IntMatrix{{-6}} == IntMatrix{{6}});

    CHECK_THROWS_AS(ihnf(IntMatrix{{1, 2}, {2, 4}}), NotFullRank);
}

TEST_CASE("ihnf contract on random inputs")
{
    Xoshiro256ss rng(16);
    for (int t = 0; t < 500; ++t) {
        std::size_t const n = 1 + rng.below(6);
        IntMatrix b = random_nonsingular(rng, n, -8, 8);
        if (t % 5 == 0 && n > 2) // zero runs in the last column
            for (std::size_t i = 0; i + 1 < n; i += 2)
                b(i, n - 1) = 0;
        if (!is_nonsingular(b))
            continue;
        auto const r = ihnf(b);
        IntMatrix const m = r.matrix();
        CHECK(r.u * b == m);
        CHECK(abs(determinant(r.u)) == 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            CHECK(m(i, n - 1) == 0);
        CHECK(r.d > 0);
        CHECK(r.d == gcd_of_column(b, n - 1));
        CHECK(hnf(m) == hnf(b));
    }
}

TEST_CASE("snf examples")
{
    CHECK(snf(IntMatrix::identity(3)).s == IntVector{1, 1, 1});
    CHECK(snf(IntMatrix::diagonal({2, 4})).s == IntVector{2, 4});
    CHECK(snf(IntMatrix::diagonal({2, 3})).s == IntVector{1, 6});
    CHECK(snf(witness()).s == IntVector{1, 1, 9});
    CHECK_THROWS_AS(snf(IntMatrix{{2, 4}, {1, 2}}), NotFullRank);
}

TEST_CASE("snf invariants")
{
    Xoshiro256ss rng(17);
    for (int t = 0; t < 400; ++t) {
        std::size_t const n = 1 + rng.below(6);
        IntMatrix const b = random_nonsingular(rng, n, -8, 8);
        auto const r = snf(b);
        CHECK(r.left_p * b * r.right_t == IntMatrix::diagonal(r.s));
        CHECK(abs(determinant(r.left_p)) == 1);
        CHECK(abs(determinant(r.right_t)) == 1);
        Integer prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(r.s[i] > 0);
            if (i + 1 < n)
                CHECK(divides(r.s[i], r.s[i + 1]));
            prod *= r.s[i];
        }
        CHECK(prod == abs(determinant(b)));
        CHECK(smith_massager(b).s == r.s);
    }
}

TEST_CASE("in_lattice examples")
{
    IntMatrix const b = witness();
    CHECK(in_lattice(IntVector{0, 0, 0}, b));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(in_lattice(b.row(i), b));
    CHECK_FALSE(in_lattice(IntVector{1, 0, 0}, 2 * IntMatrix::identity(3)));
    CHECK_THROWS_AS(in_lattice(IntVector{1, 0}, b), DimensionMismatch);
}

TEST_CASE("integral_rows_check examples")
{
    IntMatrix const b = witness();
    CHECK(integral_rows_check(b, b));
    auto const r = ihnf(b);
    CHECK(integral_rows_check(shifted_rows(r.d_block), b));
    IntMatrix const diag12 = IntMatrix::diagonal({1, 2});
    IntMatrix const shifted12 =
        shifted_rows(ihnf(diag12).d_block);
    CHECK_FALSE(integral_rows_check(shifted12, diag12));
    CHECK_FALSE(integral_rows_check_adjugate(shifted12, diag12));
    CHECK(integral_rows_check(IntMatrix(0, 3), b));
}

TEST_CASE("massager route agrees with adjugate route")
{
    Xoshiro256ss rng(18);
    int positives = 0;
    for (int t = 0; t < 1000; ++t) {
        std::size_t const n = 1 + rng.below(5);
        IntMatrix const b = random_nonsingular(rng, n, -8, 8);
        std::size_t const k = 1 + rng.below(3);
        IntMatrix v = random_matrix(rng, k, n, -8, 8);
        if (t % 3 == 0) // half-chance lattice vectors
            v = test::random_matrix(rng, k, n, -2, 2) * b;
        bool const a = integral_rows_check(v, b);
        CHECK(a == integral_rows_check_adjugate(v, b));
        bool all = true;
        for (std::size_t i = 0; i < k; ++i)
            all = all && test::rational_in_lattice(v.row_vector(i), b);
        CHECK(a == all);
        positives += a;
    }
    CHECK(positives > 100);
}

TEST_CASE("divisibility_precheck")
{
    CHECK(divisibility_precheck(IntMatrix::identity(4)));
    CHECK_FALSE(divisibility_precheck(IntMatrix::diagonal({1, 2})));
    CHECK(divisibility_precheck(IntMatrix{{9, 0, 0}, {6, 1, 0}, {0, 0, 1}}));
    CHECK(divisibility_precheck(IntMatrix{{4, 0}, {2, 2}}));
    CHECK_FALSE(divisibility_precheck(IntMatrix{{4, 0}, {1, 2}}));
}
