#include "idlat/dinglindner.hpp"
#include "idlat/harness.hpp"
#include "idlat/identify.hpp"
#include "idlat/linalg.hpp"

#include <doctest.h>

using namespace idlat;

TEST_CASE("flaw witness")
{
    IntMatrix const b = flaw_witness();
    CHECK(b == IntMatrix{{6, -8, -5}, {3, -7, -4}, {6, 1, -1}});
    auto const r = dl_identify(b);
    CHECK_FALSE(r.accepted());
    CHECK(r.trace.h == IntMatrix{{9, 6, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(r.trace.adj == IntMatrix{{1, -6, 0}, {0, 9, 0}, {0, 0, 9}});
    CHECK(r.trace.amh_mod_det == IntMatrix(3, 3));
    CHECK(abs(r.trace.det) == 9);
    auto const id = identify(b);
    REQUIRE(id.is_ideal());
    CHECK(class_contains(*id.ring_class, MonicPoly(IntVector{-3, 1, 3})));
}

TEST_CASE("identity hits the same branch")
{
    auto const r = dl_identify(IntMatrix::identity(3));
    CHECK_FALSE(r.accepted());
    CHECK(r.trace.h == IntMatrix::identity(3));
    CHECK(r.trace.adj == IntMatrix::identity(3));
    CHECK(r.trace.amh_mod_det == IntMatrix(3, 3));
}

TEST_CASE("shift matrix and column hnf")
{
    CHECK(shift_matrix(3) == IntMatrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(shift_matrix(1) == IntMatrix{{0}});
    IntMatrix const h = column_hnf(flaw_witness().transposed());
    CHECK(h == IntMatrix{{9, 6, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("accepted answers lie in the ring class")
{
    int accepted = 0, flawed = 0;
    for (std::uint64_t s = 0; s < 400; ++s) {
        std::size_t const n = 2 + s % 5;
        auto const inst = random_principal(n, 1 + s % 6, s);
        auto const dl = dl_identify(inst.b);
        auto const id = identify(inst.b);
        REQUIRE(id.is_ideal());
        if (dl.accepted()) {
            ++accepted;
            CHECK(verify_ring(inst.b, *dl.poly));
            CHECK(class_contains(*id.ring_class, *dl.poly));
        } else {
            ++flawed;
        }
    }
    CHECK(accepted > 0);
    CHECK(flawed > 0);
}

TEST_CASE("accepting implies ideal on random bases")
{
    for (std::uint64_t s = 0; s < 500; ++s) {
        IntMatrix const b = random_basis(2 + s % 3, 3, s);
        auto const dl = dl_identify(b);
        if (dl.accepted()) {
            auto const id = identify(b);
            REQUIRE(id.is_ideal());
            CHECK(class_contains(*id.ring_class, *dl.poly));
        }
    }
}
