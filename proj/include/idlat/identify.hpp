#pragma once

/* Deciding whether a full-rank integer lattice is a coefficient-embedding
 * ideal lattice, and describing every monic quotient ring it embeds into.
 *
 * Write an incomplete HNF of B as B' = ((D | 0), (b' | d)). The lattice is
 * an ideal lattice iff every shifted row (0 | D_i) lies in L(B). When it
 * is, L(B) is an ideal of Z[x]/g(x) for exactly those monic g of degree n
 * whose coefficient vector lies in the coset
 *
 *     (1/d) * ((0 | b') + L(B))  =  (0 | b')/d + L(B/d),
 *
 * since x * sigma^{-1}(b'_n) mod g = (0 | b') - d * g must be a lattice
 * vector. Every entry of L(B) is divisible by d in that case, so the
 * coset consists of integer vectors.
 */

#include "idlat/integer.hpp"
#include "idlat/matrix.hpp"
#include "idlat/polyring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace idlat {

struct RingClass {
    std::size_t n = 0;
    Integer d;
    IntVector offset;      // (0 | b'), defined modulo L(B)
    IntMatrix coset_basis; // HNF basis of L(B/d)
    MonicPoly canonical_g;

    bool operator==(RingClass const&) const = default;
};

struct IdentifyOptions {
    /* reject early when the HNF violates h_ii | h_jl (l <= j <= i) */
    bool precheck = true;
};

/* Which check rejected the input; NotIdeal results only. */
enum class Rejection {
    none,
    precheck,      // HNF divisibility
    d_divides_b,   // d does not divide every entry of B
    shift_rows,    // some (0 | D_i) is outside L(B)
};

struct IdentifyResult {
    std::optional<RingClass> ring_class;
    Rejection rejected_by = Rejection::none;

    bool is_ideal() const noexcept { return ring_class.has_value(); }
};

IdentifyResult identify(IntMatrix const& b, IdentifyOptions opts = {});

/* Definition-level oracle: sigma(x sigma^{-1}(b_i) mod g) in L(b) for
 * every row b_i. */
bool verify_ring(IntMatrix const& b, MonicPoly const& g);

bool class_contains(RingClass const& rc, MonicPoly const& g);

/* The coset member offset/d reduced against the HNF of coset_basis, last
 * coordinate first, each coordinate into [0, h_jj). Throws InternalError
 * if offset/d is not integral. */
MonicPoly canonical_rep(Integer const& d, std::span<Integer const> offset,
                        IntMatrix const& coset_basis);

/* k distinct members canonical_g + z*coset_basis; z = 0 comes first. */
std::vector<MonicPoly> sample_class(RingClass const& rc, std::size_t k,
                                    std::uint64_t seed);

/* Same set of rings: equal d, equal coset HNF, and mutual membership of
 * the canonical representatives. */
bool same_class(RingClass const& a, RingClass const& b);

/* The shifted rows (0 | D_i) of an incomplete HNF, as an (n-1) x n
 * matrix. */
IntMatrix shifted_rows(IntMatrix const& d_block);

/* {"ideal": true, "d": "...", "canonical_g": [...], "coset_basis": [[...]]}
 * All integers are decimal strings. */
nlohmann::ordered_json to_json(IdentifyResult const& r);
nlohmann::ordered_json to_json(RingClass const& rc);
RingClass ring_class_from_json(nlohmann::json const& j);

} // namespace idlat
