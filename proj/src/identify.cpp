#include "idlat/identify.hpp"
#include "idlat/errors.hpp"
#include "idlat/linalg.hpp"
#include "idlat/random.hpp"

#include <set>

namespace idlat {

IntMatrix shifted_rows(IntMatrix const& d_block)
{
    std::size_t const m = d_block.rows();
    IntMatrix out(m, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out(i, j + 1) = d_block(i, j);
    return out;
}

IdentifyResult identify(IntMatrix const& b, IdentifyOptions opts)
{
    if (!b.is_square() || b.rows() == 0)
        throw DimensionMismatch("identify: basis must be square and "
                                "non-empty");
    std::size_t const n = b.rows();

    std::optional<IntMatrix> h;
    if (opts.precheck) {
        h = hnf(b);
        if (!divisibility_precheck(*h))
            return {std::nullopt, Rejection::precheck};
    }

    IhnfResult const ih = ihnf(b);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!divides(ih.d, b(i, j)))
                return {std::nullopt, Rejection::d_divides_b};

    if (!h)
        h = hnf(b);

    /* (0 | D) * B^{-1} integral, tested against the HNF basis of the same
     * lattice */
    SmithMassager const sm = smith_massager_from_hnf(*h);
    if (!integral_rows_check(shifted_rows(ih.d_block), sm))
        return {std::nullopt, Rejection::shift_rows};

    RingClass rc;
    rc.n = n;
    rc.d = ih.d;
    rc.offset.assign(n, Integer(0));
    for (std::size_t j = 0; j + 1 < n; ++j)
        rc.offset[j + 1] = ih.b_prime[j];
    rc.coset_basis = divexact(*h, ih.d);
    rc.canonical_g = canonical_rep(rc.d, rc.offset, rc.coset_basis);
    return {std::move(rc), Rejection::none};
}

bool verify_ring(IntMatrix const& b, MonicPoly const& g)
{
    if (!b.is_square() || b.rows() != g.degree())
        throw DimensionMismatch("verify_ring: degree of g differs from "
                                "lattice dimension");
    std::size_t const n = b.rows();
    IntMatrix images(n, n);
    for (std::size_t i = 0; i < n; ++i)
        images.set_row(i, mul_x_mod(b.row(i), g));
    return integral_rows_check(images, b);
}

bool class_contains(RingClass const& rc, MonicPoly const& g)
{
    if (g.degree() != rc.n)
        return false;
    IntVector diff = g.coeffs();
    for (std::size_t i = 0; i < rc.n; ++i)
        diff[i] -= rc.canonical_g[i];
    return in_lattice(diff, rc.coset_basis);
}

MonicPoly canonical_rep(Integer const& d, std::span<Integer const> offset,
                        IntMatrix const& coset_basis)
{
    std::size_t const n = offset.size();
    if (coset_basis.rows() != n || !coset_basis.is_square())
        throw DimensionMismatch("canonical_rep: coset basis does not match "
                                "offset length");
    IntVector w(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!divides(d, offset[i]))
            throw InternalError("canonical_rep: offset/d is not integral");
        w[i] = exact_div(offset[i], d);
    }
    IntMatrix const h = is_hnf(coset_basis) ? coset_basis : hnf(coset_basis);
    for (std::size_t j = n; j-- > 0;) {
        Integer const q = floor_div(w[j], h(j, j));
        if (sgn(q) == 0)
            continue;
        for (std::size_t l = 0; l <= j; ++l)
            submul(w[l], q, h(j, l));
    }
    return MonicPoly(std::move(w));
}

std::vector<MonicPoly> sample_class(RingClass const& rc, std::size_t k,
                                    std::uint64_t seed)
{
    std::size_t const n = rc.n;
    std::vector<MonicPoly> out;
    if (k == 0)
        throw std::invalid_argument("sample_class: k must be at least 1");
    out.reserve(k);
    out.push_back(rc.canonical_g);

    /* smallest radius whose box holds at least 2k vectors */
    std::int64_t radius = 1;
    for (;;) {
        double boxes = 1;
        for (std::size_t i = 0; i < n && boxes < 2.0 * double(k); ++i)
            boxes *= double(2 * radius + 1);
        if (boxes >= 2.0 * double(k))
            break;
        ++radius;
    }

    Xoshiro256ss rng(seed);
    std::set<std::vector<std::int64_t>> seen;
    seen.insert(std::vector<std::int64_t>(n, 0));
    std::vector<std::int64_t> z(n);
    while (out.size() < k) {
        for (auto& zi : z)
            zi = rng.uniform(-radius, radius);
        if (!seen.insert(z).second)
            continue;
        IntVector g = rc.canonical_g.coeffs();
        for (std::size_t i = 0; i < n; ++i) {
            if (z[i] == 0)
                continue;
            Integer const zi(static_cast<long>(z[i]));
            auto row = rc.coset_basis.row(i);
            for (std::size_t j = 0; j < n; ++j)
                addmul(g[j], zi, row[j]);
        }
        out.emplace_back(std::move(g));
    }
    return out;
}

bool same_class(RingClass const& a, RingClass const& b)
{
    if (a.n != b.n || a.d != b.d)
        return false;
    if (hnf(a.coset_basis) != hnf(b.coset_basis))
        return false;
    return class_contains(a, b.canonical_g) && class_contains(b, a.canonical_g);
}

namespace {

nlohmann::ordered_json vector_json(std::span<Integer const> v)
{
    auto arr = nlohmann::ordered_json::array();
    for (auto const& x : v)
        arr.push_back(to_decimal(x));
    return arr;
}

Integer integer_from_json(nlohmann::json const& j, char const* what)
{
    if (j.is_string()) {
        if (auto z = parse_decimal(j.get<std::string>()))
            return *z;
    } else if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<long long>()));
    }
    throw ParseError(std::string("invalid integer in ") + what, 0, 0);
}

} // namespace

nlohmann::ordered_json to_json(RingClass const& rc)
{
    nlohmann::ordered_json j;
    j["ideal"] = true;
    j["d"] = to_decimal(rc.d);
    j["canonical_g"] = vector_json(rc.canonical_g.coeffs());
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rc.coset_basis.rows(); ++i)
        rows.push_back(vector_json(rc.coset_basis.row(i)));
    j["coset_basis"] = std::move(rows);
    return j;
}

nlohmann::ordered_json to_json(IdentifyResult const& r)
{
    if (r.ring_class)
        return to_json(*r.ring_class);
    nlohmann::ordered_json j;
    j["ideal"] = false;
    return j;
}

RingClass ring_class_from_json(nlohmann::json const& j)
{
    if (!j.is_object() || !j.contains("ideal") || !j["ideal"].is_boolean())
        throw ParseError("class JSON: missing boolean \"ideal\"", 0, 0);
    if (!j["ideal"].get<bool>())
        throw ParseError("class JSON describes a non-ideal lattice", 0, 0);
    for (char const* key : {"d", "canonical_g", "coset_basis"})
        if (!j.contains(key))
            throw ParseError(std::string("class JSON: missing \"") + key
                                 + "\"", 0, 0);

    RingClass rc;
    rc.d = integer_from_json(j["d"], "d");
    if (sgn(rc.d) <= 0)
        throw ParseError("class JSON: d must be positive", 0, 0);
    auto const& cg = j["canonical_g"];
    if (!cg.is_array() || cg.empty())
        throw ParseError("class JSON: canonical_g must be a non-empty array",
                         0, 0);
    IntVector g;
    for (auto const& x : cg)
        g.push_back(integer_from_json(x, "canonical_g"));
    rc.n = g.size();
    rc.canonical_g = MonicPoly(g);

    auto const& cb = j["coset_basis"];
    if (!cb.is_array() || cb.size() != rc.n)
        throw ParseError("class JSON: coset_basis must have n rows", 0, 0);
    rc.coset_basis = IntMatrix(rc.n, rc.n);
    for (std::size_t i = 0; i < rc.n; ++i) {
        if (!cb[i].is_array() || cb[i].size() != rc.n)
            throw ParseError("class JSON: coset_basis row " + std::to_string(i)
                                 + " must have n entries", 0, 0);
        for (std::size_t k = 0; k < rc.n; ++k)
            rc.coset_basis(i, k) = integer_from_json(cb[i][k], "coset_basis");
    }
    if (!is_nonsingular(rc.coset_basis))
        throw ParseError("class JSON: coset_basis is singular", 0, 0);

    /* offset is only defined modulo L(B); d*canonical_g represents it */
    rc.offset = g;
    for (auto& x : rc.offset)
        x *= rc.d;
    return rc;
}

} // namespace idlat
