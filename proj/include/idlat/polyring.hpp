#pragma once

/* Coefficient embedding and arithmetic in Z[x]/f(x) for monic f.
 *
 * A CoeffVector v of length n stands for v[0] + v[1] x + ... + v[n-1] x^{n-1}
 * (constant term first). A MonicPoly of degree n stores its n non-leading
 * coefficients in the same order; the leading 1 is implicit.
 */

#include "idlat/integer.hpp"
#include "idlat/matrix.hpp"

#include <span>
#include <string>
#include <string_view>

namespace idlat {

using CoeffVector = IntVector;

class MonicPoly {
public:
    MonicPoly() = default;
    /* g(x) = x^n + coeffs[n-1] x^{n-1} + ... + coeffs[0]; n >= 1 */
    explicit MonicPoly(IntVector coeffs);

    std::size_t degree() const noexcept { return coeffs_.size(); }
    IntVector const& coeffs() const noexcept { return coeffs_; }
    Integer const& operator[](std::size_t i) const { return coeffs_[i]; }

    bool operator==(MonicPoly const& other) const = default;

private:
    IntVector coeffs_;
};

/* sigma(x * sigma^{-1}(v) mod f) */
CoeffVector mul_x_mod(std::span<Integer const> v, MonicPoly const& f);

/* sigma(sigma^{-1}(a) * sigma^{-1}(b) mod f) */
CoeffVector poly_mul_mod(std::span<Integer const> a,
                         std::span<Integer const> b, MonicPoly const& f);

/* Rows sigma(x^i g mod f), i = 0..n-1. Throws NotFullRank when g is zero or
 * shares a factor with f over Q. */
IntMatrix principal_ideal_basis(MonicPoly const& f,
                                std::span<Integer const> g);

/* Accepts "[g_1,...,g_n]" or a human form such as "x^3+3x^2+x-3". */
MonicPoly parse_monic_poly(std::string_view text);

/* "[g_1,...,g_n]" integer list; also used for plain coefficient vectors. */
IntVector parse_coeff_list(std::string_view text);

/* Canonical output: "[g_1,g_2,...,g_n]". */
std::string format_coeffs(std::span<Integer const> v);

/* "x^3+3*x^2+x-3" */
std::string format_human(MonicPoly const& f);

} // namespace idlat
