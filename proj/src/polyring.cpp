#include "idlat/polyring.hpp"
#include "idlat/errors.hpp"
#include "idlat/linalg.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace idlat {

MonicPoly::MonicPoly(IntVector coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw DimensionMismatch("monic polynomial must have degree >= 1");
}

CoeffVector mul_x_mod(std::span<Integer const> v, MonicPoly const& f)
{
    std::size_t const n = f.degree();
    if (v.size() != n)
        throw DimensionMismatch("mul_x_mod: vector length differs from "
                                "degree of f");
    /* x*v = shift(v) + top*x^n and x^n == -(f - x^n) */
    Integer const& top = v[n - 1];
    CoeffVector out(n);
    out[0] = -top * f[0];
    for (std::size_t i = 1; i < n; ++i) {
        out[i] = v[i - 1];
        submul(out[i], top, f[i]);
    }
    return out;
}

CoeffVector poly_mul_mod(std::span<Integer const> a,
                         std::span<Integer const> b, MonicPoly const& f)
{
    std::size_t const n = f.degree();
    if (a.size() != n || b.size() != n)
        throw DimensionMismatch("poly_mul_mod: operand length differs from "
                                "degree of f");
    /* Horner in a: acc = (((a_{n-1} b) x + a_{n-2} b) x + ...) */
    CoeffVector acc(n);
    for (std::size_t i = n; i-- > 0;) {
        acc = mul_x_mod(acc, f);
        if (sgn(a[i]) != 0)
            for (std::size_t k = 0; k < n; ++k)
                addmul(acc[k], a[i], b[k]);
    }
    return acc;
}

IntMatrix principal_ideal_basis(MonicPoly const& f, std::span<Integer const> g)
{
    std::size_t const n = f.degree();
    if (g.size() != n)
        throw DimensionMismatch("principal_ideal_basis: generator length "
                                "differs from degree of f");
    IntVector cur(g.begin(), g.end());
    if (is_zero(cur))
        throw NotFullRank("zero generator does not generate a full-rank "
                          "lattice");
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        b.set_row(i, cur);
        if (i + 1 < n)
            cur = mul_x_mod(cur, f);
    }
    if (!is_nonsingular(b))
        throw NotFullRank("does not generate a full-rank lattice");
    return b;
}

namespace {

[[noreturn]] void poly_error(std::string const& msg, std::size_t col)
{
    throw ParseError(msg, 1, col);
}

std::size_t skip_ws(std::string_view s, std::size_t i)
{
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    return i;
}

} // namespace

IntVector parse_coeff_list(std::string_view text)
{
    std::size_t i = skip_ws(text, 0);
    if (i >= text.size() || text[i] != '[')
        poly_error("expected '['", i + 1);
    ++i;
    IntVector out;
    i = skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            i = skip_ws(text, i);
            std::size_t const start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                ++i;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            auto z = parse_decimal(text.substr(start, i - start));
            if (!z)
                poly_error("expected an integer", start + 1);
            out.push_back(std::move(*z));
            i = skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            poly_error("expected ',' or ']'", i + 1);
        }
    }
    i = skip_ws(text, i);
    if (i != text.size())
        poly_error("trailing characters", i + 1);
    return out;
}

MonicPoly parse_monic_poly(std::string_view text)
{
    std::size_t i = skip_ws(text, 0);
    if (i < text.size() && text[i] == '[') {
        IntVector c = parse_coeff_list(text);
        if (c.empty())
            poly_error("polynomial needs at least one coefficient", i + 1);
        return MonicPoly(std::move(c));
    }

    /* monomials c, x, c*x^k, cx^k, x^k joined by + / -; whitespace ignored */
    std::string s;
    std::vector<std::size_t> colmap;
    for (std::size_t k = 0; k < text.size(); ++k)
        if (!std::isspace(static_cast<unsigned char>(text[k]))) {
            s.push_back(text[k]);
            colmap.push_back(k + 1);
        }
    auto col = [&](std::size_t k) {
        return k < colmap.size() ? colmap[k] : text.size() + 1;
    };
    if (s.empty())
        poly_error("empty polynomial", 1);

    std::map<std::size_t, Integer> terms;
    std::size_t k = 0;
    while (k < s.size()) {
        std::size_t const term_start = k;
        int sign = 1;
        if (s[k] == '+' || s[k] == '-') {
            sign = s[k] == '-' ? -1 : 1;
            ++k;
        } else if (term_start != 0) {
            poly_error("expected '+' or '-'", col(k));
        }
        Integer coeff = 1;
        bool have_coeff = false;
        std::size_t const num_start = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
            ++k;
        if (k > num_start) {
            coeff = Integer(s.substr(num_start, k - num_start));
            have_coeff = true;
        }
        std::size_t degree = 0;
        if (k < s.size() && s[k] == '*') {
            if (!have_coeff)
                poly_error("'*' without a coefficient", col(k));
            ++k;
            if (k >= s.size() || s[k] != 'x')
                poly_error("expected 'x' after '*'", col(k));
        }
        if (k < s.size() && s[k] == 'x') {
            ++k;
            degree = 1;
            if (k < s.size() && s[k] == '^') {
                ++k;
                std::size_t const e0 = k;
                while (k < s.size() &&
                       std::isdigit(static_cast<unsigned char>(s[k])))
                    ++k;
                if (k == e0)
                    poly_error("expected an exponent after '^'", col(k));
                if (k - e0 > 6)
                    poly_error("exponent too large", col(e0));
                degree = std::stoul(s.substr(e0, k - e0));
            }
        } else if (!have_coeff) {
            poly_error("expected a monomial", col(k));
        }
        terms[degree] += sign * coeff;
    }

    if (terms.empty())
        poly_error("empty polynomial", 1);
    std::size_t const n = terms.rbegin()->first;
    if (n == 0)
        poly_error("polynomial must have degree >= 1", 1);
    if (terms.rbegin()->second != 1)
        poly_error("leading coefficient must be 1", 1);
    IntVector c(n);
    for (auto const& [deg, v] : terms)
        if (deg < n)
            c[deg] = v;
    return MonicPoly(std::move(c));
}

std::string format_coeffs(std::span<Integer const> v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += to_decimal(v[i]);
    }
    out += ']';
    return out;
}

std::string format_human(MonicPoly const& f)
{
    std::size_t const n = f.degree();
    std::ostringstream os;
    os << "x";
    if (n > 1)
        os << '^' << n;
    for (std::size_t i = n; i-- > 0;) {
        Integer const& c = f[i];
        if (sgn(c) == 0)
            continue;
        os << (sgn(c) < 0 ? '-' : '+');
        Integer const a = abs(c);
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << '*';
        os << 'x';
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

} // namespace idlat
