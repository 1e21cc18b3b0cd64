#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idlat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

std::string to_decimal(Integer const& z);

/* Strict decimal parse: optional sign followed by digits. */
std::optional<Integer> parse_decimal(std::string_view text);

/* Floor division remainder, always in [0, |m|). */
inline Integer mod_floor(Integer const& a, Integer const& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer floor_div(Integer const& a, Integer const& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/* Quotient rounded to the nearest integer (ties toward +inf). */
Integer round_div(Integer const& a, Integer const& b);

inline bool divides(Integer const& d, Integer const& a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer exact_div(Integer const& a, Integer const& b)
{
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/* dst += k * src */
inline void addmul(Integer& dst, Integer const& k, Integer const& src)
{
    mpz_addmul(dst.get_mpz_t(), k.get_mpz_t(), src.get_mpz_t());
}

/* dst -= k * src */
inline void submul(Integer& dst, Integer const& k, Integer const& src)
{
    mpz_submul(dst.get_mpz_t(), k.get_mpz_t(), src.get_mpz_t());
}

/* sign of |a| - |b| */
inline int cmpabs(Integer const& a, Integer const& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline int cmpabs(Integer const& a, unsigned long b)
{
    return mpz_cmpabs_ui(a.get_mpz_t(), b);
}

bool is_zero(IntVector const& v);

} // namespace idlat
