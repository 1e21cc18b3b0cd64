#include "idlat/integer.hpp"

#include <cctype>

namespace idlat {

std::string to_decimal(Integer const& z)
{
    return z.get_str(10);
}

std::optional<Integer> parse_decimal(std::string_view text)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        return std::nullopt;
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            return std::nullopt;
    /* mpz_set_str rejects a leading '+' */
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    Integer z;
    if (z.set_str(digits, 10) != 0)
        return std::nullopt;
    return z;
}

Integer round_div(Integer const& a, Integer const& b)
{
    /* floor((2a + b) / 2b) for b > 0, mirrored for b < 0 */
    Integer num = 2 * a + b;
    Integer den = 2 * b;
    return floor_div(num, den);
}

bool is_zero(IntVector const& v)
{
    for (auto const& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

} // namespace idlat
