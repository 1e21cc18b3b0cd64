#pragma once

/* Matrix text format:
 *
 *     n
 *     a11 a12 ... a1n
 *     ...
 *     an1 an2 ... ann
 *
 * decimal integers separated by single spaces, one row per line. An
 * alternative JSON form is {"n": n, "rows": [["a11", ...], ...]} with
 * entries as decimal strings (plain JSON integers are accepted on input).
 */

#include "idlat/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace idlat {

/* Text form; trailing newline after every row. */
std::string format_matrix(IntMatrix const& m);

/* Parses the text form. Tolerates a trailing newline and '\r'; anything
 * else off-format raises ParseError naming line and column. */
IntMatrix parse_matrix_text(std::string_view text);

nlohmann::ordered_json matrix_to_json(IntMatrix const& m);
IntMatrix matrix_from_json(nlohmann::json const& j);

/* Detects the JSON form by a leading '{'. */
IntMatrix parse_matrix(std::string_view text);

IntMatrix read_matrix_file(std::string const& path);

} // namespace idlat
