#include "idlat/matrix_io.hpp"
#include "idlat/errors.hpp"
#include "idlat/integer.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace idlat {

std::string format_matrix(IntMatrix const& m)
{
    std::string out = std::to_string(m.rows()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ' ';
            out += to_decimal(m(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t const nl = text.find('\n', start);
        std::size_t const end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
    /* one trailing newline (or several) is fine */
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    return lines;
}

} // namespace

IntMatrix parse_matrix_text(std::string_view text)
{
    auto const lines = split_lines(text);
    if (lines.empty())
        throw ParseError("empty matrix file", 1, 1);

    std::size_t n = 0;
    {
        std::string_view const first = lines[0];
        if (first.empty())
            throw ParseError("expected dimension n", 1, 1);
        for (std::size_t c = 0; c < first.size(); ++c)
            if (first[c] < '0' || first[c] > '9')
                throw ParseError("dimension must be a positive decimal integer",
                                 1, c + 1);
        if (first.size() > 9)
            throw ParseError("dimension too large", 1, 1);
        n = std::stoul(std::string(first));
        if (n == 0)
            throw ParseError("dimension must be positive", 1, 1);
    }
    if (lines.size() != n + 1)
        throw ParseError("expected " + std::to_string(n) + " rows, found "
                             + std::to_string(lines.size() - 1),
                         lines.size() < n + 1 ? lines.size() + 1 : n + 2, 1);

    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string_view const line = lines[i + 1];
        std::size_t const lineno = i + 2;
        std::size_t pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) {
                if (pos >= line.size())
                    throw ParseError("expected " + std::to_string(n)
                                         + " entries", lineno, pos + 1);
                if (line[pos] != ' ')
                    throw ParseError("expected a single space", lineno,
                                     pos + 1);
                ++pos;
            }
            std::size_t const start = pos;
            while (pos < line.size() && line[pos] != ' ')
                ++pos;
            auto z = parse_decimal(line.substr(start, pos - start));
            if (!z)
                throw ParseError("expected a decimal integer", lineno,
                                 start + 1);
            m(i, j) = std::move(*z);
        }
        if (pos != line.size())
            throw ParseError("expected " + std::to_string(n) + " entries",
                             lineno, pos + 1);
    }
    return m;
}

nlohmann::ordered_json matrix_to_json(IntMatrix const& m)
{
    nlohmann::ordered_json j;
    j["n"] = m.rows();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            r.push_back(to_decimal(m(i, k)));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

IntMatrix matrix_from_json(nlohmann::json const& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError("matrix JSON: missing non-negative integer \"n\"", 0,
                         0);
    std::size_t const n = j["n"].get<std::size_t>();
    if (n == 0)
        throw ParseError("matrix JSON: n must be positive", 0, 0);
    auto const& rows = j.contains("rows") ? j["rows"] : nlohmann::json();
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("matrix JSON: \"rows\" must hold n rows", 0, 0);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw ParseError("matrix JSON: row " + std::to_string(i + 1)
                                 + " must hold n entries", 0, 0);
        for (std::size_t k = 0; k < n; ++k) {
            auto const& e = rows[i][k];
            std::optional<Integer> z;
            if (e.is_string())
                z = parse_decimal(e.get<std::string>());
            else if (e.is_number_integer())
                z = Integer(std::to_string(e.get<long long>()));
            if (!z)
                throw ParseError("matrix JSON: entry (" + std::to_string(i + 1)
                                     + "," + std::to_string(k + 1)
                                     + ") is not an integer", 0, 0);
            m(i, k) = std::move(*z);
        }
    }
    return m;
}

IntMatrix parse_matrix(std::string_view text)
{
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' ||
                               text[i] == '\t' || text[i] == '\r'))
        ++i;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (nlohmann::json::parse_error const& e) {
            throw ParseError(std::string("matrix JSON: ") + e.what(), 0, 0);
        }
        return matrix_from_json(j);
    }
    return parse_matrix_text(text);
}

IntMatrix read_matrix_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path, 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

} // namespace idlat
