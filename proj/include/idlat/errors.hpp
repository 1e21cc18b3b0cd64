#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idlat {

/* Basis matrix is singular (or has no full rank). */
class NotFullRank : public std::domain_error {
public:
    explicit NotFullRank(std::string const& what = "not full rank")
        : std::domain_error(what) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(std::string const& what)
        : std::invalid_argument(what) {}
};

class GcdUndefined : public std::domain_error {
public:
    GcdUndefined() : std::domain_error("gcd undefined") {}
};

/* Malformed matrix, polynomial or JSON text. line/column are 1-based, 0
 * when unknown. */
class ParseError : public std::runtime_error {
public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : std::runtime_error(format(msg, line, column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::string const& msg, std::size_t line,
                              std::size_t column)
    {
        if (line == 0)
            return msg;
        return "line " + std::to_string(line) + ", column "
             + std::to_string(column) + ": " + msg;
    }

    std::size_t line_;
    std::size_t column_;
};

/* Broken internal invariant; always a bug in this library. */
class InternalError : public std::logic_error {
public:
    explicit InternalError(std::string const& what)
        : std::logic_error(what) {}
};

} // namespace idlat
