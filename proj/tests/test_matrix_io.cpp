#include "idlat/errors.hpp"
#include "idlat/matrix_io.hpp"

#include <doctest.h>

#include <string>

using namespace idlat;

TEST_CASE("text format round trip")
{
    IntMatrix const b{{6, -8, -5}, {3, -7, -4}, {6, 1, -1}};
    std::string const text = "3\n6 -8 -5\n3 -7 -4\n6 1 -1\n";
    CHECK(format_matrix(b) == text);
    CHECK(parse_matrix_text(text) == b);
    CHECK(parse_matrix("3\r\n6 -8 -5\r\n3 -7 -4\r\n6 1 -1") == b);
    IntMatrix big(1, 1);
    big(0, 0) = Integer("-123456789012345678901234567890");
    CHECK(parse_matrix(format_matrix(big)) == big);
}

TEST_CASE("text format errors carry line and column")
{
    auto expect_at = [](std::string const& text, std::string const& loc) {
        try {
            parse_matrix_text(text);
            FAIL("expected a parse error for: " << text);
        } catch (ParseError const& e) {
            CHECK(std::string(e.what()).find(loc) != std::string::npos);
        }
    };
    expect_at("2\n1 0\n0 x\n", "line 3, column 3");
    expect_at("2\n1  0\n0 1\n", "line 2");
    expect_at("2\n1 0\n", "line 3");
    expect_at("2\n1 0 0\n0 1\n", "line 2");
    expect_at("two\n", "line 1, column 1");
    expect_at("2\n1 0\n0 1\n5 5\n", "line 4");
}

TEST_CASE("json format")
{
    IntMatrix const b{{2, 0}, {1, 3}};
    auto const j = matrix_to_json(b);
    CHECK(j.dump() == R"({"n":2,"rows":[["2","0"],["1","3"]]})");
    CHECK(matrix_from_json(j) == b);
    CHECK(parse_matrix(R"({"n": 2, "rows": [[2, 0], ["1", "3"]]})") == b);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "rows": [[2, 0]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "rows": [["1.5"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "rows": )"), ParseError);
}
