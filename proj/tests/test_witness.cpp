#include <doctest.h>

#include "pctk/demazure.hpp"
#include "pctk/format.hpp"
#include "pctk/witness.hpp"

using namespace pctk;

TEST_CASE("carrel sorting") {
    CHECK(carrel_sorted(parse_rtuple("8,3;9;4,2;5,1;7,6")) ==
          parse_rtuple("3,8;9;2,4;1,5;6,7"));
}

TEST_CASE("witness for the three-cycle") {
    Partition p(3, {2, 1, 0});
    RTuple pi = parse_rtuple("3;1;2");
    Witness w = convexity_witness(pi, p);
    CHECK(w.h == 2);
    CHECK(w.g == 1);
    CHECK(w.a == 1);
    CHECK(w.b == 2);
    CHECK(w.c == 3);
    CHECK(w.d == 2);
    CHECK(w.chi == pi);
    CHECK(w.omega == parse_rtuple("1;3;2"));
    CHECK(w.upper == Tableau(p, {{1, 3}, {3}}));
    CHECK(w.lower == Tableau(p, {{1, 3}, {1}}));
    CHECK(w.interior == Tableau(p, {{1, 3}, {2}}));
    REQUIRE(w.cells.size() == 1);
    CHECK(w.cells[0] == std::pair<int, int>(2, 1));
    CHECK(w.ratio == Rational(1, 2));

    CHECK(is_demazure_member(w.lower, pi));
    CHECK(is_demazure_member(w.upper, pi));
    CHECK_FALSE(is_demazure_member(w.interior, pi));
}

TEST_CASE("witness for the nine-entry reference permutation") {
    Partition p(9, {4, 4, 3, 2, 2, 1, 1, 0, 0});
    RTuple pi = parse_rtuple("4,8;9;2,3;1,5;6,7");
    Witness w = convexity_witness(pi, p);
    CHECK(w.h == 3);
    CHECK(w.b == 5);
    CHECK(w.a == 2);
    CHECK(w.g == 1);
    CHECK(w.c == 7);
    CHECK(w.d == 1);
    CHECK(w.chi == parse_rtuple("3,8;9;2,4;1,5;6,7"));
    CHECK(w.omega == parse_rtuple("3,4;9;2,8;1,5;6,7"));
    CHECK(w.ratio == Rational(1, 4));
    REQUIRE(w.cells.size() == 2);
    CHECK(w.cells[0] == std::pair<int, int>(3, 2));
    CHECK(w.cells[1] == std::pair<int, int>(4, 2));
    // marked cells hold the top value of the pattern in the upper key and the
    // middle value in the interior point
    for (auto [col, row] : w.cells) {
        CHECK(w.upper.value(col, row) == 8);
        CHECK(w.interior.value(col, row) == 5);
    }
    CHECK(w.upper.column(3) == std::vector<int>{3, 8, 9});
    CHECK(w.upper.column(4) == std::vector<int>{3, 8});
    CHECK(is_semistandard(w.interior));
    CHECK(tableau_leq(w.lower, w.upper));
}

TEST_CASE("witness construction refuses avoiding input") {
    Partition p(3, {2, 1, 0});
    CHECK_THROWS_AS(convexity_witness(parse_rtuple("1;2;3"), p), input_error);
    CHECK_THROWS_AS(convexity_witness(parse_rtuple("2;1;3"), p), input_error);
}
