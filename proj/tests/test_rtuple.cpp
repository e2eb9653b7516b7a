#include <doctest.h>

#include "pctk/format.hpp"
#include "pctk/rtuple.hpp"

using namespace pctk;

namespace {
RTuple tup(const std::string& s) { return parse_rtuple(s); }
}

TEST_CASE("divider set basics") {
    RSet rs(9, {3, 8});
    CHECK(rs.r() == 2);
    CHECK(rs.q(0) == 0);
    CHECK(rs.q(1) == 3);
    CHECK(rs.q(2) == 8);
    CHECK(rs.q(3) == 9);
    CHECK(rs.p(1) == 3);
    CHECK(rs.p(2) == 5);
    CHECK(rs.p(3) == 1);
    CHECK(rs.carrel_of(1) == 1);
    CHECK(rs.carrel_of(4) == 2);
    CHECK(rs.carrel_of(9) == 3);
    CHECK_FALSE(rs.is_full());
    CHECK(RSet::full(3).is_full());
    CHECK(RSet::empty(5).r() == 0);
    CHECK_THROWS_AS(RSet(4, {5}), input_error);
    CHECK_THROWS_AS(RSet(4, {2, 2}), input_error);
    CHECK_THROWS_AS(RSet(4, {0}), input_error);
}

TEST_CASE("classification of the reference nine-entry tuples") {
    RTuple a = tup("2,6,7;4,5,7,8,9;9");
    CHECK(is_r_increasing(a));
    CHECK(is_upper(a));
    RTuple b = tup("3,5,5;6,4,7,8,9;9");
    CHECK_FALSE(is_r_increasing(b));

    CHECK(is_gapless(tup("2,4,6;4,5,6,7,9;9")));
    CHECK_FALSE(is_gapless(tup("2,4,6;4,6,7,8,9;9")));

    RTuple good = tup("2,3,6;1,4,5,8,9;7");
    RTuple bad = tup("2,4,6;1,3,7,8,9;5");
    CHECK(is_r_permutation(good));
    CHECK(is_r_permutation(bad));
    CHECK(is_r312_avoiding(good));
    CHECK_FALSE(is_r312_avoiding(bad));
}

TEST_CASE("rank map reference values") {
    CHECK(rank_tuple(tup("2,4,6;1,5,7,8,9;3")) == tup("2,4,6;5,6,7,8,9;9"));
    CHECK(rank_tuple(tup("2,4,6;3,5,7,8,9;1")) == tup("2,4,6;5,6,7,8,9;9"));
}

TEST_CASE("gapless inverse reference values") {
    CHECK(gapless_to_perm(tup("2,4,6;4,5,6,7,9;9")) == tup("2,4,6;1,3,5,7,9;8"));
    CHECK(gapless_to_perm(tup("1;3;3")) == tup("1;3;2"));
    CHECK(gapless_to_perm(tup("2;2;3")) == tup("2;1;3"));
    CHECK_THROWS_AS(gapless_to_perm(tup("3;2,4;4")), input_error);
}

TEST_CASE("rank and inverse cancel on the reference avoiding tuple") {
    RTuple pi = tup("2,3,6;1,4,5,8,9;7");
    RTuple psi = rank_tuple(pi);
    CHECK(is_gapless(psi));
    CHECK(gapless_to_perm(psi) == pi);
}

TEST_CASE("upper and flag predicates") {
    RSet rs(4, {1, 3});
    CHECK(is_upper(RTuple(rs, {3, 2, 4, 4})));
    CHECK_FALSE(is_upper(RTuple(rs, {1, 1, 3, 4})));
    CHECK(is_flag(RTuple(rs, {1, 2, 2, 4})));
    CHECK_FALSE(is_flag(RTuple(rs, {2, 1, 3, 4})));
}

TEST_CASE("a gapless-looking tuple that fails the catch-up rule") {
    // drop 3 -> 2 across the first divider needs 2,3 opening the next carrel
    RTuple g = tup("3;2,4;4");
    CHECK(is_r_increasing(g));
    CHECK(is_upper(g));
    CHECK_FALSE(is_gapless(g));
}

TEST_CASE("avoidance test rejects malformed input") {
    RSet rs(3, {2});
    CHECK_THROWS_AS(is_r312_avoiding(RTuple(rs, {1, 1, 2})), input_error);
    CHECK_THROWS_AS(is_r312_avoiding(RTuple(rs, {2, 1, 3})), input_error);
}

TEST_CASE("identity tuple") {
    RTuple id = identity_rtuple(RSet(5, {2}));
    CHECK(id.entries() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(is_r_permutation(id));
    CHECK(is_r312_avoiding(id));
}
