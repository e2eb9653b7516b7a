#include <doctest.h>

#include "pctk/chain.hpp"
#include "pctk/format.hpp"

using namespace pctk;

TEST_CASE("clump decomposition") {
    auto clumps = clump_decompose({2, 3, 5, 6, 7, 10, 13, 14});
    REQUIRE(clumps.size() == 4);
    CHECK(clumps[0] == std::vector<int>{2, 3});
    CHECK(clumps[1] == std::vector<int>{5, 6, 7});
    CHECK(clumps[2] == std::vector<int>{10});
    CHECK(clumps[3] == std::vector<int>{13, 14});
    CHECK(clump_decompose({}).empty());
}

TEST_CASE("chain of the reference avoiding tuple") {
    RTuple pi = parse_rtuple("2,3,6;1,4,5,8,9;7");
    RChain c = chain_of_perm(pi);
    CHECK(c.block(0).empty());
    CHECK(c.block(1) == std::vector<int>{2, 3, 6});
    CHECK(c.block(2) == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 9});
    CHECK(c.block(3) == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(perm_of_chain(c) == pi);
    CHECK(is_rcd_chain(c));
}

TEST_CASE("chain of the reference containing tuple is not clump deleting") {
    RTuple pi = parse_rtuple("2,4,6;1,3,7,8,9;5");
    CHECK_FALSE(is_rcd_chain(chain_of_perm(pi)));
}

TEST_CASE("a fourteen-element clump deleting chain") {
    RSet rs(14, {3, 5, 10});
    std::vector<int> full(14);
    for (int i = 0; i < 14; ++i) full[i] = i + 1;
    RChain c(rs, {{},
                  {1, 2, 6},
                  {1, 2, 5, 6, 8},
                  {1, 2, 4, 5, 6, 7, 8, 10, 13, 14},
                  full});
    CHECK(is_rcd_chain(c));
}

TEST_CASE("the three-cycle chain fails the deletion rule") {
    RTuple pi = parse_rtuple("3;1;2");
    RChain c = chain_of_perm(pi);
    CHECK(c.block(1) == std::vector<int>{3});
    CHECK(c.block(2) == std::vector<int>{1, 3});
    CHECK_FALSE(is_rcd_chain(c));
}

TEST_CASE("single deletion steps") {
    CHECK(rcd_step_ok({1, 2, 6}, {1, 2, 5, 6, 8}));     // removes 5 and 8
    CHECK_FALSE(rcd_step_ok({3}, {1, 3}));              // removes 1, keeps 3 above
    CHECK(rcd_step_ok({}, {4, 5}));
    CHECK(rcd_step_ok({4, 5}, {4, 5}));
}

TEST_CASE("chain construction validates its blocks") {
    RSet rs(3, {1});
    CHECK_THROWS_AS(RChain(rs, {{}, {1, 2}, {1, 2, 3}}), input_error);
    CHECK_THROWS_AS(RChain(rs, {{}, {2}, {1, 3}}), input_error);
    CHECK_THROWS_AS(RChain(rs, {{}, {1, 2, 3}}), input_error);
}

TEST_CASE("interval criteria agree with the clump rule") {
    RTuple good = parse_rtuple("2,3,6;1,4,5,8,9;7");
    RChain c = chain_of_perm(good);
    for (int part = 1; part <= 3; ++part) CHECK(rcd_by_interval(c, part));
    RChain bad = chain_of_perm(parse_rtuple("2,4,6;1,3,7,8,9;5"));
    for (int part = 1; part <= 3; ++part) CHECK_FALSE(rcd_by_interval(bad, part));

    RChain full_bad = chain_of_perm(parse_rtuple("3;1;2"));
    for (int part = 0; part <= 4; ++part)
        CHECK_FALSE(rcd_full_by_interval(full_bad, part));
    RChain full_good = chain_of_perm(parse_rtuple("1;3;2"));
    for (int part = 0; part <= 4; ++part)
        CHECK(rcd_full_by_interval(full_good, part));
}
