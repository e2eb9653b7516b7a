#include <doctest.h>

#include <algorithm>
#include <random>

#include "pctk/demazure.hpp"
#include "pctk/enumeration.hpp"
#include "pctk/format.hpp"
#include "pctk/scanning.hpp"
#include "pctk/witness.hpp"

using namespace pctk;

namespace {

constexpr int kCases = 1000;

// modulo draws keep the streams identical across standard libraries
int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

RSet random_rset(std::mt19937_64& rng, int n, int max_dividers = 6) {
    std::vector<int> divs;
    for (int q = 1; q < n; ++q)
        if (rng() % 2) divs.push_back(q);
    while (static_cast<int>(divs.size()) > max_dividers)
        divs.erase(divs.begin() + draw(rng, 0, static_cast<int>(divs.size()) - 1));
    return RSet(n, divs);
}

RTuple random_r_permutation(std::mt19937_64& rng, const RSet& rs) {
    std::vector<int> vals(rs.n());
    for (int i = 0; i < rs.n(); ++i) vals[i] = i + 1;
    for (int i = rs.n() - 1; i > 0; --i)
        std::swap(vals[i], vals[draw(rng, 0, i)]);
    RTuple raw(rs, vals);
    return carrel_sorted(raw);
}

// uniform draw from the feasible cell ranges, column by column
Tableau random_tableau(std::mt19937_64& rng, const Partition& shape) {
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= shape.width(); ++j) {
        std::vector<int> col(shape.col_len(j));
        for (int i = 1; i <= shape.col_len(j); ++i) {
            int lo = i > 1 ? col[i - 2] + 1 : 1;
            if (j > 1 && static_cast<int>(cols[j - 2].size()) >= i)
                lo = std::max(lo, cols[j - 2][i - 1]);
            int hi = shape.n() - (shape.col_len(j) - i);
            col[i - 1] = draw(rng, lo, hi);
        }
        cols.push_back(std::move(col));
    }
    return Tableau(shape, cols);
}

}  // namespace

TEST_CASE("rank then inverse is the identity on avoiding permutations") {
    std::mt19937_64 rng(20260821u);
    int done = 0;
    for (int attempt = 0; attempt < 300'000 && done < kCases; ++attempt) {
        RSet rs = random_rset(rng, draw(rng, 1, 7));
        RTuple pi = random_r_permutation(rng, rs);
        if (!is_r312_avoiding(pi)) continue;
        RTuple psi = rank_tuple(pi);
        REQUIRE(is_gapless(psi));
        REQUIRE(gapless_to_perm(psi) == pi);
        ++done;
    }
    CHECK(done == kCases);
}

TEST_CASE("inverse then rank is the identity on gapless tuples") {
    std::mt19937_64 rng(20260822u);
    int done = 0;
    for (int attempt = 0; attempt < 300'000 && done < kCases; ++attempt) {
        RSet rs = random_rset(rng, draw(rng, 1, 7));
        RTuple g = rank_tuple(random_r_permutation(rng, rs));
        if (!is_gapless(g)) continue;  // rank tuples of containing permutations
        REQUIRE(rank_tuple(gapless_to_perm(g)) == g);
        ++done;
    }
    CHECK(done == kCases);
}

TEST_CASE("scans sit above their source and are idempotent") {
    std::mt19937_64 rng(20260823u);
    for (int k = 0; k < kCases; ++k) {
        RSet rs = random_rset(rng, draw(rng, 1, 7));
        Partition shape = Partition::minimal_for(rs);
        Tableau t = random_tableau(rng, shape);
        REQUIRE(is_semistandard(t));
        Tableau s = scan_tableau(t);
        REQUIRE(tableau_leq(t, s));
        REQUIRE(scan_tableau(s) == s);
    }
}

TEST_CASE("tableau sets are bounded by their key and attain it") {
    std::mt19937_64 rng(20260824u);
    for (int k = 0; k < kCases; ++k) {
        RSet rs = random_rset(rng, draw(rng, 1, 7), 2);
        Partition shape = Partition::minimal_for(rs);
        RTuple pi = random_r_permutation(rng, rs);
        Tableau y = key_of_perm(pi, shape);
        auto d = demazure_set(pi, shape);
        bool has_key = false;
        for (const Tableau& t : d) {
            REQUIRE(tableau_leq(t, y));
            has_key = has_key || t == y;
        }
        REQUIRE(has_key);
    }
}
