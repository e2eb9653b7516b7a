#include "pctk/witness.hpp"

#include <algorithm>

#include "pctk/demazure.hpp"

namespace pctk {

RTuple carrel_sorted(const RTuple& t) {
    std::vector<int> e = t.entries();
    const RSet& rs = t.rset();
    for (int h = 1; h <= rs.r() + 1; ++h)
        std::sort(e.begin() + rs.q(h - 1), e.begin() + rs.q(h));
    return RTuple(rs, std::move(e));
}

Witness convexity_witness(const RTuple& perm, const Partition& shape) {
    if (!is_r_permutation(perm)) throw input_error("witness needs a permutation");
    if (perm.rset() != shape.r_lambda())
        throw input_error("permutation's dividers must match the shape");
    if (is_r312_avoiding(perm))
        throw input_error("no witness exists for a pattern-avoiding permutation");

    const RSet& rs = perm.rset();
    const int n = rs.n(), r = rs.r();
    auto pi = [&](int i) { return perm.entry(i); };

    // smallest carrel whose positions can play the middle role of the pattern
    int h = 0;
    for (int hh = 2; hh <= r && h == 0; ++hh)
        for (int b = rs.q(hh - 1) + 1; b <= rs.q(hh) && h == 0; ++b)
            for (int a = 1; a <= rs.q(hh - 1) && h == 0; ++a)
                for (int c = rs.q(hh) + 1; c <= n && h == 0; ++c)
                    if (pi(b) < pi(c) && pi(c) < pi(a)) h = hh;
    PCTK_CHECK(h != 0, "a containing permutation must yield a middle carrel");

    int b = 0;
    for (int bb = rs.q(h - 1) + 1; bb <= rs.q(h); ++bb) {
        bool admissible = false;
        for (int a = 1; a <= rs.q(h - 1) && !admissible; ++a)
            for (int c = rs.q(h) + 1; c <= n && !admissible; ++c)
                if (pi(bb) < pi(c) && pi(c) < pi(a)) admissible = true;
        if (admissible && (b == 0 || pi(bb) > pi(b))) b = bb;
    }

    int a = 0;
    for (int aa = 1; aa <= rs.q(h - 1); ++aa) {
        bool admissible = false;
        for (int c = rs.q(h) + 1; c <= n && !admissible; ++c)
            if (pi(b) < pi(c) && pi(c) < pi(aa)) admissible = true;
        if (admissible && (a == 0 || pi(aa) < pi(a))) a = aa;
    }
    const int g = rs.carrel_of(a);

    int c = 0;
    for (int cc = rs.q(h) + 1; cc <= n && c == 0; ++cc)
        if (pi(b) < pi(cc) && pi(cc) < pi(a)) c = cc;

    int d = 0;
    for (int dd = 1; dd <= rs.q(g); ++dd)
        if (pi(b) < pi(dd) && pi(dd) < pi(c) && (d == 0 || pi(dd) > pi(d))) d = dd;
    if (d == 0) d = b;

    std::vector<int> chi_e = perm.entries();
    std::swap(chi_e[b - 1], chi_e[d - 1]);
    RTuple chi(rs, chi_e);
    std::vector<int> omega_e = chi_e;
    std::swap(omega_e[a - 1], omega_e[b - 1]);
    RTuple omega(rs, omega_e);

    RTuple chi_bar = carrel_sorted(chi);
    RTuple omega_bar = carrel_sorted(omega);
    Tableau upper = key_of_perm(chi_bar, shape);
    Tableau lower = key_of_perm(omega_bar, shape);

    const int jcol = shape.part(rs.q(h));
    const int mcol = shape.part(rs.q(g));
    std::vector<std::pair<int, int>> cells;
    for (int col = jcol + 1; col <= mcol; ++col) {
        const auto& v = upper.column(col);
        auto it = std::lower_bound(v.begin(), v.end(), pi(a));
        PCTK_CHECK(it != v.end() && *it == pi(a),
                   "the outer value must sit in every column between the carrels");
        cells.emplace_back(col, static_cast<int>(it - v.begin()) + 1);
    }

    const int chi_b = chi.entry(b);
    std::vector<std::vector<int>> tcols, wcols;
    for (int col = 1; col <= shape.width(); ++col) {
        tcols.push_back(upper.column(col));
        wcols.push_back(upper.column(col));
    }
    for (auto [col, row] : cells) {
        tcols[col - 1][row - 1] = pi(c);
        wcols[col - 1][row - 1] = chi_b;
    }
    Tableau interior(shape, tcols);
    PCTK_CHECK(Tableau(shape, wcols) == lower,
               "replacing the marked cells must recover the lower key");

    Rational ratio(pi(c) - chi_b, pi(a) - chi_b);
    PCTK_CHECK(ratio > 0 && ratio < 1, "the interior point must be strictly between");
    PCTK_CHECK(tableau_leq(lower, upper) && !(lower == upper),
               "the endpoint keys must be distinct and ordered");
    PCTK_CHECK(tableau_leq(upper, key_of_perm(perm, shape)),
               "the upper key must stay below the bound");
    for (int col = 1; col <= shape.width(); ++col)
        for (int row = 1; row <= shape.col_len(col); ++row) {
            Rational blend = Rational(lower.value(col, row)) +
                             ratio * (upper.value(col, row) - lower.value(col, row));
            PCTK_CHECK(blend == interior.value(col, row),
                       "the interior point must lie on the segment");
        }
    PCTK_CHECK(is_semistandard(interior), "the interior point must be semistandard");
    PCTK_CHECK(is_demazure_member(upper, perm) && is_demazure_member(lower, perm),
               "both endpoints must be members");
    PCTK_CHECK(!is_demazure_member(interior, perm),
               "the interior point must not be a member");

    return Witness{h,   g,     a,       b,     c,        d,     std::move(chi),
                   std::move(omega),    std::move(chi_bar),     std::move(omega_bar),
                   std::move(upper),    std::move(lower),       std::move(interior),
                   std::move(cells),    std::move(ratio)};
}

}  // namespace pctk
