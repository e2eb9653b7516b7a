#include "pctk/rtuple.hpp"

#include <algorithm>
#include <numeric>

namespace pctk {

RTuple::RTuple(RSet rset, std::vector<int> entries)
    : rset_(std::move(rset)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != rset_.n())
        throw input_error("entry count must equal n");
    for (int v : entries_)
        if (v < 1 || v > rset_.n()) throw input_error("entry out of range [1, n]");
}

int RTuple::entry(int i) const {
    if (i < 1 || i > n()) throw input_error("position out of range [1, n]");
    return entries_[i - 1];
}

std::vector<int> RTuple::cohort(int h) const {
    if (h < 1 || h > rset_.r() + 1) throw input_error("carrel index out of range");
    return {entries_.begin() + rset_.q(h - 1), entries_.begin() + rset_.q(h)};
}

bool is_upper(const RTuple& t) {
    for (int i = 1; i <= t.n(); ++i)
        if (t.entry(i) < i) return false;
    return true;
}

bool is_flag(const RTuple& t) {
    for (int i = 1; i < t.n(); ++i)
        if (t.entry(i) > t.entry(i + 1)) return false;
    return true;
}

bool is_r_increasing(const RTuple& t) {
    const RSet& rs = t.rset();
    for (int h = 1; h <= rs.r() + 1; ++h)
        for (int i = rs.q(h - 1) + 1; i < rs.q(h); ++i)
            if (t.entry(i) >= t.entry(i + 1)) return false;
    return true;
}

bool is_r_flag(const RTuple& t) {
    if (!is_r_increasing(t) || !is_upper(t)) return false;
    const RSet& rs = t.rset();
    for (int h = 1; h <= rs.r(); ++h) {
        int m = std::min(rs.p(h + 1), rs.p(h));
        for (int u = 1; u <= m; ++u)
            if (t.entry(rs.q(h + 1) + 1 - u) < t.entry(rs.q(h) + 1 - u)) return false;
    }
    return true;
}

bool is_r_permutation(const RTuple& t) {
    if (!is_r_increasing(t)) return false;
    std::vector<bool> seen(t.n() + 1, false);
    for (int v : t.entries()) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

RTupleClass classify_rtuple(const RTuple& t) {
    RTupleClass c;
    c.upper = is_upper(t);
    c.flag = is_flag(t);
    c.r_increasing = is_r_increasing(t);
    c.r_flag = is_r_flag(t);
    c.r_permutation = is_r_permutation(t);
    return c;
}

bool is_gapless(const RTuple& t) {
    if (!is_r_increasing(t) || !is_upper(t)) return false;
    const RSet& rs = t.rset();
    for (int h = 1; h <= rs.r(); ++h) {
        int g = t.entry(rs.q(h));
        int first = t.entry(rs.q(h) + 1);
        if (g <= first) continue;
        int s = g - first + 1;
        if (s > rs.p(h + 1)) return false;
        for (int u = 1; u <= s; ++u)
            if (t.entry(rs.q(h) + u) != g - s + u) return false;
    }
    return true;
}

bool is_r312_avoiding_by_pattern_scan(const RTuple& perm) {
    const RSet& rs = perm.rset();
    for (int h = 1; h <= rs.r() - 1; ++h)
        for (int b = rs.q(h) + 1; b <= rs.q(h + 1); ++b)
            for (int a = 1; a <= rs.q(h); ++a) {
                if (perm.entry(a) <= perm.entry(b)) continue;
                for (int c = rs.q(h + 1) + 1; c <= rs.n(); ++c)
                    if (perm.entry(b) < perm.entry(c) && perm.entry(c) < perm.entry(a))
                        return false;
            }
    return true;
}

bool is_r312_avoiding(const RTuple& perm) {
    if (!is_r_permutation(perm)) throw input_error("pattern test needs an R-permutation");
    const RSet& rs = perm.rset();
    const int n = rs.n();
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i) pos[perm.entry(i)] = i;
    bool ok = true;
    int prefix_max = 0;
    for (int h = 1; h <= rs.r() && ok; ++h) {
        for (int i = rs.q(h - 1) + 1; i <= rs.q(h); ++i)
            prefix_max = std::max(prefix_max, perm.entry(i));
        int cohort_min = n + 1;
        for (int i = rs.q(h) + 1; i <= rs.q(h + 1); ++i)
            cohort_min = std::min(cohort_min, perm.entry(i));
        for (int v = cohort_min + 1; v < prefix_max; ++v)
            if (pos[v] > rs.q(h + 1)) {
                ok = false;
                break;
            }
    }
    if (rs.n() <= 8)
        PCTK_CHECK(ok == is_r312_avoiding_by_pattern_scan(perm),
                   "interval criterion disagrees with pattern scan");
    return ok;
}

RTuple identity_rtuple(const RSet& rset) {
    std::vector<int> e(rset.n());
    std::iota(e.begin(), e.end(), 1);
    return RTuple(rset, std::move(e));
}

RTuple rank_tuple(const RTuple& perm) {
    if (!is_r_permutation(perm)) throw input_error("rank tuple needs an R-permutation");
    const RSet& rs = perm.rset();
    std::vector<int> out(rs.n());
    std::vector<int> prefix;  // sorted {pi_1, ..., pi_{q_h}}
    prefix.reserve(rs.n());
    for (int h = 1; h <= rs.r() + 1; ++h) {
        for (int i = rs.q(h - 1) + 1; i <= rs.q(h); ++i) prefix.push_back(perm.entry(i));
        std::sort(prefix.begin(), prefix.end());
        // carrel h of the output: the p_h largest of the prefix, ascending;
        // the (q_h - i + 1)-th largest of a sorted q_h-element prefix sits at i-1
        for (int i = rs.q(h - 1) + 1; i <= rs.q(h); ++i)
            out[i - 1] = prefix[i - 1];
    }
    return RTuple(rs, std::move(out));
}

RTuple gapless_to_perm(const RTuple& gapless) {
    if (!is_gapless(gapless)) throw input_error("inverse map needs a gapless tuple");
    const RSet& rs = gapless.rset();
    const int n = rs.n();
    std::vector<int> out(n, 0);
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= rs.q(1); ++i) {
        out[i - 1] = gapless.entry(i);
        used[out[i - 1]] = true;
    }
    for (int h = 1; h <= rs.r(); ++h) {
        int g = gapless.entry(rs.q(h));
        int first = gapless.entry(rs.q(h) + 1);
        // s = max(0, g - first + 1): an equal pair still displaces one value
        int s = g >= first ? g - first + 1 : 0;
        PCTK_CHECK(s <= rs.p(h + 1), "descent run exceeds carrel");
        for (int i = rs.q(h) + s + 1; i <= rs.q(h + 1); ++i) {
            out[i - 1] = gapless.entry(i);
            used[out[i - 1]] = true;
        }
        // left side: the s largest unused values in [g], ascending across positions
        int v = g;
        for (int i = rs.q(h) + s; i > rs.q(h); --i) {
            while (v >= 1 && used[v]) --v;
            PCTK_CHECK(v >= 1, "ran out of values below the previous carrel end");
            out[i - 1] = v;
            used[v] = true;
        }
    }
    RTuple result(rs, std::move(out));
    PCTK_CHECK(is_r_permutation(result), "inverse map must output an R-permutation");
    return result;
}

}  // namespace pctk
