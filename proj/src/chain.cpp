#include "pctk/chain.hpp"

#include <algorithm>

namespace pctk {

std::vector<std::vector<int>> clump_decompose(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw input_error("clump decomposition needs distinct elements");
    std::vector<std::vector<int>> clumps;
    for (int v : s) {
        if (clumps.empty() || clumps.back().back() + 1 != v) clumps.push_back({});
        clumps.back().push_back(v);
    }
    return clumps;
}

RChain::RChain(RSet rset, std::vector<std::vector<int>> blocks)
    : rset_(std::move(rset)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != rset_.r() + 2)
        throw input_error("chain must have r+2 blocks");
    for (int h = 0; h <= rset_.r() + 1; ++h) {
        auto& b = blocks_[h];
        std::sort(b.begin(), b.end());
        if (static_cast<int>(b.size()) != rset_.q(h))
            throw input_error("block size must equal its divider");
        for (int v : b)
            if (v < 1 || v > rset_.n()) throw input_error("block element out of [1, n]");
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw input_error("block elements must be distinct");
        if (h > 0 && !std::includes(b.begin(), b.end(), blocks_[h - 1].begin(),
                                    blocks_[h - 1].end()))
            throw input_error("blocks must be nested");
    }
}

const std::vector<int>& RChain::block(int h) const {
    if (h < 0 || h > rset_.r() + 1) throw input_error("block index out of range");
    return blocks_[h];
}

RChain chain_of_perm(const RTuple& perm) {
    if (!is_r_permutation(perm)) throw input_error("chain needs an R-permutation");
    const RSet& rs = perm.rset();
    std::vector<std::vector<int>> blocks(rs.r() + 2);
    for (int h = 1; h <= rs.r() + 1; ++h) {
        blocks[h] = blocks[h - 1];
        for (int i = rs.q(h - 1) + 1; i <= rs.q(h); ++i)
            blocks[h].push_back(perm.entry(i));
        std::sort(blocks[h].begin(), blocks[h].end());
    }
    return RChain(rs, std::move(blocks));
}

RTuple perm_of_chain(const RChain& chain) {
    const RSet& rs = chain.rset();
    std::vector<int> out;
    out.reserve(rs.n());
    for (int h = 1; h <= rs.r() + 1; ++h) {
        std::vector<int> diff;
        std::set_difference(chain.block(h).begin(), chain.block(h).end(),
                            chain.block(h - 1).begin(), chain.block(h - 1).end(),
                            std::back_inserter(diff));
        out.insert(out.end(), diff.begin(), diff.end());
    }
    return RTuple(rs, std::move(out));
}

bool rcd_step_ok(const std::vector<int>& smaller, const std::vector<int>& larger) {
    std::vector<int> removed;
    std::set_difference(larger.begin(), larger.end(), smaller.begin(), smaller.end(),
                        std::back_inserter(removed));
    if (removed.empty()) return true;
    auto clumps = clump_decompose(larger);
    // the clump holding the smallest removed element; everything in higher
    // clumps must be removed too
    std::size_t e = 0;
    while (clumps[e].back() < removed.front()) ++e;
    for (std::size_t f = e + 1; f < clumps.size(); ++f)
        for (int v : clumps[f])
            if (!std::binary_search(removed.begin(), removed.end(), v)) return false;
    return true;
}

bool is_rcd_chain(const RChain& chain) {
    const RSet& rs = chain.rset();
    bool ok = true;
    for (int h = 1; h <= rs.r(); ++h)
        if (!rcd_step_ok(chain.block(h), chain.block(h + 1))) {
            ok = false;
            break;
        }
    if (rs.n() <= 8) {
        for (int part = 1; part <= 3; ++part)
            PCTK_CHECK(ok == rcd_by_interval(chain, part),
                       "clump condition disagrees with interval criterion");
        if (rs.is_full())
            for (int part = 0; part <= 4; ++part)
                PCTK_CHECK(ok == rcd_full_by_interval(chain, part),
                           "clump condition disagrees with single-deletion criterion");
    }
    return ok;
}

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

bool rcd_by_interval(const RChain& chain, int part) {
    const RSet& rs = chain.rset();
    for (int h = 1; h <= rs.r(); ++h) {
        const auto& bh = chain.block(h);
        const auto& bh1 = chain.block(h + 1);
        std::vector<int> removed;
        std::set_difference(bh1.begin(), bh1.end(), bh.begin(), bh.end(),
                            std::back_inserter(removed));
        int b = removed.front();
        int m = bh.back();
        switch (part) {
            case 1:
                for (int v = b; v <= m; ++v)
                    if (!contains(bh1, v)) return false;
                break;
            case 2:
                for (int v = b + 1; v < m; ++v)
                    if (!contains(bh1, v)) return false;
                break;
            case 3: {
                std::vector<int> below;  // new elements under the old maximum
                for (int v : removed)
                    if (v < m) below.push_back(v);
                std::vector<int> gaps;  // [m] \ B_h
                for (int v = 1; v <= m; ++v)
                    if (!contains(bh, v)) gaps.push_back(v);
                std::size_t s = below.size();
                if (s > gaps.size()) return false;
                if (!std::equal(below.begin(), below.end(), gaps.end() - s))
                    return false;
                break;
            }
            default:
                throw input_error("interval criterion part must be 1, 2 or 3");
        }
    }
    return true;
}

bool rcd_full_by_interval(const RChain& chain, int part) {
    const RSet& rs = chain.rset();
    if (!rs.is_full()) throw input_error("single-deletion criteria need the full divider set");
    const int n = rs.n();
    for (int h = 1; h <= n - 1; ++h) {
        const auto& bh = chain.block(h);
        const auto& bh1 = chain.block(h + 1);
        std::vector<int> removed;
        std::set_difference(bh1.begin(), bh1.end(), bh.begin(), bh.end(),
                            std::back_inserter(removed));
        int b = removed.front();
        int mh = bh.back();
        int mh1 = bh1.back();
        switch (part) {
            case 0:
                for (int v = b; v <= mh1; ++v)
                    if (!contains(bh1, v)) return false;
                break;
            case 1:
                for (int v = b; v <= mh; ++v)
                    if (!contains(bh1, v)) return false;
                break;
            case 2:
                for (int v = b + 1; v < mh; ++v)
                    if (!contains(bh, v)) return false;
                break;
            case 3:
                if (b < mh) {
                    int best = 0;
                    for (int v = mh; v >= 1; --v)
                        if (!contains(bh, v)) {
                            best = v;
                            break;
                        }
                    if (b != best) return false;
                }
                break;
            case 4: {
                int best = 0;
                for (int v = mh1; v >= 1; --v)
                    if (!contains(bh, v)) {
                        best = v;
                        break;
                    }
                if (b != best) return false;
                break;
            }
            default:
                throw input_error("single-deletion part must be in [0, 4]");
        }
    }
    return true;
}

}  // namespace pctk
