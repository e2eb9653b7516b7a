#pragma once

#include <vector>

#include "pctk/rtuple.hpp"

namespace pctk {

// Maximal runs of consecutive integers, in increasing order.
// Input need not be sorted; duplicates are rejected.
std::vector<std::vector<int>> clump_decompose(std::vector<int> s);

// Nested sets {} = B_0 < B_1 < ... < B_{r+1} = [n] with |B_h| = q_h.
// Blocks are stored sorted ascending.
class RChain {
  public:
    RChain(RSet rset, std::vector<std::vector<int>> blocks);

    const RSet& rset() const { return rset_; }
    int n() const { return rset_.n(); }
    // h in [0, r+1]
    const std::vector<int>& block(int h) const;
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const RChain& o) const {
        return rset_ == o.rset_ && blocks_ == o.blocks_;
    }
    bool operator<(const RChain& o) const { return blocks_ < o.blocks_; }

  private:
    RSet rset_;
    std::vector<std::vector<int>> blocks_;
};

RChain chain_of_perm(const RTuple& perm);
RTuple perm_of_chain(const RChain& chain);

// One deletion stage, read downward: passing from the larger set to the
// smaller one must remove entire clumps from the top plus, optionally, part of
// the next clump down.  `smaller` must be a subset of `larger`.
bool rcd_step_ok(const std::vector<int>& smaller, const std::vector<int>& larger);

// Interval criteria equivalent to the clump condition, exposed for
// cross-testing.  part selects: 1 = closed interval [b, m_h] inside B_{h+1},
// 2 = open interval (b, m_h) inside B_{h+1}, 3 = the new elements below m_h
// are exactly the largest elements of [m_h] \ B_h.
bool rcd_by_interval(const RChain& chain, int part);

// Single-deletion criteria for the full divider set; part selects:
// 0 = [b_{h+1}, m_{h+1}] in B_{h+1},  1 = [b_{h+1}, m_h] in B_{h+1},
// 2 = (b_{h+1}, m_h) in B_h,  3 = b_{h+1} = max([m_h] \ B_h) when b < m_h,
// 4 = b_{h+1} = max([m_{h+1}] \ B_h).
bool rcd_full_by_interval(const RChain& chain, int part);

// True iff every consecutive pair of blocks passes rcd_step_ok.
bool is_rcd_chain(const RChain& chain);

}  // namespace pctk
