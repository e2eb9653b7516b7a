#pragma once

#include <vector>

#include "pctk/rset.hpp"

namespace pctk {

// An n-tuple with entries in [n], read against a divider set R.  Entries are
// immutable after construction; all positions are 1-based.
class RTuple {
  public:
    RTuple(RSet rset, std::vector<int> entries);

    int n() const { return rset_.n(); }
    const RSet& rset() const { return rset_; }
    int entry(int i) const;  // i in [1, n]
    const std::vector<int>& entries() const { return entries_; }
    // entries of carrel h in position order
    std::vector<int> cohort(int h) const;

    bool operator==(const RTuple& o) const {
        return rset_ == o.rset_ && entries_ == o.entries_;
    }
    bool operator!=(const RTuple& o) const { return !(*this == o); }
    bool operator<(const RTuple& o) const { return entries_ < o.entries_; }

  private:
    RSet rset_;
    std::vector<int> entries_;
};

struct RTupleClass {
    bool upper = false;
    bool flag = false;
    bool r_increasing = false;
    bool r_flag = false;
    bool r_permutation = false;
};

RTupleClass classify_rtuple(const RTuple& t);
bool is_upper(const RTuple& t);
bool is_flag(const RTuple& t);
bool is_r_increasing(const RTuple& t);
bool is_r_flag(const RTuple& t);
bool is_r_permutation(const RTuple& t);

// R-increasing upper tuple whose descents across dividers are filled by
// consecutive runs: if the last entry of carrel h exceeds the first entry of
// carrel h+1, the run g-s+1, ..., g (g = that last entry) must open carrel h+1.
bool is_gapless(const RTuple& t);

// Pattern test for R-permutations: true iff no positions a <= q_h < b <= q_{h+1} < c
// exist with pi_b < pi_c < pi_a.  Fast route via the interval criterion
// (everything strictly between the (h+1)-cohort minimum and the running prefix
// maximum must already sit inside the first h+1 cohorts).
bool is_r312_avoiding(const RTuple& perm);
// Literal three-index scan of the defining pattern; exposed for cross-testing.
bool is_r312_avoiding_by_pattern_scan(const RTuple& perm);

RTuple identity_rtuple(const RSet& rset);

// Rank tuple of an R-permutation: carrel h lists the p_h largest members of
// {pi_1, ..., pi_{q_h}} in increasing order.
RTuple rank_tuple(const RTuple& perm);

// Inverse construction on gapless tuples: copies ascent positions and fills
// each descent's left side with the largest unused values below the previous
// carrel's last entry.
RTuple gapless_to_perm(const RTuple& gapless);

}  // namespace pctk
