#pragma once

#include <vector>

#include "pctk/types.hpp"

namespace pctk {

// A choice of dividers R = {q_1 < ... < q_r} inside [n-1], with the
// conventional endpoints q_0 = 0 and q_{r+1} = n.  The dividers cut positions
// 1..n into r+1 consecutive carrels; carrel h is (q_{h-1}, q_h] and has size
// p_h = q_h - q_{h-1}.
class RSet {
  public:
    RSet(int n, std::vector<int> dividers);
    static RSet empty(int n) { return RSet(n, {}); }
    static RSet full(int n);

    int n() const { return n_; }
    int r() const { return static_cast<int>(qs_.size()); }
    // q(0) = 0, q(r+1) = n
    int q(int h) const;
    // carrel size, h in [1, r+1]
    int p(int h) const { return q(h) - q(h - 1); }
    // index h of the carrel containing position i
    int carrel_of(int i) const;
    bool is_full() const { return r() == n_ - 1; }
    const std::vector<int>& dividers() const { return qs_; }

    bool operator==(const RSet& o) const { return n_ == o.n_ && qs_ == o.qs_; }
    bool operator!=(const RSet& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<int> qs_;
};

}  // namespace pctk
