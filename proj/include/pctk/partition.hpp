#pragma once

#include <vector>

#include "pctk/rset.hpp"

namespace pctk {

// A weakly decreasing shape with an explicit number of rows n; trailing zero
// rows are significant (they fix n).
class Partition {
  public:
    Partition(int n, std::vector<int> parts);
    // one column of each length in R, longest first
    static Partition minimal_for(const RSet& rset);

    int n() const { return n_; }
    int part(int i) const;  // lambda_i, i in [1, n]
    const std::vector<int>& parts() const { return parts_; }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }
    int col_len(int j) const;  // zeta_j, j in [1, width]
    int cells() const;
    bool is_strict() const;
    // distinct column lengths below n, as dividers over n
    RSet r_lambda() const;

    bool operator==(const Partition& o) const { return n_ == o.n_ && parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<int> parts_;
};

}  // namespace pctk
