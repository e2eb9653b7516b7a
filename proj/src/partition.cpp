#include "pctk/partition.hpp"

#include <algorithm>
#include <numeric>

namespace pctk {

Partition::Partition(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    if (n < 1) throw input_error("shape needs at least one row");
    if (static_cast<int>(parts_.size()) != n)
        throw input_error("shape must list exactly n rows (zeros included)");
    for (int i = 0; i < n; ++i) {
        if (parts_[i] < 0) throw input_error("row lengths must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("row lengths must weakly decrease");
    }
}

Partition Partition::minimal_for(const RSet& rset) {
    std::vector<int> parts(rset.n(), 0);
    for (int i = 1; i <= rset.n(); ++i) {
        int count = 0;
        for (int q : rset.dividers())
            if (q >= i) ++count;
        parts[i - 1] = count;
    }
    return Partition(rset.n(), std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1 || i > n_) throw input_error("row index out of range [1, n]");
    return parts_[i - 1];
}

int Partition::col_len(int j) const {
    if (j < 1 || j > width()) throw input_error("column index out of range");
    int z = 0;
    while (z < n_ && parts_[z] >= j) ++z;
    return z;
}

int Partition::cells() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
    for (int i = 1; i < n_; ++i)
        if (parts_[i] >= parts_[i - 1]) return false;
    return true;
}

RSet Partition::r_lambda() const {
    std::vector<int> lens;
    for (int j = 1; j <= width(); ++j) {
        int z = col_len(j);
        if (z < n_) lens.push_back(z);
    }
    std::sort(lens.begin(), lens.end());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    return RSet(n_, std::move(lens));
}

}  // namespace pctk
