#include "pctk/rset.hpp"

#include <numeric>

namespace pctk {

RSet::RSet(int n, std::vector<int> dividers) : n_(n), qs_(std::move(dividers)) {
    if (n < 1) throw input_error("n must be at least 1");
    int prev = 0;
    for (int q : qs_) {
        if (q <= prev) throw input_error("dividers must be strictly increasing");
        if (q >= n) throw input_error("divider out of range [1, n-1]");
        prev = q;
    }
}

RSet RSet::full(int n) {
    std::vector<int> qs(n > 0 ? n - 1 : 0);
    std::iota(qs.begin(), qs.end(), 1);
    return RSet(n, std::move(qs));
}

int RSet::q(int h) const {
    if (h < 0 || h > r() + 1) throw input_error("carrel index out of range");
    if (h == 0) return 0;
    if (h == r() + 1) return n_;
    return qs_[h - 1];
}

int RSet::carrel_of(int i) const {
    if (i < 1 || i > n_) throw input_error("position out of range [1, n]");
    int h = 1;
    while (q(h) < i) ++h;
    return h;
}

}  // namespace pctk
