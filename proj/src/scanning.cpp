#include "pctk/scanning.hpp"

#include <algorithm>

namespace pctk {

std::vector<int> ewis(const std::vector<int>& seq) {
    if (seq.empty()) throw input_error("ewis needs at least one entry");
    std::vector<int> idx;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (idx.empty() || seq[i] >= seq[idx.back() - 1])
            idx.push_back(static_cast<int>(i) + 1);
    return idx;
}

namespace {

void check_cell(const Tableau& t, int l, int k) {
    if (l < 1 || l > t.shape().width() || k < 1 || k > t.shape().col_len(l))
        throw input_error("cell outside the shape");
}

}  // namespace

ScanResult scan_details(const Tableau& t) {
    if (!is_semistandard(t)) throw input_error("scan needs a semistandard tableau");
    const Partition& sh = t.shape();
    const int width = sh.width();
    ScanResult res{t, t, {}, {}};
    res.residual.resize(width);
    std::vector<std::vector<int>> scols;
    std::vector<int> h(width + 1, 0);
    for (int l = 1; l <= width; ++l) {
        const int zl = sh.col_len(l);
        res.residual[l - 1].assign(zl, 1);
        for (int j = l; j <= width; ++j) h[j] = sh.col_len(j);
        std::vector<int> scol(zl);
        for (int k = zl; k >= 1; --k) {
            int m = 1;
            for (int j = l + 1; j <= width; ++j)
                if (h[j] >= 1) m = std::max(m, t.value(j, h[j]));
            res.residual[l - 1][k - 1] = m;
            std::vector<std::pair<int, int>> path;
            int v = t.value(l, h[l]);
            path.emplace_back(l, h[l]);
            --h[l];
            for (int j = l + 1; j <= width; ++j)
                if (h[j] >= 1 && t.value(j, h[j]) >= v) {
                    v = t.value(j, h[j]);
                    path.emplace_back(j, h[j]);
                    --h[j];
                }
            scol[k - 1] = v;
            PCTK_CHECK(v == std::max(t.value(l, k), m),
                       "path end must agree with the residual rule");
            res.paths[{l, k}] = std::move(path);
        }
        for (int j = l; j <= width; ++j)
            PCTK_CHECK(h[j] == 0, "a pass must consume every column it covers");
        scols.push_back(std::move(scol));
    }
    res.scan = Tableau(sh, std::move(scols));
    PCTK_CHECK(is_key(res.scan), "scan result must be a key");
    return res;
}

Tableau scan_tableau(const Tableau& t) { return scan_details(t).scan; }

int residual_max(const Tableau& t, int l, int k) {
    if (!is_semistandard(t)) throw input_error("scan needs a semistandard tableau");
    check_cell(t, l, k);
    const Partition& sh = t.shape();
    const int width = sh.width();
    std::vector<int> h(width + 1, 0);
    for (int j = l; j <= width; ++j) h[j] = sh.col_len(j);
    for (int kk = sh.col_len(l);; --kk) {
        int m = 1;
        for (int j = l + 1; j <= width; ++j)
            if (h[j] >= 1) m = std::max(m, t.value(j, h[j]));
        if (kk == k) return m;
        int v = t.value(l, h[l]);
        --h[l];
        for (int j = l + 1; j <= width; ++j)
            if (h[j] >= 1 && t.value(j, h[j]) >= v) {
                v = t.value(j, h[j]);
                --h[j];
            }
    }
}

ASet a_set(const Tableau& t, const Tableau& y, int l, int k) {
    if (t.shape() != y.shape()) throw input_error("bound must share the shape");
    if (!is_key(y)) throw input_error("bound must be a key");
    check_cell(t, l, k);
    const Partition& sh = t.shape();
    const int m = residual_max(t, l, k);
    if (m > y.value(l, k)) return {true, 0, 0};
    const int below = k < sh.col_len(l) ? t.value(l, k + 1) : sh.n() + 1;
    const bool has_right = l < sh.width() && sh.col_len(l + 1) >= k;
    const int right = has_right ? t.value(l + 1, k) : sh.n();
    const int hi = std::min({y.value(l, k), below - 1, right});
    return {false, k, hi};
}

}  // namespace pctk
