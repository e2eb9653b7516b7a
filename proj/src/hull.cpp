#include "pctk/hull.hpp"

#include <algorithm>
#include <cstddef>

namespace pctk {

// Feasibility of  sum mu_i p_i = z,  sum mu_i = 1,  mu >= 0, decided by
// minimizing the sum of artificial variables with Bland's pivoting rule.
bool in_convex_hull(const std::vector<std::vector<int>>& points,
                    const std::vector<int>& z) {
    if (points.empty()) return false;
    const std::size_t d = z.size();
    for (const auto& p : points)
        if (p.size() != d) throw input_error("hull points must match the target's dimension");

    for (std::size_t c = 0; c < d; ++c) {
        int mn = points[0][c], mx = points[0][c];
        for (const auto& p : points) {
            mn = std::min(mn, p[c]);
            mx = std::max(mx, p[c]);
        }
        if (z[c] < mn || z[c] > mx) return false;
    }
    for (const auto& p : points)
        if (std::equal(p.begin(), p.end(), z.begin())) return true;

    const std::size_t m = points.size();
    const std::size_t rows = d + 1;
    const std::size_t cols = m + rows;  // structural then artificial
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, 0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < m; ++j) a[r][j] = points[j][r];
        a[r][m + r] = 1;
        a[r][cols] = z[r];
    }
    for (std::size_t j = 0; j < m; ++j) a[d][j] = 1;
    a[d][m + d] = 1;
    a[d][cols] = 1;

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

    // reduced costs for minimizing the artificial sum: c_j - (cost of basis) * column
    std::vector<Rational> red(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        red[j] = j >= m ? 1 : 0;
        for (std::size_t r = 0; r < rows; ++r) red[j] -= a[r][j];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (red[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rational best = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (a[r][enter] <= 0) continue;
            Rational ratio = a[r][cols] / a[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded cannot arise for this program

        Rational piv = a[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) a[leave][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || a[r][enter] == 0) continue;
            Rational f = a[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) a[r][j] -= f * a[leave][j];
        }
        Rational f = red[enter];
        if (f != 0)
            for (std::size_t j = 0; j < cols; ++j) red[j] -= f * a[leave][j];
        basis[leave] = enter;
    }
    Rational obj = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) obj += a[r][cols];
    return obj == 0;
}

}  // namespace pctk
