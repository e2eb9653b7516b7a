#include "pctk/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pctk {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> columns)
    : shape_(std::move(shape)), cols_(std::move(columns)) {
    if (static_cast<int>(cols_.size()) != shape_.width())
        throw input_error("column count must match the shape");
    for (int j = 1; j <= shape_.width(); ++j)
        if (static_cast<int>(cols_[j - 1].size()) != shape_.col_len(j))
            throw input_error("column length must match the shape");
}

int Tableau::value(int j, int i) const {
    if (j < 1 || j > shape_.width() || i < 1 || i > shape_.col_len(j))
        throw input_error("cell outside the shape");
    return cols_[j - 1][i - 1];
}

const std::vector<int>& Tableau::column(int j) const {
    if (j < 1 || j > shape_.width()) throw input_error("column index out of range");
    return cols_[j - 1];
}

std::vector<int> Tableau::flatten() const {
    std::vector<int> flat;
    flat.reserve(shape_.cells());
    for (const auto& c : cols_) flat.insert(flat.end(), c.begin(), c.end());
    return flat;
}

Tableau Tableau::from_flat(const Partition& shape, const std::vector<int>& flat) {
    if (static_cast<int>(flat.size()) != shape.cells())
        throw input_error("flat cell list has the wrong length");
    std::vector<std::vector<int>> cols;
    auto it = flat.begin();
    for (int j = 1; j <= shape.width(); ++j) {
        cols.emplace_back(it, it + shape.col_len(j));
        it += shape.col_len(j);
    }
    return Tableau(shape, std::move(cols));
}

ValidationReport validate_tableau(const Tableau& t) {
    const Partition& sh = t.shape();
    for (int j = 1; j <= sh.width(); ++j)
        for (int i = 1; i <= sh.col_len(j); ++i) {
            int v = t.value(j, i);
            if (v < 1 || v > sh.n())
                return {false, TableauViolation{j, i, 0, 0, "value outside [1, n]"}};
            if (i < sh.col_len(j) && t.value(j, i + 1) <= v)
                return {false, TableauViolation{j, i, j, i + 1,
                                                "column must strictly increase"}};
            if (j < sh.width() && sh.col_len(j + 1) >= i && t.value(j + 1, i) < v)
                return {false, TableauViolation{j, i, j + 1, i,
                                                "row must weakly increase"}};
        }
    return {};
}

bool is_semistandard(const Tableau& t) { return validate_tableau(t).ok; }

bool is_key(const Tableau& t) {
    if (!is_semistandard(t)) return false;
    const Partition& sh = t.shape();
    for (int j = 1; j < sh.width(); ++j) {
        const auto& west = t.column(j);
        const auto& east = t.column(j + 1);
        if (!std::includes(west.begin(), west.end(), east.begin(), east.end()))
            return false;
    }
    return true;
}

Tableau column_of_set(int n, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("column set must have distinct elements");
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > n))
        throw input_error("column set element out of [1, n]");
    int len = static_cast<int>(sorted.size());
    std::vector<int> parts(n, 0);
    for (int i = 0; i < len; ++i) parts[i] = 1;
    Partition shape(n, std::move(parts));
    std::vector<std::vector<int>> cols;
    if (len > 0) cols.push_back(std::move(sorted));
    return Tableau(std::move(shape), std::move(cols));
}

Tableau key_of_chain(const RChain& chain, const Partition& shape) {
    if (shape.r_lambda() != chain.rset())
        throw input_error("shape's column lengths must match the chain's dividers");
    const RSet& rs = chain.rset();
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= shape.width(); ++j) {
        int z = shape.col_len(j);
        if (z == shape.n()) {
            std::vector<int> inert(shape.n());
            std::iota(inert.begin(), inert.end(), 1);
            cols.push_back(std::move(inert));
        } else {
            int h = 1;
            while (rs.q(h) != z) ++h;
            cols.push_back(chain.block(h));
        }
    }
    return Tableau(shape, std::move(cols));
}

Tableau key_of_perm(const RTuple& perm, const Partition& shape) {
    if (perm.rset() != shape.r_lambda())
        throw input_error("permutation's dividers must match the shape");
    return key_of_chain(chain_of_perm(perm), shape);
}

RTuple row_end_list(const Tableau& t) {
    const Partition& sh = t.shape();
    std::vector<int> out(sh.n());
    for (int i = 1; i <= sh.n(); ++i)
        out[i - 1] = sh.part(i) == 0 ? i : t.value(sh.part(i), i);
    return RTuple(sh.r_lambda(), std::move(out));
}

Tableau row_end_max(const Partition& shape, const RTuple& alpha) {
    RSet rl = shape.r_lambda();
    if (alpha.rset() != rl)
        throw input_error("row end list must use the shape's dividers");
    if (!is_r_increasing(alpha) || !is_upper(alpha))
        throw input_error("row end list must be increasing on carrels and upper");
    std::vector<std::vector<int>> cols(shape.width());
    for (int j = shape.width(); j >= 1; --j) {
        int z = shape.col_len(j);
        auto& col = cols[j - 1];
        col.resize(z);
        if (z == shape.n()) {
            std::iota(col.begin(), col.end(), 1);
            continue;
        }
        int h = 1;
        while (rl.q(h) != z) ++h;
        for (int i = rl.q(h - 1) + 1; i <= z; ++i) col[i - 1] = alpha.entry(i);
        for (int i = rl.q(h - 1); i >= 1; --i)
            col[i - 1] = std::min(col[i] - 1, cols[j][i - 1]);
    }
    Tableau result(shape, std::move(cols));
    PCTK_CHECK(is_semistandard(result), "row end fill must be semistandard");
    PCTK_CHECK(row_end_list(result) == alpha, "row end fill must keep its row ends");
    return result;
}

bool is_gapless_key(const Tableau& t) {
    if (!is_key(t)) throw input_error("gapless test needs a key");
    const Partition& sh = t.shape();
    RSet rl = sh.r_lambda();
    for (int h = 1; h <= rl.r() - 1; ++h) {
        // rightmost columns of lengths q_{h+1} and q_h represent their classes
        int jlong = 0, jshort = 0;
        for (int j = 1; j <= sh.width(); ++j) {
            if (sh.col_len(j) == rl.q(h + 1)) jlong = j;
            if (sh.col_len(j) == rl.q(h)) jshort = j;
        }
        const auto& longer = t.column(jlong);
        const auto& shorter = t.column(jshort);
        int b = 0;
        for (int v : longer)
            if (!std::binary_search(shorter.begin(), shorter.end(), v)) {
                b = v;
                break;
            }
        int m = shorter.back();
        if (b > m) continue;
        auto bit = std::lower_bound(longer.begin(), longer.end(), b);
        auto mit = std::lower_bound(longer.begin(), longer.end(), m);
        if (mit == longer.end() || *mit != m) return false;
        // rows from b's to m's must carry exactly b, b+1, ..., m
        int i = static_cast<int>(bit - longer.begin()) + 1;
        int k = static_cast<int>(mit - longer.begin()) + 1;
        for (int u = i; u <= k; ++u)
            if (longer[u - 1] != b + (u - i)) return false;
    }
    return true;
}

bool tableau_leq(const Tableau& a, const Tableau& b) {
    if (a.shape() != b.shape()) throw input_error("cellwise order needs equal shapes");
    for (int j = 1; j <= a.shape().width(); ++j)
        for (int i = 1; i <= a.shape().col_len(j); ++i)
            if (a.value(j, i) > b.value(j, i)) return false;
    return true;
}

Tableau minimal_tableau(const Partition& shape) {
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= shape.width(); ++j) {
        std::vector<int> col(shape.col_len(j));
        std::iota(col.begin(), col.end(), 1);
        cols.push_back(std::move(col));
    }
    return Tableau(shape, std::move(cols));
}

std::vector<Tableau> enumerate_tableaux(const Partition& shape, std::uint64_t budget,
                                        const Tableau* lo, const Tableau* hi) {
    if (lo && lo->shape() != shape) throw input_error("lower bound has the wrong shape");
    if (hi && hi->shape() != shape) throw input_error("upper bound has the wrong shape");
    std::vector<Tableau> out;
    std::vector<std::vector<int>> cols(shape.width());
    for (int j = 1; j <= shape.width(); ++j) cols[j - 1].resize(shape.col_len(j));
    std::uint64_t count = 0;
    std::function<void(int, int)> fill = [&](int j, int i) {
        if (j > shape.width()) {
            if (++count > budget) throw resource_error("too many fillings for the budget");
            out.emplace_back(shape, cols);
            return;
        }
        if (i > shape.col_len(j)) {
            fill(j + 1, 1);
            return;
        }
        int low = 1;
        if (i > 1) low = std::max(low, cols[j - 1][i - 2] + 1);
        if (j > 1) low = std::max(low, cols[j - 2][i - 1]);
        if (lo) low = std::max(low, lo->value(j, i));
        int high = shape.n() - (shape.col_len(j) - i);
        if (hi) high = std::min(high, hi->value(j, i));
        for (int v = low; v <= high; ++v) {
            cols[j - 1][i - 1] = v;
            fill(j, i + 1);
        }
    };
    fill(1, 1);
    return out;
}

}  // namespace pctk
