#include "pctk/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pctk {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt catalan(int k) {
    if (k < 0) throw input_error("catalan index must be nonnegative");
    return binomial(2 * k, k) / (k + 1);
}

namespace {

void for_each_r_permutation(const RSet& rs,
                            const std::function<void(const RTuple&)>& fn) {
    const int n = rs.n();
    std::vector<int> cur(n);
    std::vector<char> used(n + 1, 0);
    std::function<void(int, int, int)> rec = [&](int h, int i, int minv) {
        if (i > rs.q(h)) {
            if (h == rs.r() + 1)
                fn(RTuple(rs, cur));
            else
                rec(h + 1, i, 1);
            return;
        }
        for (int v = minv; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            cur[i - 1] = v;
            rec(h, i + 1, v + 1);
            used[v] = 0;
        }
    };
    rec(1, 1, 1);
}

void for_each_increasing_upper(const RSet& rs,
                               const std::function<void(const RTuple&)>& fn) {
    const int n = rs.n();
    std::vector<int> cur(n);
    std::function<void(int, int, int)> rec = [&](int h, int i, int minv) {
        if (i > rs.q(h)) {
            if (h == rs.r() + 1)
                fn(RTuple(rs, cur));
            else
                rec(h + 1, i, 1);
            return;
        }
        for (int v = std::max(minv, i); v <= n; ++v) {
            cur[i - 1] = v;
            rec(h, i + 1, v + 1);
        }
    };
    rec(1, 1, 1);
}

}  // namespace

std::vector<RTuple> gen_r_permutations(const RSet& rs) {
    std::vector<RTuple> out;
    for_each_r_permutation(rs, [&](const RTuple& t) { out.push_back(t); });
    return out;
}

std::vector<RTuple> gen_r312_avoiding(const RSet& rs) {
    std::vector<RTuple> out;
    for_each_r_permutation(rs, [&](const RTuple& t) {
        if (is_r312_avoiding(t)) out.push_back(t);
    });
    return out;
}

std::vector<RTuple> gen_gapless(const RSet& rs) {
    std::vector<RTuple> out;
    for_each_increasing_upper(rs, [&](const RTuple& t) {
        if (is_gapless(t)) out.push_back(t);
    });
    return out;
}

std::vector<RChain> gen_rcd_chains(const RSet& rs) {
    const int n = rs.n();
    const int r = rs.r();
    std::vector<RChain> out;
    std::vector<std::vector<int>> blocks(r + 2);
    blocks[r + 1].resize(n);
    std::iota(blocks[r + 1].begin(), blocks[r + 1].end(), 1);
    std::function<void(int)> rec = [&](int h) {
        if (h == 0) {
            out.emplace_back(rs, blocks);
            return;
        }
        const auto& larger = blocks[h + 1];
        const int want = rs.q(h);
        std::vector<int> pick;
        std::function<void(int)> choose = [&](int from) {
            if (static_cast<int>(pick.size()) == want) {
                if (rcd_step_ok(pick, larger)) {
                    blocks[h] = pick;
                    rec(h - 1);
                }
                return;
            }
            int room = static_cast<int>(larger.size()) - from;
            int need = want - static_cast<int>(pick.size());
            for (int idx = from; room >= need; ++idx, --room) {
                pick.push_back(larger[idx]);
                choose(idx + 1);
                pick.pop_back();
            }
        };
        choose(0);
    };
    rec(r);
    std::sort(out.begin(), out.end());
    return out;
}

ShapeTuple shape_tuple_of_gapless(const RTuple& gapless) {
    if (!is_gapless(gapless)) throw input_error("shape tuple needs a gapless tuple");
    const RSet& rs = gapless.rset();
    ShapeTuple mu(rs.r());
    for (int h = 1; h <= rs.r(); ++h) {
        mu[h - 1].resize(rs.p(h));
        for (int t = 1; t <= rs.p(h); ++t)
            mu[h - 1][t - 1] = gapless.entry(rs.q(h) + 1 - t) - (rs.q(h) + 1 - t);
    }
    return mu;
}

std::vector<ShapeTuple> gen_shape_tuples(const RSet& rs) {
    const int r = rs.r();
    std::vector<ShapeTuple> out;
    ShapeTuple cur(r);
    std::function<void(int)> rec = [&](int h) {
        if (h > r) {
            out.push_back(cur);
            return;
        }
        const int parts = rs.p(h);
        const int cap = rs.n() - rs.q(h);
        cur[h - 1].assign(parts, 0);
        std::function<void(int, int)> fill = [&](int t, int prev) {
            if (t > parts) {
                if (h > 1) {
                    const auto& left = cur[h - 2];
                    const auto& right = cur[h - 1];
                    int last = right.back();
                    int mult = static_cast<int>(
                        std::count(right.begin(), right.end(), last));
                    if (left.front() > last + mult) return;
                }
                rec(h + 1);
                return;
            }
            for (int v = 0; v <= prev; ++v) {
                cur[h - 1][t - 1] = v;
                fill(t + 1, v);
            }
        };
        fill(1, cap);
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_sigma_avoiding(const RTuple& perm, const std::array<int, 3>& sigma) {
    std::array<int, 3> check = sigma;
    std::sort(check.begin(), check.end());
    if (check != std::array<int, 3>{1, 2, 3})
        throw input_error("pattern must be a permutation of 1, 2, 3");
    if (!is_r_permutation(perm)) throw input_error("pattern test needs a permutation");
    const RSet& rs = perm.rset();
    const int n = rs.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (rs.carrel_of(j) == rs.carrel_of(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (rs.carrel_of(k) == rs.carrel_of(j)) continue;
                const int vals[3] = {perm.entry(i), perm.entry(j), perm.entry(k)};
                bool match = true;
                for (int s = 0; s < 3 && match; ++s)
                    for (int t = 0; t < 3 && match; ++t)
                        if ((vals[s] < vals[t]) != (sigma[s] < sigma[t]))
                            match = false;
                if (match) return false;
            }
        }
    return true;
}

std::vector<RTuple> gen_sigma_avoiding(const RSet& rs,
                                       const std::array<int, 3>& sigma) {
    std::vector<RTuple> out;
    for_each_r_permutation(rs, [&](const RTuple& t) {
        if (is_sigma_avoiding(t, sigma)) out.push_back(t);
    });
    return out;
}

namespace {

// valid deletions from the sorted set s: a nonempty subset of one clump
// together with every clump above it
void for_each_deletion(const std::vector<int>& s,
                       const std::function<void(const std::vector<int>&)>& fn) {
    auto clumps = clump_decompose(s);
    const int nc = static_cast<int>(clumps.size());
    std::vector<int> tail;  // union of clumps above e, built from the top down
    for (int e = nc - 1; e >= 0; --e) {
        const auto& cl = clumps[e];
        const int sz = static_cast<int>(cl.size());
        for (int mask = 1; mask < (1 << sz); ++mask) {
            std::vector<int> del;
            for (int i = 0; i < sz; ++i)
                if (mask & (1 << i)) del.push_back(cl[i]);
            del.insert(del.end(), tail.begin(), tail.end());
            fn(del);
        }
        tail.insert(tail.begin(), cl.begin(), cl.end());
    }
}

}  // namespace

std::vector<GChain> gen_generalized_chains(int n, std::uint64_t budget) {
    if (n < 1) throw input_error("chain ground set needs n >= 1");
    if (n > 16) throw resource_error("chain enumeration capped at n = 16");
    BigInt total = count_generalized_chains(n);
    if (total > budget) throw resource_error("too many chains for the budget");
    std::vector<GChain> out;
    GChain cur;
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    cur.push_back(full);
    std::function<void()> rec = [&]() {
        // copy: growing cur below may reallocate and invalidate back()
        std::vector<int> s = cur.back();
        if (s.empty()) {
            out.push_back(cur);
            return;
        }
        for_each_deletion(s, [&](const std::vector<int>& del) {
            std::vector<int> next;
            std::set_difference(s.begin(), s.end(), del.begin(), del.end(),
                                std::back_inserter(next));
            cur.push_back(std::move(next));
            rec();
            cur.pop_back();
        });
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_generalized_chains(int n) {
    if (n < 1) throw input_error("chain ground set needs n >= 1");
    if (n > 16) throw resource_error("chain count capped at n = 16");
    std::vector<BigInt> g(std::size_t(1) << n, 0);
    g[0] = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) s.push_back(v);
        BigInt acc = 0;
        for_each_deletion(s, [&](const std::vector<int>& del) {
            std::uint32_t dm = 0;
            for (int v : del) dm |= 1u << (v - 1);
            acc += g[mask & ~dm];
        });
        g[mask] = acc;
    }
    return g[(std::size_t(1) << n) - 1];
}

BigInt count_cnr(const RSet& rs) {
    BigInt c = 0;
    for_each_r_permutation(rs, [&](const RTuple& t) {
        if (is_r312_avoiding(t)) c += 1;
    });
    return c;
}

namespace {

void for_each_rset(int n, const std::function<void(const RSet&)>& fn) {
    std::function<void(int, std::vector<int>&)> rec = [&](int next,
                                                          std::vector<int>& acc) {
        fn(RSet(n, acc));
        for (int q = next; q <= n - 1; ++q) {
            acc.push_back(q);
            rec(q + 1, acc);
            acc.pop_back();
        }
    };
    std::vector<int> acc;
    rec(1, acc);
}

}  // namespace

BigInt count_total(int n) {
    if (n < 1) throw input_error("count needs n >= 1");
    if (n > 8) throw resource_error("full summation capped at n = 8");
    BigInt total = 0;
    for_each_rset(n, [&](const RSet& rs) { total += count_cnr(rs); });
    return total;
}

BigInt total_via_formula(int n) {
    if (n < 1) throw input_error("count needs n >= 1");
    BigInt total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt term = binomial(n - k, k) * catalan(n - k);
        term <<= n - k - 1;
        if (k % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

std::vector<BigInt> oeis_a220097(int terms) {
    if (terms < 1) throw input_error("need at least one term");
    if (terms > 5) throw resource_error("sequence enumeration capped at 5 terms");
    std::vector<BigInt> out;
    for (int m = 1; m <= terms; ++m) {
        const int n = 2 * m;
        std::vector<int> divs;
        for (int q = 2; q <= n - 2; q += 2) divs.push_back(q);
        out.push_back(count_cnr(RSet(n, divs)));
    }
    return out;
}

std::vector<BigInt> oeis_a226316(int terms) {
    if (terms < 1) throw input_error("need at least one term");
    std::vector<BigInt> out;
    for (int n = 1; n <= terms; ++n) out.push_back(total_via_formula(n));
    return out;
}

}  // namespace pctk
