#include "pctk/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pctk/demazure.hpp"
#include "pctk/enumeration.hpp"
#include "pctk/format.hpp"
#include "pctk/witness.hpp"

namespace pctk {

namespace {

std::vector<RSet> all_rsets(int n) {
    std::vector<RSet> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> divs;
        for (int q = 1; q <= n - 1; ++q)
            if (mask & (1u << (q - 1))) divs.push_back(q);
        out.emplace_back(n, divs);
    }
    return out;
}

// every nested chain with block sizes q_1 < ... < q_r, no deletion condition
std::vector<RChain> gen_all_chains(const RSet& rs) {
    const int n = rs.n();
    const int r = rs.r();
    std::vector<RChain> out;
    std::vector<std::vector<int>> blocks(r + 2);
    for (int v = 1; v <= n; ++v) blocks[r + 1].push_back(v);
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
                blocks[h] = pick;
                rec(h - 1);
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
    return out;
}

class Suite {
  public:
    Suite(std::string id, std::string title) : res_{std::move(id), std::move(title), SuiteStatus::pass, {}} {}

    void note(std::string line) { res_.detail.push_back(std::move(line)); }

    void require(bool ok, const std::string& what) {
        if (ok) return;
        res_.status = SuiteStatus::fail;
        if (fails_ < 8)
            res_.detail.push_back("FAIL: " + what);
        else if (fails_ == 8)
            res_.detail.push_back("FAIL: (further failures suppressed)");
        ++fails_;
    }

    SuiteResult finish() && {
        if (res_.status == SuiteStatus::fail)
            res_.detail.push_back("total failures: " + std::to_string(fails_));
        return std::move(res_);
    }

    SuiteResult skipped(const std::string& why) && {
        res_.status = SuiteStatus::skip;
        res_.detail.push_back(why);
        return std::move(res_);
    }

  private:
    SuiteResult res_;
    std::uint64_t fails_ = 0;
};

std::set<std::vector<int>> tuple_set(const std::vector<RTuple>& ts) {
    std::set<std::vector<int>> s;
    for (const auto& t : ts) s.insert(t.entries());
    return s;
}

std::set<std::vector<int>> tableau_set(const std::vector<Tableau>& ts) {
    std::set<std::vector<int>> s;
    for (const auto& t : ts) s.insert(t.flatten());
    return s;
}

SuiteResult suite_bijections(int nmax) {
    Suite s("4.5", "rank/inverse bijections and the chain criterion");
    const int cap = std::min(nmax, 6);
    std::uint64_t perms_seen = 0;
    for (int n = 1; n <= cap; ++n)
        for (const RSet& rs : all_rsets(n)) {
            auto perms = gen_r_permutations(rs);
            perms_seen += perms.size();
            std::vector<RTuple> avoiding;
            for (const auto& p : perms) {
                bool av = is_r312_avoiding(p);
                bool chain_ok = is_rcd_chain(chain_of_perm(p));
                s.require(av == chain_ok,
                          "chain criterion mismatch at " + to_text(p));
                if (av) avoiding.push_back(p);
            }
            auto gapless = gen_gapless(rs);
            std::vector<RTuple> images;
            for (const auto& p : avoiding) {
                RTuple g = rank_tuple(p);
                s.require(is_gapless(g), "rank tuple not gapless at " + to_text(p));
                s.require(is_r_flag(g), "rank tuple fails the flag condition at " + to_text(p));
                s.require(gapless_to_perm(g) == p,
                          "inverse map failed to recover " + to_text(p));
                images.push_back(g);
            }
            s.require(tuple_set(images) == tuple_set(gapless),
                      "rank image differs from the gapless family at n=" +
                          std::to_string(n) + " R=" + to_text(rs));
            for (const auto& g : gapless)
                s.require(rank_tuple(gapless_to_perm(g)) == g,
                          "round trip failed at gapless " + to_text(g));
        }
    s.note("checked " + std::to_string(perms_seen) + " permutations over all divider sets, n <= " +
           std::to_string(cap));
    return std::move(s).finish();
}

SuiteResult suite_key_sets(int nmax) {
    Suite s("5.2", "coincidence of the three key families");
    const int cap = std::min(nmax, 5);
    for (int n = 1; n <= cap; ++n)
        for (const RSet& rs : all_rsets(n)) {
            Partition shape = Partition::minimal_for(rs);
            std::vector<Tableau> from_perms;
            for (const auto& p : gen_r312_avoiding(rs)) {
                Tableau y = key_of_perm(p, shape);
                s.require(row_end_max(shape, rank_tuple(p)) == y,
                          "row-end-max disagrees with the key at " + to_text(p));
                from_perms.push_back(y);
            }
            std::vector<Tableau> gapless_keys;
            for (const auto& c : gen_all_chains(rs)) {
                Tableau y = key_of_chain(c, shape);
                if (is_gapless_key(y)) gapless_keys.push_back(y);
            }
            auto gapless = gen_gapless(rs);
            std::vector<Tableau> from_ends;
            for (const auto& g : gapless) from_ends.push_back(row_end_max(shape, g));
            auto a = tableau_set(from_perms), b = tableau_set(gapless_keys),
                 c = tableau_set(from_ends);
            s.require(a == b, "avoiding keys != gapless keys at n=" +
                                  std::to_string(n) + " R=" + to_text(rs));
            s.require(b == c, "gapless keys != row-end-max images at n=" +
                                  std::to_string(n) + " R=" + to_text(rs));
            std::vector<RTuple> end_lists;
            for (const auto& y : gapless_keys) end_lists.push_back(row_end_list(y));
            s.require(tuple_set(end_lists) == tuple_set(gapless),
                      "row end lists of gapless keys != gapless tuples at n=" +
                          std::to_string(n) + " R=" + to_text(rs));
        }
    const int full_cap = std::min(nmax, 6);
    for (int n = 1; n <= full_cap; ++n) {
        std::vector<int> divs;
        for (int q = 1; q <= n - 1; ++q) divs.push_back(q);
        RSet rs(n, divs);
        Partition shape = Partition::minimal_for(rs);
        BigInt count = 0;
        for (const auto& c : gen_all_chains(rs))
            if (is_gapless_key(key_of_chain(c, shape))) count += 1;
        s.require(count == catalan(n), "gapless key count != Catalan at n=" +
                                           std::to_string(n));
    }
    s.note("key families compared for n <= " + std::to_string(cap) +
           "; full-case counts for n <= " + std::to_string(full_cap));
    return std::move(s).finish();
}

SuiteResult suite_scanning(int nmax) {
    Suite s("6.1", "scan facts, the residual identity, and interval membership");
    const int cap = std::min(nmax, 4);
    std::uint64_t tableaux_seen = 0;
    for (int n = 1; n <= cap; ++n)
        for (const RSet& rs : all_rsets(n)) {
            Partition shape = Partition::minimal_for(rs);
            auto all_t = enumerate_tableaux(shape);
            tableaux_seen += all_t.size();
            for (const Tableau& t : all_t) {
                ScanResult sr = scan_details(t);
                s.require(is_key(sr.scan), "scan is not a key");
                s.require(tableau_leq(t, sr.scan), "scan lowered a cell");
                s.require(scan_tableau(sr.scan) == sr.scan, "scan not idempotent");
                for (int l = 1; l <= shape.width(); ++l)
                    for (int k = 1; k <= shape.col_len(l); ++k)
                        s.require(sr.scan.value(l, k) ==
                                      std::max(t.value(l, k), sr.residual[l - 1][k - 1]),
                                  "residual identity failed");
            }
            auto perms = gen_r_permutations(rs);
            std::map<std::vector<int>, std::set<std::vector<int>>> seen_sets;
            for (const auto& p : perms) {
                Tableau y = key_of_perm(p, shape);
                auto d = demazure_set(p, shape);
                auto dset = tableau_set(d);
                s.require(dset.count(y.flatten()) == 1, "key missing from its own set");
                for (const Tableau& t : d)
                    s.require(tableau_leq(t, y), "member above the key at " + to_text(p));
                for (const Tableau& t : all_t) {
                    bool member = tableau_leq(scan_tableau(t), y);
                    bool intervals = true;
                    for (int l = 1; l <= shape.width() && intervals; ++l)
                        for (int k = 1; k <= shape.col_len(l); ++k) {
                            ASet as = a_set(t, y, l, k);
                            if (as.empty || t.value(l, k) < as.lo ||
                                t.value(l, k) > as.hi) {
                                intervals = false;
                                break;
                            }
                        }
                    s.require(member == intervals,
                              "interval membership mismatch at " + to_text(p));
                }
                seen_sets[p.entries()] = std::move(dset);
            }
            for (auto it = seen_sets.begin(); it != seen_sets.end(); ++it)
                for (auto jt = std::next(it); jt != seen_sets.end(); ++jt)
                    s.require(it->second != jt->second,
                              "two permutations share one tableau set");
        }
    s.note("scanned " + std::to_string(tableaux_seen) + " tableaux, n <= " +
           std::to_string(cap));
    return std::move(s).finish();
}

SuiteResult suite_ideal(int nmax) {
    Suite s("6.3", "tableau sets of avoiding permutations are full ideals");
    const int cap = std::min(nmax, 4);
    for (int n = 1; n <= cap; ++n)
        for (const RSet& rs : all_rsets(n)) {
            Partition shape = Partition::minimal_for(rs);
            for (const auto& p : gen_r312_avoiding(rs)) {
                Tableau y = key_of_perm(p, shape);
                s.require(tableau_set(demazure_set(p, shape)) ==
                              tableau_set(principal_ideal(y)),
                          "set != ideal at avoiding " + to_text(p));
            }
        }
    s.note("ideals compared for n <= " + std::to_string(cap));
    return std::move(s).finish();
}

SuiteResult suite_convexity(int nmax) {
    Suite s("7.1", "convex iff avoiding iff ideal, by the exact hull oracle");
    const int cap = std::min(nmax, 4);
    if (nmax > cap) s.note("clamped to n <= 4 for the hull oracle");
    std::uint64_t perms_seen = 0;
    for (int n = 1; n <= cap; ++n)
        for (const RSet& rs : all_rsets(n)) {
            Partition shape = Partition::minimal_for(rs);
            for (const auto& p : gen_r_permutations(rs)) {
                ++perms_seen;
                bool avoiding = is_r312_avoiding(p);
                bool ideal = tableau_set(demazure_set(p, shape)) ==
                             tableau_set(principal_ideal(key_of_perm(p, shape)));
                bool convex = is_convex_lattice_set(p, shape);
                s.require(avoiding == ideal, "avoiding/ideal mismatch at " + to_text(p));
                s.require(avoiding == convex,
                          "avoiding/convexity mismatch at " + to_text(p));
            }
        }
    s.note("hull oracle agreed on " + std::to_string(perms_seen) +
           " permutations, n <= " + std::to_string(cap));
    return std::move(s).finish();
}

SuiteResult suite_witness(int nmax) {
    Suite s("7.2", "certified witnesses for every containing permutation");
    const int cap = std::min(nmax, 4);
    if (nmax > cap) s.note("clamped to n <= 4");
    std::uint64_t witnesses = 0;
    for (int n = 1; n <= cap; ++n)
        for (const RSet& rs : all_rsets(n)) {
            Partition shape = Partition::minimal_for(rs);
            for (const auto& p : gen_r_permutations(rs)) {
                if (is_r312_avoiding(p)) continue;
                ++witnesses;
                Witness w = convexity_witness(p, shape);
                s.require(tableau_leq(w.lower, w.upper) && !(w.lower == w.upper),
                          "endpoints not ordered at " + to_text(p));
                s.require(tableau_leq(w.upper, key_of_perm(p, shape)),
                          "upper endpoint above the key at " + to_text(p));
                s.require(w.ratio > 0 && w.ratio < 1,
                          "ratio outside (0,1) at " + to_text(p));
                bool on_segment = true;
                for (int j = 1; j <= shape.width(); ++j)
                    for (int i = 1; i <= shape.col_len(j); ++i) {
                        Rational blend =
                            Rational(w.lower.value(j, i)) +
                            w.ratio * (w.upper.value(j, i) - w.lower.value(j, i));
                        if (blend != w.interior.value(j, i)) on_segment = false;
                    }
                s.require(on_segment, "interior point off the segment at " + to_text(p));
                s.require(is_semistandard(w.interior),
                          "interior point not semistandard at " + to_text(p));
                s.require(is_demazure_member(w.lower, p) &&
                              is_demazure_member(w.upper, p),
                          "an endpoint is not a member at " + to_text(p));
                s.require(!is_demazure_member(w.interior, p),
                          "interior point is a member at " + to_text(p));
            }
        }
    s.note("witnesses constructed and checked: " + std::to_string(witnesses) +
           ", n <= " + std::to_string(cap));
    return std::move(s).finish();
}

SuiteResult suite_counts(int nmax) {
    Suite s("9.1", "equinumerous families and total counts");
    const int cap = std::min(nmax, 6);
    for (int n = 1; n <= cap; ++n) {
        BigInt total = 0;
        for (const RSet& rs : all_rsets(n)) {
            auto avoiding = gen_r312_avoiding(rs);
            auto gapless = gen_gapless(rs);
            auto chains = gen_rcd_chains(rs);
            auto shapes = gen_shape_tuples(rs);
            auto opart = gen_sigma_avoiding(rs, {3, 1, 2});
            std::size_t c = avoiding.size();
            s.require(gapless.size() == c, "gapless count differs at n=" +
                                               std::to_string(n) + " R=" + to_text(rs));
            s.require(chains.size() == c, "chain count differs at n=" +
                                              std::to_string(n) + " R=" + to_text(rs));
            s.require(shapes.size() == c, "shape tuple count differs at n=" +
                                              std::to_string(n) + " R=" + to_text(rs));
            s.require(opart.size() == c,
                      "ordered partition count differs at n=" + std::to_string(n) +
                          " R=" + to_text(rs));
            std::set<ShapeTuple> direct(shapes.begin(), shapes.end());
            std::set<ShapeTuple> mapped;
            for (const auto& g : gapless) mapped.insert(shape_tuple_of_gapless(g));
            s.require(direct == mapped,
                      "shape tuples differ from carrel destrictification at n=" +
                          std::to_string(n) + " R=" + to_text(rs));
            if (n <= std::min(nmax, 5)) {
                const std::array<std::array<int, 3>, 6> sigmas{
                    {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
                for (const auto& sig : sigmas)
                    s.require(gen_sigma_avoiding(rs, sig).size() == c,
                              "pattern family count differs at n=" + std::to_string(n) +
                                  " R=" + to_text(rs));
            }
            if (n <= std::min(nmax, 4)) {
                Partition shape = Partition::minimal_for(rs);
                BigInt convex = 0;
                for (const auto& p : gen_r_permutations(rs))
                    if (is_convex_lattice_set(p, shape)) convex += 1;
                s.require(convex == c, "convex-set count differs at n=" +
                                           std::to_string(n) + " R=" + to_text(rs));
                std::vector<Tableau> keys_of_chains;
                for (const auto& ch : chains)
                    keys_of_chains.push_back(key_of_chain(ch, shape));
                std::vector<Tableau> gapless_keys;
                for (const auto& g : gapless) {
                    Tableau m = row_end_max(shape, g);
                    if (is_gapless_key(m)) gapless_keys.push_back(m);
                }
                s.require(tableau_set(keys_of_chains) == tableau_set(gapless_keys),
                          "chain keys differ from gapless keys at n=" +
                              std::to_string(n) + " R=" + to_text(rs));
            }
            total += BigInt(c);
        }
        BigInt formula = total_via_formula(n);
        BigInt chains_dp = count_generalized_chains(n);
        s.require(total == formula,
                  "summed count differs from the closed form at n=" + std::to_string(n));
        s.require(chains_dp == formula,
                  "generalized chain count differs from the closed form at n=" +
                      std::to_string(n));
        s.note("C_" + std::to_string(n) + "^Σ = " + total.str());
    }
    return std::move(s).finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(int n_max,
                                          const std::optional<std::string>& only) {
    if (n_max < 1) throw input_error("verification needs n_max >= 1");
    if (n_max > 6) throw resource_error("verification capped at n_max = 6");
    struct Entry {
        const char* id;
        const char* title;
        SuiteResult (*run)(int);
    };
    const Entry entries[] = {
        {"4.5", "rank/inverse bijections and the chain criterion", suite_bijections},
        {"5.2", "coincidence of the three key families", suite_key_sets},
        {"6.1", "scan facts, the residual identity, and interval membership",
         suite_scanning},
        {"6.3", "tableau sets of avoiding permutations are full ideals", suite_ideal},
        {"7.1", "convex iff avoiding iff ideal, by the exact hull oracle",
         suite_convexity},
        {"7.2", "certified witnesses for every containing permutation", suite_witness},
        {"9.1", "equinumerous families and total counts", suite_counts},
    };
    if (only) {
        bool known = false;
        for (const auto& e : entries) known = known || *only == e.id;
        if (!known) throw input_error("unknown suite id '" + *only + "'");
    }
    std::vector<SuiteResult> out;
    for (const auto& e : entries) {
        if (only && *only != e.id) continue;
        try {
            out.push_back(e.run(n_max));
        } catch (const resource_error& ex) {
            Suite sk(e.id, e.title);
            out.push_back(std::move(sk).skipped(std::string("resource guard: ") + ex.what()));
        }
    }
    return out;
}

}  // namespace pctk
