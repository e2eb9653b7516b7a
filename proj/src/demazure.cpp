#include "pctk/demazure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pctk/hull.hpp"
#include "pctk/witness.hpp"

namespace pctk {

std::vector<int> content_weight(const Tableau& t) {
    std::vector<int> w(t.shape().n(), 0);
    for (int v : t.flatten()) ++w[v - 1];
    return w;
}

namespace {

Tableau key_bound(const RTuple& perm, const Partition& shape) {
    if (!is_r_permutation(perm)) throw input_error("membership bound needs a permutation");
    return key_of_perm(perm, shape);
}

bool member_against(const Tableau& t, const Tableau& y) {
    bool member = tableau_leq(scan_tableau(t), y);
#ifdef PCTK_ENABLE_INTERNAL_CHECKS
    if (t.shape().n() <= 6) {
        bool via_aset = true;
        for (int l = 1; l <= t.shape().width() && via_aset; ++l)
            for (int k = 1; k <= t.shape().col_len(l); ++k) {
                ASet s = a_set(t, y, l, k);
                if (s.empty || t.value(l, k) < s.lo || t.value(l, k) > s.hi) {
                    via_aset = false;
                    break;
                }
            }
        PCTK_CHECK(member == via_aset, "admissible-interval route must agree");
    }
#endif
    return member;
}

}  // namespace

bool is_demazure_member(const Tableau& t, const RTuple& perm) {
    return member_against(t, key_bound(perm, t.shape()));
}

std::vector<Tableau> principal_ideal(const Tableau& y, std::uint64_t budget) {
    if (!is_semistandard(y)) throw input_error("ideal top must be semistandard");
    return enumerate_tableaux(y.shape(), budget, nullptr, &y);
}

std::vector<Tableau> demazure_set(const RTuple& perm, const Partition& shape,
                                  std::uint64_t budget) {
    Tableau y = key_bound(perm, shape);
    // sound cutoff: the scan never lowers a cell, so members lie below y cellwise
    std::vector<Tableau> out;
    for (const Tableau& t : enumerate_tableaux(shape, budget, nullptr, &y))
        if (member_against(t, y)) out.push_back(t);
    return out;
}

std::string DemazurePolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [expo, coeff] : terms) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (expo[i] > 1) mono += "^" + std::to_string(expo[i]);
        }
        if (mono.empty()) {
            s += coeff.str();
        } else if (coeff == 1) {
            s += mono;
        } else {
            s += coeff.str() + "*" + mono;
        }
    }
    return s;
}

DemazurePolynomial demazure_polynomial(const RTuple& perm, const Partition& shape,
                                       std::uint64_t budget) {
    DemazurePolynomial p;
    for (const Tableau& t : demazure_set(perm, shape, budget))
        p.terms[content_weight(t)] += 1;
    return p;
}

std::string ConvexityResult::label() const {
    switch (status) {
        case Convexity::convex:
            return "convex";
        case Convexity::nonconvex:
            return exact ? "nonconvex" : "certified-nonconvex";
        case Convexity::segment_closed_only:
            return "segment-closed-only";
    }
    return "unknown";
}

ConvexityResult check_convexity(const RTuple& perm, const Partition& shape,
                                std::uint64_t budget, std::uint64_t hull_budget) {
    if (hull_budget == 0) hull_budget = budget;
    std::vector<Tableau> members = demazure_set(perm, shape, budget);
    std::vector<std::vector<int>> pts;
    pts.reserve(members.size());
    for (const Tableau& t : members) pts.push_back(t.flatten());

    ConvexityResult res;
    if (members.size() <= 1) return res;

    std::vector<int> lo = pts[0], hi = pts[0];
    for (const auto& p : pts)
        for (std::size_t c = 0; c < p.size(); ++c) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
    std::set<std::vector<int>> member_pts(pts.begin(), pts.end());

    // Every lattice point of the hull is a semistandard filling inside the
    // cellwise bounding box, because the semistandard inequalities and the
    // box bounds all hold on the generating points and are linear.
    try {
        Tableau tlo = Tableau::from_flat(shape, lo);
        Tableau thi = Tableau::from_flat(shape, hi);
        for (const Tableau& cand : enumerate_tableaux(shape, hull_budget, &tlo, &thi)) {
            std::vector<int> flat = cand.flatten();
            if (member_pts.count(flat)) continue;
            if (in_convex_hull(pts, flat)) {
                res.status = Convexity::nonconvex;
                res.certificate = cand;
                return res;
            }
        }
        return res;  // convex, exact
    } catch (const resource_error&) {
        // fall through to the cheap certificates
    }

    res.exact = false;
    if (!is_r312_avoiding(perm)) {
        // the witness construction certifies non-convexity without the hull
        Witness w = convexity_witness(perm, shape);
        res.status = Convexity::nonconvex;
        res.certificate = w.interior;
        return res;
    }
    std::uint64_t steps = 0;
    for (std::size_t u = 0; u < pts.size(); ++u)
        for (std::size_t v = u + 1; v < pts.size(); ++v) {
            if (++steps > budget)
                throw resource_error("convexity scan exceeded its budget");
            int g = 0;
            for (std::size_t c = 0; c < pts[u].size(); ++c)
                g = std::gcd(g, pts[v][c] - pts[u][c]);
            for (int t = 1; t < g; ++t) {
                std::vector<int> mid(pts[u].size());
                for (std::size_t c = 0; c < mid.size(); ++c)
                    mid[c] = pts[u][c] + (pts[v][c] - pts[u][c]) / g * t;
                if (!member_pts.count(mid)) {
                    res.status = Convexity::nonconvex;
                    res.certificate = Tableau::from_flat(shape, mid);
                    return res;
                }
            }
        }
    res.status = Convexity::segment_closed_only;
    return res;
}

bool is_convex_lattice_set(const RTuple& perm, const Partition& shape,
                           std::uint64_t budget, std::uint64_t hull_budget) {
    ConvexityResult res = check_convexity(perm, shape, budget, hull_budget);
    if (res.status == Convexity::segment_closed_only)
        throw resource_error("convexity undecided within the budget");
    return res.status == Convexity::convex;
}

}  // namespace pctk
