#pragma once

#include <utility>
#include <vector>

#include "pctk/rtuple.hpp"
#include "pctk/tableau.hpp"

namespace pctk {

// Data certifying a failure of convexity: lower and upper are members whose
// connecting segment passes through the lattice point interior, a semistandard
// non-member.  interior = lower + ratio * (upper - lower) cellwise.
struct Witness {
    int h;  // carrel holding position b
    int g;  // carrel holding position a
    int a, b, c, d;
    RTuple chi;        // perm with positions b and d exchanged
    RTuple omega;      // chi with positions a and b exchanged
    RTuple chi_bar;    // carrel-sorted chi
    RTuple omega_bar;  // carrel-sorted omega
    Tableau upper;     // key of chi_bar
    Tableau lower;     // key of omega_bar
    Tableau interior;
    std::vector<std::pair<int, int>> cells;  // where upper and interior differ
    Rational ratio;
};

RTuple carrel_sorted(const RTuple& t);

// Deterministic witness for a permutation that contains the pattern.
Witness convexity_witness(const RTuple& perm, const Partition& shape);

}  // namespace pctk
