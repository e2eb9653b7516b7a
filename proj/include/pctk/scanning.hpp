#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pctk/tableau.hpp"

namespace pctk {

// Indices (1-based) of the earliest weakly increasing subsequence: take the
// first entry, then every later entry at least as large as the last one taken.
std::vector<int> ewis(const std::vector<int>& seq);

struct ScanResult {
    Tableau source;
    Tableau scan;
    // path extracted for cell (l, k), as (column, row) cells in visit order
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> paths;
    // residual[l-1][k-1]: largest bottom value strictly right of column l
    // just before the (l, k) path is removed; 1 when nothing remains there
    std::vector<std::vector<int>> residual;
};

ScanResult scan_details(const Tableau& t);

// the scan tableau alone
Tableau scan_tableau(const Tableau& t);

// recompute residual[l][k] for a single cell
int residual_max(const Tableau& t, int l, int k);

// closed interval of values admissible at cell (l, k) of t against the bound y
struct ASet {
    bool empty = false;
    int lo = 0;
    int hi = 0;
};

ASet a_set(const Tableau& t, const Tableau& y, int l, int k);

}  // namespace pctk
