#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pctk/rtuple.hpp"
#include "pctk/scanning.hpp"
#include "pctk/tableau.hpp"

namespace pctk {

// counts of each value 1..n, i.e. the exponent vector of the monomial weight
std::vector<int> content_weight(const Tableau& t);

// membership test: does the scan of t stay cellwise below the key of perm?
bool is_demazure_member(const Tableau& t, const RTuple& perm);

// all semistandard tableaux cellwise below y, in lexicographic order
std::vector<Tableau> principal_ideal(const Tableau& y,
                                     std::uint64_t budget = 500'000);

std::vector<Tableau> demazure_set(const RTuple& perm, const Partition& shape,
                                  std::uint64_t budget = 500'000);

struct DemazurePolynomial {
    // exponent vector -> coefficient, iterated in descending lexicographic order
    std::map<std::vector<int>, BigInt, std::greater<std::vector<int>>> terms;
    std::string to_string() const;
};

DemazurePolynomial demazure_polynomial(const RTuple& perm, const Partition& shape,
                                       std::uint64_t budget = 500'000);

enum class Convexity { convex, nonconvex, segment_closed_only };

struct ConvexityResult {
    Convexity status = Convexity::convex;
    bool exact = true;  // true when the full hull-point search ran to completion
    std::optional<Tableau> certificate;
    std::string label() const;
};

// hull_budget caps the candidate points run through the exact hull test; 0
// means "same as budget".  When the bounding box holds more candidates than
// that, the verdict degrades to the witness construction plus the
// segment-closure scan and is marked inexact.
ConvexityResult check_convexity(const RTuple& perm, const Partition& shape,
                                std::uint64_t budget = 500'000,
                                std::uint64_t hull_budget = 0);

// strict answer: throws resource_error when the budget only allowed the
// weaker segment-closure scan and that scan found no violation
bool is_convex_lattice_set(const RTuple& perm, const Partition& shape,
                           std::uint64_t budget = 500'000,
                           std::uint64_t hull_budget = 0);

}  // namespace pctk
