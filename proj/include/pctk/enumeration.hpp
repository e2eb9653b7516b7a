#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pctk/chain.hpp"
#include "pctk/rtuple.hpp"
#include "pctk/types.hpp"

namespace pctk {

BigInt binomial(int n, int k);
BigInt catalan(int k);

// All generators emit in increasing lexicographic order on numeric entries.
std::vector<RTuple> gen_r_permutations(const RSet& rs);
std::vector<RTuple> gen_r312_avoiding(const RSet& rs);
std::vector<RTuple> gen_gapless(const RSet& rs);
std::vector<RChain> gen_rcd_chains(const RSet& rs);

// One partition per divider, fitting in a p_h x (n - q_h) box, stored with
// exactly p_h parts (zeros kept).
using ShapeTuple = std::vector<std::vector<int>>;

ShapeTuple shape_tuple_of_gapless(const RTuple& gapless);

// Direct enumeration of the family: boxed partitions chained by the rule
// first-part(h) <= last-part(h+1) + multiplicity of that last part.
std::vector<ShapeTuple> gen_shape_tuples(const RSet& rs);

// Pattern avoidance with the three positions required to sit in three
// different carrels; sigma is a permutation of {1, 2, 3}.
bool is_sigma_avoiding(const RTuple& perm, const std::array<int, 3>& sigma);
std::vector<RTuple> gen_sigma_avoiding(const RSet& rs, const std::array<int, 3>& sigma);

// Descending set chains [n] = S_0 > S_1 > ... > {}, every deletion removing
// whole clumps from the top plus optionally part of the next clump down.
// Blocks are stored descending, endpoints included.
using GChain = std::vector<std::vector<int>>;

std::vector<GChain> gen_generalized_chains(int n, std::uint64_t budget = 500'000);
BigInt count_generalized_chains(int n);  // subset dynamic program, n <= 16

BigInt count_cnr(const RSet& rs);
BigInt count_total(int n);        // sum of count_cnr over all divider sets, n <= 8
BigInt total_via_formula(int n);  // alternating closed form

std::vector<BigInt> oeis_a220097(int terms);  // terms <= 5
std::vector<BigInt> oeis_a226316(int terms);

}  // namespace pctk
