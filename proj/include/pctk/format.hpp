#pragma once

#include <string>

#include "pctk/chain.hpp"
#include "pctk/enumeration.hpp"
#include "pctk/rtuple.hpp"
#include "pctk/tableau.hpp"

namespace pctk {

// Divider sets render as "3,8"; the empty set renders as "-".
std::string to_text(const RSet& rs);
RSet parse_rset(int n, const std::string& s);

// Tuples render carrel by carrel: "2,4,6;1,5,7,8,9;3".  Parsing recovers the
// divider positions from the semicolons.
std::string to_text(const RTuple& t);
RTuple parse_rtuple(const std::string& s);

// Partitions render as "2,1,0" with one entry per row.
std::string to_text(const Partition& p);
Partition parse_partition(const std::string& s);

// Nested chains render ascending: "- < 3 < 3,8 < 1,2,...".
std::string to_text(const RChain& c);

// Generalized chains render descending: "1,2,3 > 1,3 > 3 > -".
// Named apart from to_text because GChain and ShapeTuple are the same type.
std::string gchain_text(const GChain& c);

// One parenthesized partition per divider, zero parts trimmed: "(2,1) (1) ()".
std::string shape_tuple_text(const ShapeTuple& mu);

// Row-aligned grid, one line per nonempty row.
std::string to_grid(const Tableau& t);

std::string rtuple_to_json(const RTuple& t);
RTuple rtuple_from_json(const std::string& text);

std::string tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& text);

std::string chain_to_json(const RChain& c);
RChain chain_from_json(const std::string& text);

}  // namespace pctk
