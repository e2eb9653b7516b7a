#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pctk/chain.hpp"
#include "pctk/partition.hpp"

namespace pctk {

// A filling of a shape, stored by columns: value(j, i) is column j (west to
// east), row i (north to south), both 1-based.  Construction checks structure
// only (column count and lengths); semistandardness is a separate predicate so
// invalid fillings can be built and reported on.
class Tableau {
  public:
    Tableau(Partition shape, std::vector<std::vector<int>> columns);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int value(int j, int i) const;
    const std::vector<int>& column(int j) const;
    const std::vector<std::vector<int>>& columns() const { return cols_; }
    // cells in column-major order: (1,1), (1,2), ..., (2,1), ...
    std::vector<int> flatten() const;
    static Tableau from_flat(const Partition& shape, const std::vector<int>& flat);

    bool operator==(const Tableau& o) const {
        return shape_ == o.shape_ && cols_ == o.cols_;
    }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const { return cols_ < o.cols_; }

  private:
    Partition shape_;
    std::vector<std::vector<int>> cols_;
};

struct TableauViolation {
    int j1, i1, j2, i2;  // offending cell pair ((0,0) marks a range fault)
    std::string what;
};

struct ValidationReport {
    bool ok = true;
    std::optional<TableauViolation> violation;
};

// Columns strictly increase southward, rows weakly increase eastward, values
// lie in [n].  Full-height columns are then automatically the inert filling
// 1..n.  Reports the first offending cell pair in column-major scan order.
ValidationReport validate_tableau(const Tableau& t);
bool is_semistandard(const Tableau& t);

// Semistandard, and column value sets shrink under containment west to east.
bool is_key(const Tableau& t);

// Single sorted column holding the given set (shape: one column of its size).
Tableau column_of_set(int n, const std::vector<int>& s);

// The key whose columns of length q_h all hold block B_h; full-height columns
// are inert.  The shape's column lengths must be exactly the chain's dividers.
Tableau key_of_chain(const RChain& chain, const Partition& shape);
Tableau key_of_perm(const RTuple& perm, const Partition& shape);

// Eastmost value of each row; rows of length zero read the latent 0th column
// (value i).  The result is a tuple over the shape's divider set.
RTuple row_end_list(const Tableau& t);

// Entrywise-largest semistandard filling with the given row end list, built by
// seeding each column's own-carrel rows and propagating min(south - 1, east)
// upward, east to west.
Tableau row_end_max(const Partition& shape, const RTuple& alpha);

// Key whose consecutive column-length classes fill the interval between a new
// low value and the previous class's maximum with consecutive values.
bool is_gapless_key(const Tableau& t);

bool tableau_leq(const Tableau& a, const Tableau& b);

Tableau minimal_tableau(const Partition& shape);

// All semistandard fillings in value order (lex on the column-major cell
// list), optionally restricted to lo <= T <= hi cellwise.  Throws once more
// than `budget` fillings would be produced.
std::vector<Tableau> enumerate_tableaux(const Partition& shape,
                                        std::uint64_t budget = 500'000,
                                        const Tableau* lo = nullptr,
                                        const Tableau* hi = nullptr);

}  // namespace pctk
