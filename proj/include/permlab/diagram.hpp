#pragma once

#include <set>
#include <utility>
#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

// White cell of the shading construction. Row 1 is the top of the array,
// column c holds value c, the dot of position i sits at (i, pi_i).
// rank = number of dots strictly northwest (smaller row and smaller column).
struct RankedSquare {
    int row = 0;
    int col = 0;
    int rank = 0;
    auto operator<=>(const RankedSquare&) const = default;
};

struct Diagram {
    int n = 0;
    std::vector<RankedSquare> squares;  // sorted by (row, col)

    std::set<std::pair<int, int>> square_set() const;
};

Diagram build_diagram(const Permutation& pi);

// Prop-1 route to a_m: squares of rank >= m-2.
long long stat_a_via_diagram(const Diagram& d, int m);

// Inverts a full white-square set: row by row, dot in the leftmost shaded
// cell whose column is still free. Throws std::runtime_error if some row has
// no admissible cell or the round trip does not reproduce `white`.
Permutation permutation_from_diagram(int n, const std::set<std::pair<int, int>>& white);

// lambda_i = number of rank-0 squares in row i; weakly decreasing.
std::vector<int> rank0_shape(const Permutation& pi);

}  // namespace permlab
