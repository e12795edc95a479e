#pragma once

#include <set>
#include <utility>
#include <vector>

#include "permlab/diagram.hpp"
#include "permlab/perm.hpp"

namespace permlab {

// The data that determines a permutation uniquely: its diagram squares of
// rank <= m-3 plus the multiset of first components of its B_m tail pairs.
struct PartialData {
    int n = 0;
    int m = 2;
    std::set<std::pair<int, int>> low_squares;
    std::vector<int> tail_rows;  // sorted multiset

    bool operator==(const PartialData&) const = default;
};

PartialData decompose(const Permutation& pi, int m);

// Sorting routine for the dotless rows: c'_i = c_{e_i+1}, removing the chosen
// column as we go. `rows` increasing, `cols` decreasing, one count per row.
std::vector<int> arrange_dots(const std::vector<int>& rows,
                              std::vector<int> cols,
                              const std::vector<int>& counts);

struct ReconstructTrace {
    std::vector<int> r;        // dotless rows, increasing
    std::vector<int> c;        // dotless columns, decreasing
    std::vector<int> e;        // tail-row multiplicities per dotless row
    std::vector<int> c_prime;  // assigned columns
};

// Rebuilds the unique permutation with the given partial data. Throws
// std::runtime_error on non-realizable input (greedy placement stuck,
// counts inconsistent, or round-trip mismatch).
Permutation reconstruct(const PartialData& data, ReconstructTrace* trace = nullptr);

// The involution exchanging a_m and b_m: keep the low-rank squares, turn the
// rows of the rank >= m-2 squares into B_m tail rows, rebuild.
Permutation phi(const Permutation& pi, int m, ReconstructTrace* trace = nullptr);

// Classic map S_n(132) -> S_n(123): fix the left-to-right minima, place the
// remaining values on the free positions in decreasing order.
Permutation simion_schmidt(const Permutation& pi);

}  // namespace permlab
