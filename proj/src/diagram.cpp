#include "permlab/diagram.hpp"

#include <stdexcept>

namespace permlab {

std::set<std::pair<int, int>> Diagram::square_set() const {
    std::set<std::pair<int, int>> cells;
    for (const auto& s : squares) cells.emplace(s.row, s.col);
    return cells;
}

Diagram build_diagram(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> pos_of(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos_of[static_cast<size_t>(pi.at(i))] = i;

    Diagram d;
    d.n = n;
    // smaller[c] = #{k < row : pi_k < c}, updated row by row
    std::vector<int> smaller(static_cast<size_t>(n) + 1, 0);
    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            if (pi.at(row) > col && pos_of[static_cast<size_t>(col)] > row)
                d.squares.push_back({row, col, smaller[static_cast<size_t>(col)]});
        }
        for (int c = pi.at(row) + 1; c <= n; ++c) ++smaller[static_cast<size_t>(c)];
    }
    return d;
}

long long stat_a_via_diagram(const Diagram& d, int m) {
    if (m < 2) throw std::invalid_argument("stat_a_via_diagram requires m >= 2");
    long long count = 0;
    for (const auto& s : d.squares)
        if (s.rank >= m - 2) ++count;
    return count;
}

Permutation permutation_from_diagram(int n, const std::set<std::pair<int, int>>& white) {
    std::vector<int> word(static_cast<size_t>(n), 0);
    std::vector<bool> col_used(static_cast<size_t>(n) + 1, false);
    for (int row = 1; row <= n; ++row) {
        int placed = 0;
        for (int col = 1; col <= n; ++col) {
            if (col_used[static_cast<size_t>(col)]) continue;
            if (white.count({row, col})) continue;
            placed = col;
            break;
        }
        if (!placed)
            throw std::runtime_error("permutation_from_diagram: row " +
                                     std::to_string(row) + " has no admissible cell");
        word[static_cast<size_t>(row) - 1] = placed;
        col_used[static_cast<size_t>(placed)] = true;
    }
    Permutation result{std::move(word)};
    if (build_diagram(result).square_set() != white)
        throw std::runtime_error("permutation_from_diagram: square set is not realizable");
    return result;
}

std::vector<int> rank0_shape(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> shape(static_cast<size_t>(n), 0);
    for (const auto& s : build_diagram(pi).squares)
        if (s.rank == 0) ++shape[static_cast<size_t>(s.row) - 1];
    return shape;
}

}  // namespace permlab
