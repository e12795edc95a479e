#include "permlab/involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlab {

PartialData decompose(const Permutation& pi, int m) {
    if (m < 2) throw std::invalid_argument("decompose requires m >= 2");
    PartialData data;
    data.n = pi.size();
    data.m = m;
    for (const auto& s : build_diagram(pi).squares)
        if (s.rank <= m - 3) data.low_squares.emplace(s.row, s.col);
    for (const auto& p : tail_pairs(pi, {m, PatternKind::B}))
        data.tail_rows.push_back(p.i);
    std::sort(data.tail_rows.begin(), data.tail_rows.end());
    return data;
}

std::vector<int> arrange_dots(const std::vector<int>& rows,
                              std::vector<int> cols,
                              const std::vector<int>& counts) {
    if (rows.size() != cols.size() || rows.size() != counts.size())
        throw std::invalid_argument("arrange_dots: length mismatch");
    std::vector<int> assigned;
    assigned.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const int e = counts[i];
        if (e < 0 || static_cast<size_t>(e) >= cols.size())
            throw std::runtime_error("arrange_dots: count " + std::to_string(e) +
                                     " out of range at step " + std::to_string(i + 1));
        assigned.push_back(cols[static_cast<size_t>(e)]);
        cols.erase(cols.begin() + e);
    }
    return assigned;
}

Permutation reconstruct(const PartialData& data, ReconstructTrace* trace) {
    const int n = data.n;
    const int m = data.m;
    if (n < 1 || m < 2) throw std::invalid_argument("reconstruct: bad dimensions");

    // Greedy provisional placement: low squares white, everything else shaded.
    std::vector<int> dot_col(static_cast<size_t>(n) + 1, 0);  // by row
    std::vector<bool> col_used(static_cast<size_t>(n) + 1, false);
    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            if (col_used[static_cast<size_t>(col)]) continue;
            if (data.low_squares.count({row, col})) continue;
            dot_col[static_cast<size_t>(row)] = col;
            col_used[static_cast<size_t>(col)] = true;
            break;
        }
        if (!dot_col[static_cast<size_t>(row)])
            throw std::runtime_error("reconstruct: row " + std::to_string(row) +
                                     " has no admissible cell");
    }

    // Delete every provisional dot with more than m-3 dots strictly northwest.
    std::vector<bool> kept(static_cast<size_t>(n) + 1, false);
    for (int row = 1; row <= n; ++row) {
        int nw = 0;
        for (int k = 1; k < row; ++k)
            if (dot_col[static_cast<size_t>(k)] < dot_col[static_cast<size_t>(row)]) ++nw;
        kept[static_cast<size_t>(row)] = nw <= m - 3;
    }

    std::vector<int> rows_free, cols_free;
    std::vector<bool> col_kept(static_cast<size_t>(n) + 1, false);
    for (int row = 1; row <= n; ++row)
        if (kept[static_cast<size_t>(row)])
            col_kept[static_cast<size_t>(dot_col[static_cast<size_t>(row)])] = true;
        else
            rows_free.push_back(row);
    for (int col = n; col >= 1; --col)
        if (!col_kept[static_cast<size_t>(col)]) cols_free.push_back(col);

    // Multiplicity of each dotless row among the tail rows; every tail row
    // must be dotless, otherwise the data is inconsistent.
    std::vector<int> counts(rows_free.size(), 0);
    size_t matched = 0;
    for (size_t i = 0; i < rows_free.size(); ++i)
        for (int t : data.tail_rows)
            if (t == rows_free[i]) {
                ++counts[i];
                ++matched;
            }
    if (matched != data.tail_rows.size())
        throw std::runtime_error("reconstruct: tail row carries a kept dot");

    std::vector<int> assigned = arrange_dots(rows_free, cols_free, counts);
    std::vector<int> word(static_cast<size_t>(n), 0);
    for (int row = 1; row <= n; ++row)
        if (kept[static_cast<size_t>(row)])
            word[static_cast<size_t>(row) - 1] = dot_col[static_cast<size_t>(row)];
    for (size_t i = 0; i < rows_free.size(); ++i)
        word[static_cast<size_t>(rows_free[i]) - 1] = assigned[i];

    if (trace) {
        trace->r = rows_free;
        trace->c = cols_free;
        trace->e = counts;
        trace->c_prime = assigned;
    }

    Permutation result{std::move(word)};
    if (decompose(result, m) != data)
        throw std::runtime_error("reconstruct: round trip mismatch, data is not the "
                                 "image of any permutation");
    return result;
}

Permutation phi(const Permutation& pi, int m, ReconstructTrace* trace) {
    if (m < 2) throw std::invalid_argument("phi requires m >= 2");
    PartialData data;
    data.n = pi.size();
    data.m = m;
    for (const auto& s : build_diagram(pi).squares) {
        if (s.rank <= m - 3)
            data.low_squares.emplace(s.row, s.col);
        else
            data.tail_rows.push_back(s.row);
    }
    std::sort(data.tail_rows.begin(), data.tail_rows.end());
    return reconstruct(data, trace);
}

Permutation simion_schmidt(const Permutation& pi) {
    if (stat(pi, {3, PatternKind::A}) != 0)
        throw std::invalid_argument("simion_schmidt requires 132-avoiding input");
    const int n = pi.size();
    std::vector<int> word(static_cast<size_t>(n), 0);
    std::vector<bool> is_minimum_value(static_cast<size_t>(n) + 1, false);
    for (int p : extreme_positions(pi, ExtremeKind::LtrMinima)) {
        word[static_cast<size_t>(p) - 1] = pi.at(p);
        is_minimum_value[static_cast<size_t>(pi.at(p))] = true;
    }
    int next = n;
    for (int i = 1; i <= n; ++i) {
        if (word[static_cast<size_t>(i) - 1]) continue;
        while (is_minimum_value[static_cast<size_t>(next)]) --next;
        word[static_cast<size_t>(i) - 1] = next--;
    }
    return Permutation{std::move(word)};
}

}  // namespace permlab
