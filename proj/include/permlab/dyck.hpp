#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

struct DyckPath {
    std::string steps;  // word over {U, D}
    int semilength = 0;

    auto operator<=>(const DyckPath&) const = default;
};

DyckPath parse_path(std::string_view word);

// Horizontal segment below the path meeting it exactly at its two endpoints.
// One tunnel per up-step: left endpoint at the up-step's start, right endpoint
// at the matching down-step's end.
struct Tunnel {
    int left_x = 0;
    int right_x = 0;
    int height = 0;

    int length() const { return right_x - left_x; }
    auto operator<=>(const Tunnel&) const = default;
};

std::vector<Tunnel> tunnels(const DyckPath& d);  // sorted by left_x

struct PathFeatures {
    long long returns = 0;             // tunnels of height 0
    long long high_peaks = 0;          // tunnels of height >= 1, length 2
    long long valleys_above_zero = 0;  // DU at a level greater than 0
    long long qualifying_tunnels = 0;  // height >= 1 and length >= 4

    bool operator==(const PathFeatures&) const = default;
};

PathFeatures path_features(const DyckPath& d);

// Boundary of the rank-0 component of a 132-avoiding permutation's diagram,
// read from the lower-left to the upper-right corner of the array. Up-step k
// (in path order) lies in array row n+1-k, down-step k in array column k.
DyckPath boundary_path(const Permutation& pi);

inline constexpr int kMaxPathSemilength = 14;

// All C_n paths exactly once, lexicographic with U < D.
void enumerate_paths(int n, const std::function<void(const DyckPath&)>& visit);

}  // namespace permlab
