#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permlab/dyck.hpp"
#include "permlab/perm.hpp"

namespace permlab {

enum class StatKind { A, B };

struct CountRow {
    int n = 0;
    int m = 0;
    StatKind stat = StatKind::A;
    long long k = 0;
    long long count = 0;

    bool operator==(const CountRow&) const = default;
};

// k -> |{pi in S_n : stat = k}|, rows in ascending k. Counts sum to n!.
using CountTable = std::vector<CountRow>;

inline constexpr int kMaxEnumerationLength = 9;

CountTable distribution(int n, int m, StatKind kind, int jobs = 1);

std::string to_csv(const CountTable& table, bool header = true);

// Visits S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

// Lexicographic unranking, rank in [0, n!).
Permutation nth_permutation(int n, unsigned long long rank);

unsigned long long factorial(int n);

// C(a, b), 0 when b < 0 or b > a.
long long binomial(int a, int b);

enum class FormulaName {
    Catalan,         // C(2n,n)/(n+1)
    Prop9,           // C(2n-1, n-3)
    Noonan,          // (3/n) C(2n, n-3)
    Bona,            // C(2n-3, n-3)
    ReturnsTotal,    // 3/(2n+1) C(2n+1, n-1)
    HighPeaksTotal,  // C(2n-1, n-2)
    TunnelsTotal,    // n C_n
};

long long formula(FormulaName name, int n);
FormulaName formula_by_name(const std::string& name);

// |{pi in S_n : pattern occurs exactly t times}|.
long long count_exact_occurrences(int n, const Permutation& pattern, long long t);

// Tunnel insertion from the one-high-rank-square correspondence: adds the
// white square (i, j) addressed by a qualifying tunnel of boundary_path(pi)
// to the rank-0 squares of pi. The image has a_3 = 1.
Permutation prop9_forward(const Permutation& pi, const Tunnel& t);

// Pairs of successive right-to-left maxima of a 123-avoiding permutation with
// some smaller element left of the first one.
std::vector<TailPair> thomas_pairs(const Permutation& sigma);

// Swaps the entries of a thomas_pairs pair; the image has b_3 = 1.
Permutation thomas_map(const Permutation& sigma, TailPair p);

}  // namespace permlab
