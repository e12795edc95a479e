#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

// One-line notation word over {1..n}. Positions and values are 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);  // throws std::invalid_argument

    int size() const { return static_cast<int>(word_.size()); }
    int at(int pos) const { return word_[static_cast<size_t>(pos) - 1]; }  // 1-based
    const std::vector<int>& word() const { return word_; }

    // "3 8 5 10 2 4 1 9 6 7"
    std::string str() const;

    static Permutation identity(int n);
    // Accepts single spaces or commas between decimal values.
    static Permutation parse(std::string_view text);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

Permutation make_permutation(std::vector<int> values);

enum class PatternKind { A, B };

// A_m: patterns of S_m ending in m,(m-1).  B_m: ending in (m-1),m.
struct PatternClass {
    int m = 2;
    PatternKind kind = PatternKind::A;
};

struct TailPair {
    int i = 0;
    int j = 0;
    auto operator<=>(const TailPair&) const = default;
};

// All increasing index tuples i_1<...<i_m whose letters are order-isomorphic
// to the pattern, in lexicographic order. 1-based indices.
std::vector<std::vector<int>> occurrences(const Permutation& pattern,
                                          const Permutation& host);

// Direct characterization of the pairs ending occurrences of class patterns:
//   kind A: i<j, pi_i>pi_j, and pi_j exceeds at least m-2 letters left of i;
//   kind B: i<j, pi_i<pi_j, and pi_i exceeds at least m-2 letters left of i.
std::set<TailPair> tail_pairs(const Permutation& pi, PatternClass cls);

// a_m / b_m: the number of distinct tail pairs.
long long stat(const Permutation& pi, PatternClass cls);

enum class ExtremeKind { LtrMinima, RlMaxima };

std::vector<int> extreme_positions(const Permutation& pi, ExtremeKind kind);

// The (m-2)! members of A_m or B_m.
std::vector<Permutation> class_members(PatternClass cls);

}  // namespace permlab
