#include "permlab/lab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permlab/diagram.hpp"

namespace permlab {

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
    return f;
}

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    // exact at every step: the running product over i terms is i-choose-less
    unsigned long long result = 1;
    for (int i = 1; i <= b; ++i) {
        result = result * static_cast<unsigned long long>(a - b + i) /
                 static_cast<unsigned long long>(i);
    }
    return static_cast<long long>(result);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        visit(Permutation{word});
    } while (std::next_permutation(word.begin(), word.end()));
}

Permutation nth_permutation(int n, unsigned long long rank) {
    if (rank >= factorial(n))
        throw std::invalid_argument("nth_permutation: rank out of range");
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n));
    for (int k = n; k >= 1; --k) {
        const unsigned long long block = factorial(k - 1);
        const size_t idx = static_cast<size_t>(rank / block);
        rank %= block;
        word.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return Permutation{std::move(word)};
}

namespace {

// Splits [0, n!) into contiguous rank ranges, runs `body` on each worker's
// range, merges the per-worker k->count maps by addition.
std::map<long long, long long> tally_over_sn(
    int n, int jobs, const std::function<long long(const Permutation&)>& value) {
    const unsigned long long total = factorial(n);
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<unsigned long long>(
                                               total, 64))));
    std::vector<std::map<long long, long long>> partial(static_cast<size_t>(jobs));
    auto worker = [&](int w) {
        const unsigned long long lo = total * static_cast<unsigned long long>(w) /
                                      static_cast<unsigned long long>(jobs);
        const unsigned long long hi = total * static_cast<unsigned long long>(w + 1) /
                                      static_cast<unsigned long long>(jobs);
        if (lo >= hi) return;
        std::vector<int> word = nth_permutation(n, lo).word();
        auto& local = partial[static_cast<size_t>(w)];
        for (unsigned long long r = lo; r < hi; ++r) {
            ++local[value(Permutation{word})];
            std::next_permutation(word.begin(), word.end());
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    std::map<long long, long long> merged;
    for (const auto& local : partial)
        for (const auto& [k, c] : local) merged[k] += c;
    return merged;
}

}  // namespace

CountTable distribution(int n, int m, StatKind kind, int jobs) {
    if (n < 1 || n > kMaxEnumerationLength)
        throw std::invalid_argument("distribution: n out of range 1.." +
                                    std::to_string(kMaxEnumerationLength));
    if (m < 2) throw std::invalid_argument("distribution: m must be >= 2");
    const PatternClass cls{m, kind == StatKind::A ? PatternKind::A : PatternKind::B};
    const auto tally =
        tally_over_sn(n, jobs, [&](const Permutation& pi) { return stat(pi, cls); });
    CountTable table;
    for (const auto& [k, count] : tally) table.push_back({n, m, kind, k, count});
    return table;
}

std::string to_csv(const CountTable& table, bool header) {
    std::ostringstream os;
    if (header) os << "n,m,stat,k,count\n";
    for (const auto& row : table)
        os << row.n << ',' << row.m << ',' << (row.stat == StatKind::A ? 'a' : 'b')
           << ',' << row.k << ',' << row.count << '\n';
    return os.str();
}

long long formula(FormulaName name, int n) {
    if (n < 1) throw std::invalid_argument("formula: n must be >= 1");
    switch (name) {
        case FormulaName::Catalan:
            return binomial(2 * n, n) / (n + 1);
        case FormulaName::Prop9:
            return binomial(2 * n - 1, n - 3);
        case FormulaName::Noonan:
            return 3 * binomial(2 * n, n - 3) / n;
        case FormulaName::Bona:
            return binomial(2 * n - 3, n - 3);
        case FormulaName::ReturnsTotal:
            return 3 * binomial(2 * n + 1, n - 1) / (2 * n + 1);
        case FormulaName::HighPeaksTotal:
            return binomial(2 * n - 1, n - 2);
        case FormulaName::TunnelsTotal:
            return n * formula(FormulaName::Catalan, n);
    }
    throw std::invalid_argument("formula: unknown name");
}

FormulaName formula_by_name(const std::string& name) {
    if (name == "catalan") return FormulaName::Catalan;
    if (name == "prop9") return FormulaName::Prop9;
    if (name == "noonan") return FormulaName::Noonan;
    if (name == "bona") return FormulaName::Bona;
    if (name == "returns_total") return FormulaName::ReturnsTotal;
    if (name == "high_peaks_total") return FormulaName::HighPeaksTotal;
    if (name == "tunnels_total") return FormulaName::TunnelsTotal;
    throw std::invalid_argument("formula: unknown name '" + name + "'");
}

long long count_exact_occurrences(int n, const Permutation& pattern, long long t) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("count_exact_occurrences: n out of range 1..8");
    long long total = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (static_cast<long long>(occurrences(pattern, pi).size()) == t) ++total;
    });
    return total;
}

Permutation prop9_forward(const Permutation& pi, const Tunnel& t) {
    if (t.height < 1 || t.length() < 4)
        throw std::invalid_argument("prop9_forward: tunnel must have height >= 1 "
                                    "and length >= 4");
    const DyckPath d = boundary_path(pi);  // also checks 132-avoidance
    const auto all = tunnels(d);
    if (std::find(all.begin(), all.end(), t) == all.end())
        throw std::invalid_argument("prop9_forward: not a tunnel of the boundary path");

    const int n = pi.size();
    // Up-step k in path order sits in array row n+1-k, down-step k in column k.
    int up_ordinal = 0;
    for (int s = 0; s <= t.left_x; ++s)
        if (d.steps[static_cast<size_t>(s)] == 'U') ++up_ordinal;
    int down_ordinal = 0;
    for (int s = 0; s < t.right_x; ++s)
        if (d.steps[static_cast<size_t>(s)] == 'D') ++down_ordinal;
    const int row = n + 1 - up_ordinal;
    const int col = down_ordinal;

    std::set<std::pair<int, int>> white = build_diagram(pi).square_set();
    white.emplace(row, col);
    return permutation_from_diagram(n, white);
}

std::vector<TailPair> thomas_pairs(const Permutation& sigma) {
    if (!occurrences(Permutation{{1, 2, 3}}, sigma).empty())
        throw std::invalid_argument("thomas_pairs requires 123-avoiding input");
    const auto maxima = extreme_positions(sigma, ExtremeKind::RlMaxima);
    std::vector<TailPair> pairs;
    for (size_t t = 0; t + 1 < maxima.size(); ++t) {
        const int i = maxima[t];
        const int j = maxima[t + 1];
        for (int k = 1; k < i; ++k)
            if (sigma.at(k) < sigma.at(j)) {
                pairs.push_back({i, j});
                break;
            }
    }
    return pairs;
}

Permutation thomas_map(const Permutation& sigma, TailPair p) {
    const auto pairs = thomas_pairs(sigma);
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end())
        throw std::invalid_argument("thomas_map: pair is not a qualifying maxima pair");
    std::vector<int> word = sigma.word();
    std::swap(word[static_cast<size_t>(p.i) - 1], word[static_cast<size_t>(p.j) - 1]);
    return Permutation{std::move(word)};
}

}  // namespace permlab
