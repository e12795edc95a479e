#include "permlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permlab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty())
        throw std::invalid_argument("permutation: empty input");
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
    }
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < word_.size(); ++k) {
        if (k) os << ' ';
        os << word_[k];
    }
    return os.str();
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    std::string buf(text);
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream is(buf);
    std::vector<int> values;
    int v;
    while (is >> v) values.push_back(v);
    if (!is.eof()) {
        is.clear();
        std::string junk;
        is >> junk;
        throw std::invalid_argument("permutation: cannot parse '" + junk + "'");
    }
    return Permutation(std::move(values));
}

Permutation make_permutation(std::vector<int> values) {
    return Permutation(std::move(values));
}

std::vector<std::vector<int>> occurrences(const Permutation& pattern,
                                          const Permutation& host) {
    const int m = pattern.size();
    const int n = host.size();
    std::vector<std::vector<int>> result;
    if (m > n) return result;

    std::vector<int> chosen;  // positions, 1-based
    chosen.reserve(static_cast<size_t>(m));

    auto extend = [&](auto&& self, int from) -> void {
        const int k = static_cast<int>(chosen.size());
        if (k == m) {
            result.push_back(chosen);
            return;
        }
        for (int p = from; p <= n - (m - k - 1); ++p) {
            const int v = host.at(p);
            bool ok = true;
            for (int t = 0; t < k && ok; ++t)
                ok = (v > host.at(chosen[static_cast<size_t>(t)])) ==
                     (pattern.at(k + 1) > pattern.at(t + 1));
            if (!ok) continue;
            chosen.push_back(p);
            self(self, p + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 1);
    return result;
}

std::set<TailPair> tail_pairs(const Permutation& pi, PatternClass cls) {
    if (cls.m < 2)
        throw std::invalid_argument("pattern class requires m >= 2");
    const int n = pi.size();
    std::set<TailPair> pairs;
    // smaller_left[i] = #{k < i : pi_k < pi_i}
    std::vector<int> smaller_left(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k < i; ++k)
            if (pi.at(k) < pi.at(i)) ++smaller_left[static_cast<size_t>(i)];

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (cls.kind == PatternKind::A) {
                if (pi.at(i) <= pi.at(j)) continue;
                int count = 0;
                for (int k = 1; k < i; ++k)
                    if (pi.at(k) < pi.at(j)) ++count;
                if (count >= cls.m - 2) pairs.insert({i, j});
            } else {
                if (pi.at(i) >= pi.at(j)) continue;
                if (smaller_left[static_cast<size_t>(i)] >= cls.m - 2)
                    pairs.insert({i, j});
            }
        }
    }
    return pairs;
}

long long stat(const Permutation& pi, PatternClass cls) {
    return static_cast<long long>(tail_pairs(pi, cls).size());
}

std::vector<int> extreme_positions(const Permutation& pi, ExtremeKind kind) {
    const int n = pi.size();
    std::vector<int> positions;
    if (kind == ExtremeKind::LtrMinima) {
        int best = n + 1;
        for (int i = 1; i <= n; ++i)
            if (pi.at(i) < best) {
                best = pi.at(i);
                positions.push_back(i);
            }
    } else {
        int best = 0;
        for (int i = n; i >= 1; --i)
            if (pi.at(i) > best) {
                best = pi.at(i);
                positions.push_back(i);
            }
        std::reverse(positions.begin(), positions.end());
    }
    return positions;
}

std::vector<Permutation> class_members(PatternClass cls) {
    if (cls.m < 2)
        throw std::invalid_argument("pattern class requires m >= 2");
    const int m = cls.m;
    std::vector<int> prefix(static_cast<size_t>(m) - 2);
    std::iota(prefix.begin(), prefix.end(), 1);
    std::vector<Permutation> members;
    do {
        std::vector<int> w(prefix);
        if (cls.kind == PatternKind::A) {
            w.push_back(m);
            w.push_back(m - 1);
        } else {
            w.push_back(m - 1);
            w.push_back(m);
        }
        members.emplace_back(std::move(w));
    } while (std::next_permutation(prefix.begin(), prefix.end()));
    return members;
}

}  // namespace permlab
