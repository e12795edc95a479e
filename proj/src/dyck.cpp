#include "permlab/dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "permlab/diagram.hpp"

namespace permlab {

DyckPath parse_path(std::string_view word) {
    int height = 0;
    for (char c : word) {
        if (c == 'U')
            ++height;
        else if (c == 'D')
            --height;
        else
            throw std::invalid_argument(std::string("dyck path: illegal character '") +
                                        c + "'");
        if (height < 0)
            throw std::invalid_argument("dyck path: prefix dips below the axis");
    }
    if (height != 0)
        throw std::invalid_argument("dyck path: unbalanced word");
    return {std::string(word), static_cast<int>(word.size() / 2)};
}

std::vector<Tunnel> tunnels(const DyckPath& d) {
    std::vector<Tunnel> result;
    std::vector<std::pair<int, int>> open;  // (start x, start height) of up-steps
    int height = 0;
    for (size_t s = 0; s < d.steps.size(); ++s) {
        if (d.steps[s] == 'U') {
            open.emplace_back(static_cast<int>(s), height);
            ++height;
        } else {
            --height;
            auto [left, h] = open.back();
            open.pop_back();
            result.push_back({left, static_cast<int>(s) + 1, h});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Tunnel& a, const Tunnel& b) { return a.left_x < b.left_x; });
    return result;
}

PathFeatures path_features(const DyckPath& d) {
    PathFeatures f;
    for (const Tunnel& t : tunnels(d)) {
        if (t.height == 0)
            ++f.returns;
        else if (t.length() == 2)
            ++f.high_peaks;
        else if (t.length() >= 4)
            ++f.qualifying_tunnels;
    }
    int height = 0;
    for (size_t s = 0; s < d.steps.size(); ++s) {
        height += d.steps[s] == 'U' ? 1 : -1;
        if (s + 1 < d.steps.size() && d.steps[s] == 'D' && d.steps[s + 1] == 'U' &&
            height > 0)
            ++f.valleys_above_zero;
    }
    return f;
}

DyckPath boundary_path(const Permutation& pi) {
    if (stat(pi, {3, PatternKind::A}) != 0)
        throw std::invalid_argument("boundary_path requires 132-avoiding input");
    const int n = pi.size();
    const std::vector<int> shape = rank0_shape(pi);
    auto lambda = [&](int i) { return i == 0 ? n : shape[static_cast<size_t>(i) - 1]; };
    std::string steps;
    for (int i = n; i >= 1; --i) {
        steps += 'U';
        steps.append(static_cast<size_t>(lambda(i - 1) - lambda(i)), 'D');
    }
    return {std::move(steps), n};
}

void enumerate_paths(int n, const std::function<void(const DyckPath&)>& visit) {
    if (n < 0 || n > kMaxPathSemilength)
        throw std::invalid_argument("enumerate_paths: semilength limit exceeded");
    std::string steps(static_cast<size_t>(2 * n), ' ');
    auto extend = [&](auto&& self, int pos, int ups, int downs) -> void {
        if (pos == 2 * n) {
            visit({steps, n});
            return;
        }
        if (ups < n) {
            steps[static_cast<size_t>(pos)] = 'U';
            self(self, pos + 1, ups + 1, downs);
        }
        if (downs < ups) {
            steps[static_cast<size_t>(pos)] = 'D';
            self(self, pos + 1, ups, downs + 1);
        }
    };
    extend(extend, 0, 0, 0);
}

}  // namespace permlab
