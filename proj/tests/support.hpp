#pragma once

#include "srkb/space.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace srkb::test {

// Canonical spaces (m non-increasing, n_i <= m_i) with q^{sum n_i m_i} <= max_size.
inline std::vector<SpaceParams> small_spaces(int q, std::uint64_t max_size, int max_t = 12) {
    std::vector<SpaceParams> out;
    std::vector<std::pair<int, int>> shapes;  // (m, n), m descending
    for (int m = 6; m >= 1; --m)
        for (int n = m; n >= 1; --n) shapes.push_back({m, n});
    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t, std::uint64_t)> rec = [&](size_t from, std::uint64_t size) {
        if (!cur.empty()) {
            SpaceParams sp;
            sp.q = q;
            for (auto [m, n] : cur) {
                sp.n.push_back(n);
                sp.m.push_back(m);
            }
            out.push_back(sp);
        }
        if (int(cur.size()) == max_t) return;
        for (size_t i = from; i < shapes.size(); ++i) {
            std::uint64_t block = 1;
            for (int k = 0; k < shapes[i].first * shapes[i].second && block <= max_size; ++k) block *= std::uint64_t(q);
            if (block > max_size / size) continue;
            cur.push_back(shapes[i]);
            rec(i, size * block);
            cur.pop_back();
        }
    };
    rec(0, 1);
    return out;
}

}  // namespace srkb::test
