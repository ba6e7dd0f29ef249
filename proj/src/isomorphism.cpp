#include "covlat/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace covlat {

namespace {

// Joint colour refinement over the Hasse diagrams of both posets. Colours are
// exact (map-canonicalised), so equal colours mean equal refinement history.
struct Refined {
    std::vector<int> color_a, color_b;
    bool compatible = false;
};

Refined refine(const Poset& a, const Poset& b) {
    const int n = a.size();
    Refined r;
    r.color_a.assign(n, 0);
    r.color_b.assign(n, 0);
    {
        std::map<std::array<int, 4>, int> ids;
        auto initial = [&](const Poset& p, int x) {
            std::array<int, 4> key{rowops::popcount(p.cover_matrix().row(x), p.cover_matrix().words()),
                                   rowops::popcount(p.cover_matrix_down().row(x),
                                                    p.cover_matrix_down().words()),
                                   rowops::popcount(p.leq_matrix().row(x), p.leq_matrix().words()),
                                   rowops::popcount(p.geq_matrix().row(x), p.geq_matrix().words())};
            auto [it, _] = ids.try_emplace(key, static_cast<int>(ids.size()));
            return it->second;
        };
        for (int x = 0; x < n; ++x) r.color_a[x] = initial(a, x);
        for (int x = 0; x < n; ++x) r.color_b[x] = initial(b, x);
    }
    int classes = -1;
    while (true) {
        std::map<std::vector<int>, int> ids;
        auto next = [&](const Poset& p, const std::vector<int>& col, int x) {
            std::vector<int> up, dn;
            for (int y : p.upper_covers(x)) up.push_back(col[y]);
            for (int y : p.lower_covers(x)) dn.push_back(col[y]);
            std::sort(up.begin(), up.end());
            std::sort(dn.begin(), dn.end());
            std::vector<int> key{col[x], -1};
            key.insert(key.end(), up.begin(), up.end());
            key.push_back(-2);
            key.insert(key.end(), dn.begin(), dn.end());
            auto [it, _] = ids.try_emplace(std::move(key), static_cast<int>(ids.size()));
            return it->second;
        };
        std::vector<int> na(n), nb(n);
        for (int x = 0; x < n; ++x) na[x] = next(a, r.color_a, x);
        for (int x = 0; x < n; ++x) nb[x] = next(b, r.color_b, x);
        int now = static_cast<int>(ids.size());
        r.color_a.swap(na);
        r.color_b.swap(nb);
        if (now == classes) break;
        classes = now;
    }
    std::vector<int> ha = r.color_a, hb = r.color_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    r.compatible = ha == hb;
    return r;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b,
                                                 long long budget) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    if (n == 0) return std::vector<int>{};
    if (a.cover_count() != b.cover_count()) return std::nullopt;
    Refined r = refine(a, b);
    if (!r.compatible) return std::nullopt;

    std::vector<std::vector<int>> candidates_by_color;
    {
        int maxc = 0;
        for (int x = 0; x < n; ++x) maxc = std::max({maxc, r.color_a[x], r.color_b[x]});
        candidates_by_color.assign(maxc + 1, {});
        for (int y = 0; y < n; ++y) candidates_by_color[r.color_b[y]].push_back(y);
    }
    // assign the most constrained vertices first
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return candidates_by_color[r.color_a[x]].size() < candidates_by_color[r.color_a[y]].size();
    });

    std::vector<int> mapping(n, -1);
    std::vector<bool> used(n, false);
    long long steps = 0;
    auto bt = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        int x = order[pos];
        for (int y : candidates_by_color[r.color_a[x]]) {
            if (used[y]) continue;
            if (++steps > budget) throw budget_error("isomorphism search budget exceeded");
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                int xp = order[q], yp = mapping[xp];
                if (a.covers(x, xp) != b.covers(y, yp) || a.covers(xp, x) != b.covers(yp, y))
                    ok = false;
            }
            if (!ok) continue;
            mapping[x] = y;
            used[y] = true;
            if (self(self, pos + 1)) return true;
            mapping[x] = -1;
            used[y] = false;
        }
        return false;
    };
    if (bt(bt, 0)) return mapping;
    return std::nullopt;
}

bool is_isomorphic(const Poset& a, const Poset& b, long long budget) {
    return find_isomorphism(a, b, budget).has_value();
}

}  // namespace covlat
