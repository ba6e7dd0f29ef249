#include "covlat/kernels.hpp"

#include <algorithm>
#include <queue>

namespace covlat {

std::optional<std::vector<int>> topological_order(const Digraph& g) {
    std::vector<int> indeg(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) ++indeg[w];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(g.n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : g.adj[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != g.n) return std::nullopt;
    return order;
}

namespace {

// Group vertices by longest path to a sink, so that rows within one level can
// be combined independently of each other.
std::vector<std::vector<int>> reverse_levels(const Digraph& g, const std::vector<int>& topo) {
    std::vector<int> depth(g.n, 0);
    int maxd = 0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        for (int w : g.adj[v]) depth[v] = std::max(depth[v], depth[w] + 1);
        maxd = std::max(maxd, depth[v]);
    }
    std::vector<std::vector<int>> levels(maxd + 1);
    for (int v : topo) levels[depth[v]].push_back(v);
    return levels;
}

BitMatrix closure_impl(const Digraph& g, const std::vector<int>& topo, bool parallel) {
    BitMatrix up(g.n, g.n);
    auto levels = reverse_levels(g, topo);
    for (const auto& level : levels) {
        const int sz = static_cast<int>(level.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel && sz > 64)
        for (int t = 0; t < sz; ++t) {
            int v = level[t];
            up.set(v, v);
            for (int w : g.adj[v]) rowops::or_into(up.row(v), up.row(w), up.words());
        }
    }
    return up;
}

BitMatrix covers_impl(const BitMatrix& up, bool parallel) {
    const int n = up.rows();
    const int w = up.words();
    BitMatrix cov(n, n);
    std::vector<std::uint64_t> strict(up.words() == 0 ? 0 : static_cast<std::size_t>(n) * w);
    for (int i = 0; i < n; ++i) {
        std::copy(up.row(i), up.row(i) + w, &strict[static_cast<std::size_t>(i) * w]);
        strict[static_cast<std::size_t>(i) * w + (i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }
#pragma omp parallel for schedule(dynamic, 16) if (parallel && n > 64)
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* si = &strict[static_cast<std::size_t>(i) * w];
        std::uint64_t* ci = cov.row(i);
        std::copy(si, si + w, ci);
        rowops::for_each_bit(si, w, [&](int k) {
            const std::uint64_t* sk = &strict[static_cast<std::size_t>(k) * w];
            for (int t = 0; t < w; ++t) ci[t] &= ~sk[t];
        });
    }
    return cov;
}

MeetJoinTables tables_impl(const BitMatrix& down_t, const BitMatrix& up_t,
                           const std::vector<int>& topo, bool parallel) {
    const int n = down_t.rows();
    const int w = down_t.words();
    MeetJoinTables out;
    out.meet.assign(static_cast<std::size_t>(n) * n, -1);
    out.join.assign(static_cast<std::size_t>(n) * n, -1);
    bool meets_ok = true, joins_ok = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : meets_ok, joins_ok) \
    if (parallel && n > 64)
    for (int x = 0; x < n; ++x) {
        Bits tmp(w);
        for (int y = 0; y < n; ++y) {
            rowops::and_rows(tmp.data(), down_t.row(x), down_t.row(y), w);
            int hi = rowops::highest_bit(tmp.data(), w);
            if (hi >= 0 && rowops::equal(tmp.data(), down_t.row(topo[hi]), w))
                out.meet[static_cast<std::size_t>(x) * n + y] = topo[hi];
            else
                meets_ok = false;
            rowops::and_rows(tmp.data(), up_t.row(x), up_t.row(y), w);
            int lo = rowops::lowest_bit(tmp.data(), w);
            if (lo >= 0 && rowops::equal(tmp.data(), up_t.row(topo[lo]), w))
                out.join[static_cast<std::size_t>(x) * n + y] = topo[lo];
            else
                joins_ok = false;
        }
    }
    out.all_meets = meets_ok;
    out.all_joins = joins_ok;
    return out;
}

std::vector<std::int64_t> mobius_impl(const BitMatrix& up, const BitMatrix& down,
                                      const std::vector<int>& topo, bool parallel) {
    const int n = up.rows();
    const int w = up.words();
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n) * n, 0);
#pragma omp parallel for schedule(dynamic, 8) if (parallel && n > 64)
    for (int x = 0; x < n; ++x) {
        std::int64_t* row = &mu[static_cast<std::size_t>(x) * n];
        Bits iv(w);
        for (int t = 0; t < n; ++t) {
            int y = topo[t];
            if (!up.get(x, y)) continue;
            if (y == x) {
                row[y] = 1;
                continue;
            }
            rowops::and_rows(iv.data(), up.row(x), down.row(y), w);
            std::int64_t s = 0;
            rowops::for_each_bit(iv.data(), w, [&](int z) {
                if (z != y) s += row[z];
            });
            row[y] = -s;
        }
    }
    return mu;
}

}  // namespace

BitMatrix closure_serial(const Digraph& g, const std::vector<int>& topo) {
    return closure_impl(g, topo, false);
}
BitMatrix closure_parallel(const Digraph& g, const std::vector<int>& topo) {
    return closure_impl(g, topo, true);
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        rowops::for_each_bit(m.row(i), m.words(), [&](int j) { out.set(j, i); });
    return out;
}

BitMatrix covers_serial(const BitMatrix& up) { return covers_impl(up, false); }
BitMatrix covers_parallel(const BitMatrix& up) { return covers_impl(up, true); }

MeetJoinTables meet_join_tables_serial(const BitMatrix& down_t, const BitMatrix& up_t,
                                       const std::vector<int>& topo) {
    return tables_impl(down_t, up_t, topo, false);
}
MeetJoinTables meet_join_tables_parallel(const BitMatrix& down_t, const BitMatrix& up_t,
                                         const std::vector<int>& topo) {
    return tables_impl(down_t, up_t, topo, true);
}

std::vector<std::int64_t> mobius_serial(const BitMatrix& up, const BitMatrix& down,
                                        const std::vector<int>& topo) {
    return mobius_impl(up, down, topo, false);
}
std::vector<std::int64_t> mobius_parallel(const BitMatrix& up, const BitMatrix& down,
                                          const std::vector<int>& topo) {
    return mobius_impl(up, down, topo, true);
}

}  // namespace covlat
