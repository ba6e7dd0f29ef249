#include "covlat/strip.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

namespace covlat {

bool dominance_leq(const MDyckPath& a, const MDyckPath& b) {
    if (a.m != 1 || b.m != 1)
        throw precondition_error("dominance", "defined on classical Dyck paths");
    if (a.n != b.n) throw precondition_error("dominance", "length mismatch");
    auto ha = step_to_height(a), hb = step_to_height(b);
    for (int i = 0; i < a.n; ++i)
        if (ha[i] > hb[i]) return false;
    return true;
}

const RotationPoset& classical_tamari(int n) {
    static std::mutex mu;
    static std::map<int, RotationPoset> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, mtamari(n, 1)).first;
    return it->second;
}

DyckFan strip_decompose(const MDyckPath& p) {
    auto h = step_to_height(p);
    DyckFan f;
    f.n = p.n;
    for (int i = 0; i < p.m; ++i) {
        std::vector<int> hi(p.n);
        for (int k = 0; k < p.n; ++k) hi[k] = h[i + k * p.m];
        f.paths.push_back(height_to_step(hi, 1));
    }
    return f;
}

bool is_increasing_fan(const DyckFan& f) {
    for (std::size_t i = 0; i + 1 < f.paths.size(); ++i)
        if (!dominance_leq(f.paths[i], f.paths[i + 1])) return false;
    return true;
}

bool is_valid_delta_fan(const DyckFan& f) {
    if (!is_increasing_fan(f)) return false;
    const int m = static_cast<int>(f.paths.size());
    const int n = f.n;
    std::vector<std::vector<int>> h;
    h.reserve(m);
    for (const auto& q : f.paths) h.push_back(step_to_height(q));
    for (int i = 0; i + 2 < n; ++i)           // i in 1..n-2, 1-based
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (h[k][i] > h[j][i + 1]) return false;
    return true;
}

std::optional<MDyckPath> strip_compose(const DyckFan& f) {
    if (!is_valid_delta_fan(f)) return std::nullopt;
    const int m = static_cast<int>(f.paths.size());
    std::vector<int> h(static_cast<std::size_t>(m) * f.n);
    for (int i = 0; i < m; ++i) {
        auto hi = step_to_height(f.paths[i]);
        for (int k = 0; k < f.n; ++k) h[i + k * m] = hi[k];
    }
    return height_to_step(h, m);
}

long long count_increasing_fans_formula(int n, int m) {
    if (n < 1 || m < 1) throw precondition_error("fan-count", "parameters must be positive");
    auto gcd128 = [](__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    __int128 num = 1, den = 1;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) {
            num *= i + j + 2 * m;
            den *= i + j;
            const __int128 g = gcd128(num, den);
            num /= g;
            den /= g;
        }
    return static_cast<long long>(num / den);
}

std::vector<DyckFan> enumerate_increasing_fans(int n, int m) {
    auto dyck = enumerate_mdyck(n, 1);
    std::vector<DyckFan> out;
    DyckFan cur;
    cur.n = n;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            out.push_back(cur);
            return;
        }
        for (const auto& q : dyck) {
            if (!cur.paths.empty() && !dominance_leq(cur.paths.back(), q)) continue;
            cur.paths.push_back(q);
            self(self, depth + 1);
            cur.paths.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

DyckFan bounce_pair(const DyckFan& f, int i, int j) {
    if (i >= j) throw precondition_error("bounce-pair", "indices must satisfy i < j");
    const RotationPoset& t1 = classical_tamari(f.n);
    DyckFan out = f;
    int a = t1.index_of(f.paths[i]);
    int b = t1.index_of(f.paths[j]);
    out.paths[i] = t1.paths[*t1.poset.meet(a, b)];
    out.paths[j] = t1.paths[*t1.poset.join(a, b)];
    return out;
}

DyckFan bounce(const DyckFan& f, BounceOrder order) {
    const int m = static_cast<int>(f.paths.size());
    std::vector<std::pair<int, int>> seq;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) seq.emplace_back(i, j);
    if (order == BounceOrder::Reversed) std::reverse(seq.begin(), seq.end());
    DyckFan out = f;
    for (auto [i, j] : seq) out = bounce_pair(out, i, j);
    return out;
}

DyckFan zeta(const MDyckPath& p, BounceOrder order) { return bounce(strip_decompose(p), order); }

ConjectureReport verify_conjecture(int n, int m) {
    const auto start = std::chrono::steady_clock::now();
    ConjectureReport rep;
    rep.n = n;
    rep.m = m;
    RotationPoset tnm = mtamari(n, m);
    const RotationPoset& t1 = classical_tamari(n);
    const int count = tnm.poset.size();
    rep.path_count = count;

    // zeta images, stored as the indices of their components in the classical
    // Tamari lattice
    std::vector<std::vector<int>> img(count);
    long long valid = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : valid) if (count > 64)
    for (int i = 0; i < count; ++i) {
        DyckFan z = zeta(tnm.paths[i]);
        std::vector<int> ids(m);
        for (int c = 0; c < m; ++c) ids[c] = t1.index_of(z.paths[c]);
        img[i] = std::move(ids);
        if (is_valid_delta_fan(z)) ++valid;
    }
    rep.zeta_images_delta_valid = valid;

    std::vector<std::vector<int>> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    rep.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    bool iso = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : iso) if (count > 64)
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            bool lhs = tnm.poset.leq(a, b);
            bool rhs = true;
            for (int c = 0; c < m && rhs; ++c)
                if (!t1.poset.leq(img[a][c], img[b][c])) rhs = false;
            if (lhs != rhs) {
                iso = false;
                break;
            }
        }
    }
    rep.order_iso = iso;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

CounterexampleReport counterexample_checks() {
    CounterexampleReport rep;
    {
        // dominance-comparable fans whose composed paths are not
        // rotation-comparable
        MDyckPath q = make_mdyck(1, {0, 1, 1}), qp = make_mdyck(1, {0, 0, 1});
        DyckFan f1{3, {q, q}}, f2{3, {q, qp}};
        auto p1 = strip_compose(f1), p2 = strip_compose(f2);
        RotationPoset t = mtamari(3, 2);
        rep.strip_inverse_not_order_preserving =
            p1 && p2 && p1->u == std::vector<int>{0, 2, 2} && p2->u == std::vector<int>{0, 1, 2} &&
            dominance_leq(q, q) && dominance_leq(q, qp) && !t.leq(*p1, *p2);
    }
    {
        // rotation-comparable paths whose strips are not componentwise
        // rotation-comparable
        RotationPoset t = mtamari(3, 2);
        MDyckPath p = make_mdyck(2, {0, 1, 2}), pp = make_mdyck(2, {0, 0, 1});
        DyckFan dp = strip_decompose(p), dpp = strip_decompose(pp);
        const RotationPoset& t1 = classical_tamari(3);
        rep.strip_not_componentwise_order_preserving =
            t.leq(p, pp) && dp.paths[0].u == std::vector<int>{0, 1, 1} &&
            dp.paths[1].u == std::vector<int>{0, 0, 1} &&
            dpp.paths[0].u == std::vector<int>{0, 0, 1} &&
            dpp.paths[1].u == std::vector<int>{0, 0, 0} && !t1.leq(dp.paths[0], dpp.paths[0]);
    }
    {
        // componentwise-dominance-comparable valid fans whose bounced images
        // are not componentwise rotation-comparable, while the underlying
        // 2-Dyck paths are rotation-incomparable anyway
        auto path_from_h = [](std::vector<int> h) { return height_to_step(h, 1); };
        MDyckPath q1 = path_from_h({1, 3, 3, 4, 5}), q2 = path_from_h({2, 3, 4, 4, 5});
        MDyckPath q1p = path_from_h({2, 3, 3, 5, 5}), q2p = path_from_h({2, 3, 4, 5, 5});
        DyckFan f{5, {q1, q2}}, fp{5, {q1p, q2p}};
        const RotationPoset& t1 = classical_tamari(5);
        DyckFan bf = bounce(f), bfp = bounce(fp);
        bool beta_values_match =
            step_to_height(bf.paths[0]) == std::vector<int>{1, 2, 3, 4, 5} &&
            step_to_height(bf.paths[1]) == std::vector<int>{3, 3, 4, 4, 5} &&
            step_to_height(bfp.paths[0]) == std::vector<int>{2, 3, 3, 4, 5} &&
            step_to_height(bfp.paths[1]) == std::vector<int>{2, 3, 5, 5, 5};
        bool beta_not_leq = !(t1.leq(bf.paths[0], bfp.paths[0]) && t1.leq(bf.paths[1], bfp.paths[1]));
        auto p = strip_compose(f), pp = strip_compose(fp);
        RotationPoset t52 = mtamari(5, 2);
        bool underlying_incomparable = p && pp && p->u == std::vector<int>{0, 1, 2, 5, 8} &&
                                       pp->u == std::vector<int>{0, 0, 2, 5, 6} &&
                                       !t52.leq(*p, *pp);
        rep.bounce_not_order_preserving = dominance_leq(q1, q1p) && dominance_leq(q2, q2p) &&
                                          is_valid_delta_fan(f) && is_valid_delta_fan(fp) &&
                                          beta_values_match && beta_not_leq &&
                                          underlying_incomparable;
    }
    return rep;
}

}  // namespace covlat
