#include "covlat/dyck.hpp"

#include <algorithm>

namespace covlat {

std::string MDyckPath::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u[i]);
    }
    return s;
}

MDyckPath make_mdyck(int m, std::vector<int> steps) {
    if (m < 1) throw precondition_error("mdyck", "m must be positive");
    const int n = static_cast<int>(steps.size());
    if (n < 1) throw precondition_error("mdyck", "n must be positive");
    for (int k = 0; k < n; ++k) {
        if (steps[k] < 0 || steps[k] > static_cast<long long>(m) * k)
            throw error("mdyck: step sequence escapes the diagonal");
        if (k > 0 && steps[k] < steps[k - 1]) throw error("mdyck: step sequence not monotone");
    }
    return MDyckPath{m, n, std::move(steps)};
}

long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

long long fuss_catalan(int n, int m) {
    if (n < 1 || m < 1) throw precondition_error("fuss-catalan", "parameters must be positive");
    // binom((m+1)n, n) / (mn+1), kept exact by dividing as we go
    __int128 num = 1;
    const int top = (m + 1) * n;
    for (int k = 1; k <= n; ++k) {
        num = num * (top - n + k);
        num /= k;
    }
    return static_cast<long long>(num / (static_cast<long long>(m) * n + 1));
}

std::vector<MDyckPath> enumerate_mdyck(int n, int m) {
    if (n < 1 || m < 1) throw precondition_error("enumerate-mdyck", "parameters must be positive");
    std::vector<MDyckPath> out;
    std::vector<int> u(n);
    auto rec = [&](auto&& self, int k) -> void {  // k = 0-based index being chosen
        if (k == n) {
            out.push_back(MDyckPath{m, n, u});
            return;
        }
        const int lo = k == 0 ? 0 : u[k - 1];
        for (int v = lo; v <= m * k; ++v) {
            u[k] = v;
            self(self, k + 1);
        }
    };
    u[0] = 0;
    rec(rec, 1);
    std::sort(out.begin(), out.end(),
              [](const MDyckPath& a, const MDyckPath& b) { return a.u < b.u; });
    return out;
}

std::vector<int> step_to_height(const MDyckPath& p) {
    std::vector<int> h(static_cast<std::size_t>(p.m) * p.n);
    for (int k = 1; k <= p.m * p.n; ++k) {
        int best = 0;
        for (int j = 0; j < p.n; ++j)
            if (p.u[j] < k) best = j + 1;
        h[k - 1] = best;
    }
    return h;
}

MDyckPath height_to_step(const std::vector<int>& h, int m) {
    if (m < 1) throw precondition_error("mdyck", "m must be positive");
    const int mn = static_cast<int>(h.size());
    if (mn == 0 || mn % m != 0) throw error("mdyck: height sequence length not divisible by m");
    const int n = mn / m;
    for (int k = 0; k < mn; ++k) {
        if (h[k] > n || h[k] < (k + m) / m) throw error("mdyck: invalid height sequence");
        if (k > 0 && h[k] < h[k - 1]) throw error("mdyck: height sequence not monotone");
    }
    std::vector<int> u(n);
    for (int j = 1; j <= n; ++j) {
        int cnt = 0;
        for (int k = 0; k < mn; ++k)
            if (h[k] < j) ++cnt;
        u[j - 1] = cnt;
    }
    return make_mdyck(m, std::move(u));
}

int primitive_subsequence_end(const MDyckPath& p, int i) {
    if (i < 1 || i > p.n) throw precondition_error("primitive-subsequence", "index out of range");
    int k = i;
    while (k < p.n && p.u[k] - p.u[i - 1] < static_cast<long long>(p.m) * (k + 1 - i)) ++k;
    return k;
}

std::vector<MDyckPath> rotation_covers(const MDyckPath& p) {
    std::vector<MDyckPath> out;
    for (int i = 2; i <= p.n; ++i) {
        if (p.u[i - 2] >= p.u[i - 1]) continue;
        const int k = primitive_subsequence_end(p, i);
        std::vector<int> v = p.u;
        for (int j = i - 1; j < k; ++j) --v[j];
        out.push_back(make_mdyck(p.m, std::move(v)));
    }
    return out;
}

int RotationPoset::index_of(const MDyckPath& p) const {
    auto it = index.find(p.u);
    if (it == index.end()) throw error("mtamari: no such path");
    return it->second;
}

bool RotationPoset::leq(const MDyckPath& a, const MDyckPath& b) const {
    return poset.leq(index_of(a), index_of(b));
}

RotationPoset mtamari(int n, int m) {
    RotationPoset out;
    out.n = n;
    out.m = m;
    out.paths = enumerate_mdyck(n, m);
    for (int i = 0; i < static_cast<int>(out.paths.size()); ++i)
        out.index.emplace(out.paths[i].u, i);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < static_cast<int>(out.paths.size()); ++i)
        for (const MDyckPath& c : rotation_covers(out.paths[i]))
            rel.emplace_back(i, out.index.at(c.u));
    std::vector<std::string> labels;
    for (const auto& p : out.paths) labels.push_back(p.to_string());
    out.poset =
        Poset::from_relations(static_cast<int>(out.paths.size()), rel, std::move(labels));
    return out;
}

std::vector<MDyckPath> tamari_meet_irreducibles_predicted(int n, int m) {
    if (n < 2) throw precondition_error("tamari-irreducibles", "n must be at least 2");
    std::vector<MDyckPath> out;
    for (int i = 1; i < n; ++i)
        for (int a = 1; a <= m * i; ++a) {
            std::vector<int> u(n, a);
            std::fill(u.begin(), u.begin() + i, 0);
            out.push_back(make_mdyck(m, std::move(u)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MDyckPath> tamari_join_irreducibles_predicted(int n, int m) {
    if (n < 2) throw precondition_error("tamari-irreducibles", "n must be at least 2");
    std::vector<MDyckPath> out;
    for (int i = 1; i < n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int s = 1; s <= m; ++s) {
                std::vector<int> u(n);
                for (int j = 1; j <= n; ++j) u[j - 1] = m * (j - 1);
                for (int j = i + 1; j <= k; ++j) u[j - 1] -= s;
                out.push_back(make_mdyck(m, std::move(u)));
            }
    std::sort(out.begin(), out.end());
    return out;
}

long long tmn_size_formula(int n, int m) {
    if (n < 1 || m < 1) throw precondition_error("tmn-size", "parameters must be positive");
    const long long cat = catalan(n);
    return (n - 1) * (cat - 2) / 2 * (static_cast<long long>(m) * (m - 1) / 2) + m * cat - m + 1;
}

}  // namespace covlat
