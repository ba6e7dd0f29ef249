#include "covlat/poset.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace covlat {

struct Poset::Lazy {
    std::once_flag once;
    MeetJoinTables tables;
};

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> relations,
                            std::vector<std::string> labels) {
    if (n < 0) throw error("from_relations: negative size");
    Digraph g(n);
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw error("from_relations: index out of range");
        if (a != b) g.add_edge(a, b);
    }
    auto topo = topological_order(g);
    if (!topo) throw error("from_relations: cycle detected");
    return finalize(closure_parallel(g, *topo), std::move(labels));
}

Poset Poset::from_relations(int n, std::initializer_list<std::pair<int, int>> relations,
                            std::vector<std::string> labels) {
    std::vector<std::pair<int, int>> rel(relations);
    return from_relations(n, std::span<const std::pair<int, int>>(rel), std::move(labels));
}

Poset Poset::from_leq(BitMatrix up, std::vector<std::string> labels) {
    const int n = up.rows();
    if (up.cols() != n) throw error("from_leq: matrix not square");
    const int w = up.words();
    for (int i = 0; i < n; ++i) {
        if (!up.get(i, i)) throw error("from_leq: relation not reflexive");
        bool transitive = true;
        rowops::for_each_bit(up.row(i), w, [&](int j) {
            if (j != i && up.get(j, i)) throw error("from_leq: relation not antisymmetric");
            if (!rowops::subset(up.row(j), up.row(i), w)) transitive = false;
        });
        if (!transitive) throw error("from_leq: relation not transitive");
    }
    return finalize(std::move(up), std::move(labels));
}

Poset Poset::finalize(BitMatrix up, std::vector<std::string> labels) {
    Poset p;
    p.n_ = up.rows();
    p.up_ = std::move(up);
    p.down_ = transpose(p.up_);
    p.cov_ = covers_parallel(p.up_);
    p.covdown_ = transpose(p.cov_);
    Digraph hasse(p.n_);
    for (int i = 0; i < p.n_; ++i)
        rowops::for_each_bit(p.cov_.row(i), p.cov_.words(), [&](int j) { hasse.add_edge(i, j); });
    p.topo_ = *topological_order(hasse);
    p.topo_pos_.resize(p.n_);
    for (int t = 0; t < p.n_; ++t) p.topo_pos_[p.topo_[t]] = t;
    p.up_t_ = BitMatrix(p.n_, p.n_);
    p.down_t_ = BitMatrix(p.n_, p.n_);
    for (int i = 0; i < p.n_; ++i) {
        rowops::for_each_bit(p.up_.row(i), p.up_.words(),
                             [&](int j) { p.up_t_.set(i, p.topo_pos_[j]); });
        rowops::for_each_bit(p.down_.row(i), p.down_.words(),
                             [&](int j) { p.down_t_.set(i, p.topo_pos_[j]); });
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != p.n_)
        throw error("labels: wrong length");
    p.labels_ = std::move(labels);
    p.lazy_ = std::make_shared<Lazy>();
    return p;
}

const MeetJoinTables& Poset::tables() const {
    std::call_once(lazy_->once,
                   [&] { lazy_->tables = meet_join_tables_parallel(down_t_, up_t_, topo_); });
    return lazy_->tables;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        rowops::for_each_bit(cov_.row(i), cov_.words(), [&](int j) { out.emplace_back(i, j); });
    return out;
}

long long Poset::cover_count() const {
    long long c = 0;
    for (int i = 0; i < n_; ++i) c += rowops::popcount(cov_.row(i), cov_.words());
    return c;
}

std::vector<int> Poset::upper_covers(int x) const {
    std::vector<int> out;
    rowops::for_each_bit(cov_.row(x), cov_.words(), [&](int j) { out.push_back(j); });
    return out;
}

std::vector<int> Poset::lower_covers(int x) const {
    std::vector<int> out;
    rowops::for_each_bit(covdown_.row(x), covdown_.words(), [&](int j) { out.push_back(j); });
    return out;
}

std::optional<int> Poset::minimum() const {
    if (n_ == 0) return std::nullopt;
    int b = topo_[0];
    if (rowops::popcount(up_.row(b), up_.words()) != n_) return std::nullopt;
    return b;
}

std::optional<int> Poset::maximum() const {
    if (n_ == 0) return std::nullopt;
    int t = topo_[n_ - 1];
    if (rowops::popcount(down_.row(t), down_.words()) != n_) return std::nullopt;
    return t;
}

int Poset::bottom() const {
    auto b = minimum();
    if (!b) throw precondition_error("bottom", "poset has no least element");
    return *b;
}

int Poset::top() const {
    auto t = maximum();
    if (!t) throw precondition_error("top", "poset has no greatest element");
    return *t;
}

std::vector<int> Poset::atoms() const { return upper_covers(bottom()); }
std::vector<int> Poset::coatoms() const { return lower_covers(top()); }

int Poset::length() const {
    if (!is_bounded()) throw precondition_error("length", "poset is not bounded");
    std::vector<int> dp(n_, 0);
    for (int t = 0; t < n_; ++t) {
        int v = topo_[t];
        for (int u : lower_covers(v)) dp[v] = std::max(dp[v], dp[u] + 1);
    }
    return dp[top()];
}

std::optional<int> Poset::meet(int x, int y) const {
    int z = tables().meet_at(n_, x, y);
    if (z < 0) return std::nullopt;
    return z;
}

std::optional<int> Poset::join(int x, int y) const {
    int z = tables().join_at(n_, x, y);
    if (z < 0) return std::nullopt;
    return z;
}

bool Poset::is_lattice() const {
    if (n_ == 0) return false;
    return tables().all_meets && tables().all_joins;
}

std::vector<int> Poset::join_irreducibles() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (rowops::popcount(covdown_.row(i), covdown_.words()) == 1) out.push_back(i);
    return out;
}

std::vector<int> Poset::meet_irreducibles() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (rowops::popcount(cov_.row(i), cov_.words()) == 1) out.push_back(i);
    return out;
}

Poset Poset::induced(std::span<const int> elements) const {
    const int k = static_cast<int>(elements.size());
    BitMatrix up(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (leq(elements[a], elements[b])) up.set(a, b);
    std::vector<std::string> labels;
    if (has_labels()) {
        labels.reserve(k);
        for (int e : elements) labels.push_back(labels_[e]);
    }
    return from_leq(std::move(up), std::move(labels));
}

Poset Poset::interval(int x, int y) const {
    if (!leq(x, y)) throw precondition_error("interval", "endpoints not comparable");
    std::vector<int> elems;
    Bits tmp(up_.words());
    rowops::and_rows(tmp.data(), up_.row(x), down_.row(y), up_.words());
    rowops::for_each_bit(tmp.data(), up_.words(), [&](int z) { elems.push_back(z); });
    return induced(elems);
}

Poset Poset::direct_product(const Poset& other) const {
    const int n = n_ * other.n_;
    BitMatrix up(n, n);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < other.n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < other.n_; ++d)
                    if (leq(a, c) && other.leq(b, d)) up.set(a * other.n_ + b, c * other.n_ + d);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < other.n_; ++b)
            labels.push_back("(" + label(a) + "," + other.label(b) + ")");
    return from_leq(std::move(up), std::move(labels));
}

Poset Poset::proper_part() const {
    int b = bottom(), t = top();
    std::vector<int> elems;
    for (int i = 0; i < n_; ++i)
        if (i != b && i != t) elems.push_back(i);
    return induced(elems);
}

Poset Poset::dual() const {
    std::vector<std::string> labels = labels_;
    return from_leq(down_, std::move(labels));
}

bool Poset::is_two_plus_two_free() const {
    const int w = up_.words();
    Bits inc(w), strict(w);
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (y == x || !leq(x, y)) continue;
            // elements incomparable to both x and y
            for (int i = 0; i < w; ++i)
                inc[i] = ~(up_.row(x)[i] | down_.row(x)[i] | up_.row(y)[i] | down_.row(y)[i]);
            if (n_ & 63) inc[w - 1] &= (std::uint64_t{1} << (n_ & 63)) - 1;
            bool found = false;
            rowops::for_each_bit(inc.data(), w, [&](int xp) {
                if (found) return;
                for (int i = 0; i < w; ++i) strict[i] = up_.row(xp)[i] & inc[i];
                strict[xp >> 6] &= ~(std::uint64_t{1} << (xp & 63));
                if (rowops::any(strict.data(), w)) found = true;
            });
            if (found) return false;
        }
    }
    return true;
}

bool Poset::is_left_modular_element(int x) const {
    if (!is_lattice()) throw precondition_error("left-modular", "not a lattice");
    const auto& t = tables();
    for (auto [y, z] : cover_pairs()) {
        bool me = t.meet_at(n_, x, y) == t.meet_at(n_, x, z);
        bool je = t.join_at(n_, x, y) == t.join_at(n_, x, z);
        if (me == je) return false;
    }
    return true;
}

bool Poset::left_modular_element_by_definition(int x) const {
    if (!is_lattice()) throw precondition_error("left-modular", "not a lattice");
    const auto& t = tables();
    for (int q = 0; q < n_; ++q)
        for (int qp = 0; qp < n_; ++qp) {
            if (q == qp || !leq(q, qp)) continue;
            if (t.meet_at(n_, t.join_at(n_, q, x), qp) !=
                t.join_at(n_, q, t.meet_at(n_, x, qp)))
                return false;
        }
    return true;
}

std::optional<std::vector<int>> Poset::left_modular_chain() const {
    if (!is_lattice()) throw precondition_error("left-modular", "not a lattice");
    std::vector<bool> lm(n_);
    for (int x = 0; x < n_; ++x) lm[x] = is_left_modular_element(x);
    int b = bottom(), t = top();
    if (!lm[b] || !lm[t]) return std::nullopt;
    // reach[x]: some saturated lm-chain continues from x to the top
    std::vector<signed char> reach(n_, -1);
    auto dfs = [&](auto&& self, int x) -> bool {
        if (x == t) return true;
        if (reach[x] >= 0) return reach[x] != 0;
        reach[x] = 0;
        for (int y : upper_covers(x))
            if (lm[y] && self(self, y)) {
                reach[x] = 1;
                return true;
            }
        return false;
    };
    if (!dfs(dfs, b)) return std::nullopt;
    std::vector<int> chain{b};
    int x = b;
    while (x != t) {
        for (int y : upper_covers(x)) {
            if (lm[y] && (y == t || (reach[y] < 0 ? dfs(dfs, y) : reach[y] != 0))) {
                chain.push_back(y);
                x = y;
                break;
            }
        }
    }
    return chain;
}

bool Poset::is_left_modular() const { return left_modular_chain().has_value(); }

bool Poset::is_extremal() const {
    if (!is_bounded()) throw precondition_error("extremal", "poset is not bounded");
    const int l = length();
    return static_cast<int>(join_irreducibles().size()) == l &&
           static_cast<int>(meet_irreducibles().size()) == l;
}

bool Poset::is_trim() const {
    if (!is_lattice()) throw precondition_error("trim", "not a lattice");
    return is_extremal() && is_left_modular();
}

MobiusTable Poset::mobius() const {
    MobiusTable t;
    t.n = n_;
    t.values = mobius_parallel(up_, down_, topo_);
    return t;
}

bool Poset::is_join_dense(std::span<const int> s) const {
    const int w = up_.words();
    Bits ub(w);
    for (int x = 0; x < n_; ++x) {
        for (int i = 0; i < w; ++i) ub[i] = ~std::uint64_t{0};
        if (n_ & 63) ub[w - 1] = (std::uint64_t{1} << (n_ & 63)) - 1;
        for (int e : s)
            if (leq(e, x))
                for (int i = 0; i < w; ++i) ub[i] &= up_.row(e)[i];
        // x must be the least common upper bound
        if (!rowops::subset(ub.data(), up_.row(x), w)) return false;
    }
    return true;
}

bool Poset::is_meet_dense(std::span<const int> s) const {
    const int w = up_.words();
    Bits lb(w);
    for (int x = 0; x < n_; ++x) {
        for (int i = 0; i < w; ++i) lb[i] = ~std::uint64_t{0};
        if (n_ & 63) lb[w - 1] = (std::uint64_t{1} << (n_ & 63)) - 1;
        for (int e : s)
            if (leq(x, e))
                for (int i = 0; i < w; ++i) lb[i] &= down_.row(e)[i];
        if (!rowops::subset(lb.data(), down_.row(x), w)) return false;
    }
    return true;
}

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}
}  // namespace

std::string Poset::to_dot() const {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir = BT;\n  node [shape=box];\n";
    for (int i = 0; i < n_; ++i)
        os << "  n" << i << " [label=\"" << dot_escape(label(i)) << "\"];\n";
    for (auto [a, b] : cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string Poset::label(int x) const {
    if (has_labels()) return labels_[x];
    return std::to_string(x);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
    Poset p = *this;
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw error("labels: wrong length");
    p.labels_ = std::move(labels);
    return p;
}

namespace reference {

std::optional<int> meet(const Poset& p, int x, int y) {
    // unique greatest common lower bound, straight from the definition
    std::vector<int> lower;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
    for (int z : lower) {
        bool greatest = true;
        for (int v : lower)
            if (!p.leq(v, z)) greatest = false;
        if (greatest) return z;
    }
    return std::nullopt;
}

std::optional<int> join(const Poset& p, int x, int y) {
    std::vector<int> upper;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(y, z)) upper.push_back(z);
    for (int z : upper) {
        bool least = true;
        for (int v : upper)
            if (!p.leq(z, v)) least = false;
        if (least) return z;
    }
    return std::nullopt;
}

MobiusTable mobius(const Poset& p) {
    const int n = p.size();
    MobiusTable t;
    t.n = n;
    t.values.assign(static_cast<std::size_t>(n) * n, 0);
    auto& topo = p.topo_order();
    for (int x = 0; x < n; ++x) {
        for (int ti = 0; ti < n; ++ti) {
            int y = topo[ti];
            if (!p.leq(x, y)) continue;
            if (x == y) {
                t.values[static_cast<std::size_t>(x) * n + y] = 1;
            } else {
                std::int64_t s = 0;
                for (int z = 0; z < n; ++z)
                    if (z != y && p.leq(x, z) && p.leq(z, y))
                        s += t.values[static_cast<std::size_t>(x) * n + z];
                t.values[static_cast<std::size_t>(x) * n + y] = -s;
            }
        }
    }
    return t;
}

}  // namespace reference
}  // namespace covlat
