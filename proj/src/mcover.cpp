#include "covlat/mcover.hpp"

#include <algorithm>
#include <set>

namespace covlat {

int MCoverPoset::index_of(const CoverTuple& t) const {
    auto it = index.find(t);
    if (it == index.end()) throw error("mcover: no such element");
    return it->second;
}

namespace {

std::string tuple_label(const Poset& base, const CoverTuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += base.label(t[i]);
    }
    return s;
}

MCoverPoset assemble(const Poset& base, int m, std::vector<CoverTuple> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const int n = static_cast<int>(elements.size());
    BitMatrix up(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool le = true;
            for (int i = 0; i < m && le; ++i)
                if (!base.leq(elements[a][i], elements[b][i])) le = false;
            if (le) up.set(a, b);
        }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& t : elements) labels.push_back(tuple_label(base, t));
    MCoverPoset out;
    out.base = base;
    out.m = m;
    out.poset = Poset::from_leq(std::move(up), std::move(labels));
    for (int i = 0; i < n; ++i) out.index.emplace(elements[i], i);
    out.elements = std::move(elements);
    return out;
}

}  // namespace

MCoverPoset mcover(const Poset& base, int m) {
    if (m < 1) throw precondition_error("mcover", "m must be positive");
    if (!base.is_bounded()) throw precondition_error("mcover", "base poset must be bounded");
    const int b = base.bottom();
    std::vector<CoverTuple> elements;
    for (int x = 0; x < base.size(); ++x) elements.push_back(CoverTuple(m, x));
    if (base.size() > 1) {
        for (int p = 0; p < base.size(); ++p) {
            if (p == b) continue;
            for (int l = 1; l < m; ++l) {
                CoverTuple t(m, p);
                std::fill(t.begin(), t.begin() + l, b);
                elements.push_back(std::move(t));
            }
        }
        for (auto [p, q] : base.cover_pairs()) {
            if (p == b) continue;
            for (int l = 1; l < m; ++l) {
                CoverTuple t(m, q);
                std::fill(t.begin(), t.begin() + l, p);
                elements.push_back(std::move(t));
            }
            for (int l0 = 1; l0 <= m - 2; ++l0)
                for (int l1 = 1; l1 <= m - 1 - l0; ++l1) {
                    CoverTuple t(m, q);
                    std::fill(t.begin(), t.begin() + l0, b);
                    std::fill(t.begin() + l0, t.begin() + l0 + l1, p);
                    elements.push_back(std::move(t));
                }
        }
    }
    return assemble(base, m, std::move(elements));
}

long long mcover_size_formula(long long n, long long c, long long k, long long m) {
    return (c - k) * (m * (m - 1) / 2) + m * (n - 1) + 1;
}

long long mcover_length(const Poset& base, int m) {
    if (m < 1) throw precondition_error("mcover", "m must be positive");
    return static_cast<long long>(m) * base.length();
}

PredictedIrreducibles mcover_irreducibles_predicted(const Poset& base, int m) {
    if (m < 1) throw precondition_error("mcover", "m must be positive");
    if (!base.is_bounded())
        throw precondition_error("mcover", "base poset must be bounded");
    const int b = base.bottom();
    const int t = base.top();
    PredictedIrreducibles out;
    for (int p : base.join_irreducibles())
        for (int l = 0; l < m; ++l) {
            CoverTuple tup(m, p);
            std::fill(tup.begin(), tup.begin() + l, b);
            out.join_set.push_back(std::move(tup));
        }
    for (int p : base.meet_irreducibles()) {
        if (p == b) continue;
        const int pstar = base.upper_covers(p).front();
        for (int l = 1; l <= m; ++l) {
            CoverTuple tup(m, pstar);
            std::fill(tup.begin(), tup.begin() + l, p);
            out.meet_set.push_back(std::move(tup));
        }
    }
    if (base.size() > 1) {
        // the stated range for the top-padding family runs one step too far:
        // (b,...,b) is meet-irreducible exactly when the base has one atom,
        // which the last summand below accounts for separately
        if (base.lower_covers(t).size() == 1)
            for (int l = 1; l < m; ++l) {
                CoverTuple tup(m, t);
                std::fill(tup.begin(), tup.begin() + l, b);
                out.meet_set.push_back(std::move(tup));
            }
        if (base.upper_covers(b).size() == 1) out.meet_set.push_back(CoverTuple(m, b));
    }
    std::sort(out.join_set.begin(), out.join_set.end());
    std::sort(out.meet_set.begin(), out.meet_set.end());
    return out;
}

bool mcover_extremal_condition(const Poset& base) {
    if (!base.is_extremal())
        throw precondition_error("extremal-condition", "base poset is not extremal");
    if (base.size() == 1) return true;
    const bool bottom_meet_irr = base.upper_covers(base.bottom()).size() == 1;
    const bool top_join_irr = base.lower_covers(base.top()).size() == 1;
    return bottom_meet_irr == top_join_irr;
}

bool meet_condition_holds(const Poset& base) {
    if (base.size() == 0 || !base.is_lattice()) return false;
    const int b = base.bottom();
    for (int x = 0; x < base.size(); ++x)
        for (int y = x + 1; y < base.size(); ++y) {
            int z = *base.meet(x, y);
            if (z != b && z != x && z != y) return false;
        }
    return true;
}

bool hasse_minus_bottom_is_rooted_tree(const Poset& base) {
    if (base.size() < 2)
        throw precondition_error("tree-criterion", "poset must have at least two elements");
    if (!base.is_bounded()) return false;
    const int b = base.bottom();
    const int nodes = base.size() - 1;
    std::vector<std::vector<int>> adj(base.size());
    int edges = 0;
    for (auto [x, y] : base.cover_pairs()) {
        if (x == b) continue;
        adj[x].push_back(y);
        adj[y].push_back(x);
        ++edges;
    }
    if (edges != nodes - 1) return false;
    std::vector<bool> seen(base.size(), false);
    std::vector<int> stack{base.top()};
    seen[base.top()] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == nodes;
}

long long mcover_lattice_size_formula(long long n, long long m) {
    if (n <= 1) throw precondition_error("lattice-size-formula", "n must exceed 1");
    return n * (m * (m + 1) / 2) - m * m + 1;
}

Poset p_kl(int k, int l) {
    if (k < 0 || l < 0) throw precondition_error("p_kl", "parameters must be non-negative");
    const int n = k + l + 2;
    const int t = n - 1;
    std::vector<std::pair<int, int>> rel;
    int prev = 0;
    for (int i = 1; i <= k; ++i) {
        rel.emplace_back(prev, i);
        prev = i;
    }
    rel.emplace_back(prev, t);
    for (int j = k + 1; j <= k + l; ++j) {
        rel.emplace_back(0, j);
        rel.emplace_back(j, t);
    }
    std::vector<std::string> labels(n);
    labels[0] = "0";
    labels[t] = "1";
    for (int i = 1; i <= k; ++i) labels[i] = "c" + std::to_string(i);
    for (int j = 1; j <= l; ++j) labels[k + j] = "a" + std::to_string(j);
    return Poset::from_relations(n, rel, std::move(labels));
}

namespace {

void check_word(const NortheastWord& word) {
    for (char c : word)
        if (c != 'N' && c != 'E') throw error("northeast path: letters must be N or E");
}

/// h-index of each east letter (1-based over the word), 0 if the letter hangs
/// below no north letter.
std::vector<int> east_targets(const NortheastWord& word) {
    const int len = static_cast<int>(word.size());
    std::vector<int> h(len + 1, 0), target(len + 1, 0);
    for (int j = 1; j <= len; ++j) {
        if (word[j - 1] != 'E') continue;
        h[j] = (j == 1 || word[j - 2] == 'N') ? j : h[j - 1];
        target[j] = h[j] - 1;
    }
    return target;
}

std::vector<std::pair<int, int>> path_order_relations(const NortheastWord& word, int offset) {
    std::vector<std::pair<int, int>> rel;
    auto target = east_targets(word);
    int last_north = 0;
    for (int j = 1; j <= static_cast<int>(word.size()); ++j) {
        if (word[j - 1] == 'N') {
            if (last_north) rel.emplace_back(offset + last_north - 1, offset + j - 1);
            last_north = j;
        } else if (target[j] >= 1) {
            rel.emplace_back(offset + j - 1, offset + target[j] - 1);
        }
    }
    return rel;
}

}  // namespace

Poset path_order(const NortheastWord& word) {
    check_word(word);
    const int len = static_cast<int>(word.size());
    std::vector<std::string> labels;
    for (int j = 1; j <= len; ++j) labels.push_back("w" + std::to_string(j));
    return Poset::from_relations(len, path_order_relations(word, 0), std::move(labels));
}

Poset path_poset(const Poset& base, const NortheastWord& word) {
    check_word(word);
    if (base.size() == 0 || !base.is_bounded())
        throw precondition_error("path_poset", "base poset must be non-empty and bounded");
    if (!word.empty() && word.front() == 'E')
        throw precondition_error("path_poset",
                                 "word starts with an east-step, result has no greatest element");
    const int n0 = base.size();
    const int n = n0 + static_cast<int>(word.size());
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
            if (a != b && base.leq(a, b)) rel.emplace_back(a, b);
    auto letters = path_order_relations(word, n0);
    rel.insert(rel.end(), letters.begin(), letters.end());
    const int bot = base.bottom();
    for (int j = 1; j <= static_cast<int>(word.size()); ++j) {
        int wj = n0 + j - 1;
        if (word[j - 1] == 'E') {
            rel.emplace_back(bot, wj);
        } else {
            for (int p = 0; p < n0; ++p) rel.emplace_back(p, wj);
        }
    }
    std::vector<std::string> labels;
    for (int a = 0; a < n0; ++a) labels.push_back(base.label(a));
    for (int j = 1; j <= static_cast<int>(word.size()); ++j)
        labels.push_back("w" + std::to_string(j));
    return Poset::from_relations(n, rel, std::move(labels));
}

Poset p_kl_path(int k, int l, const NortheastWord& word) { return path_poset(p_kl(k, l), word); }

namespace {

/// Appends one step the way the incremental construction reads it: a north
/// step is a new greatest element, an east step is a new element squeezed
/// between the bottom and the current top. (On words starting with a north
/// step this agrees with path_poset letter by letter.)
Poset attach_step(const Poset& base, Step step) {
    const int n0 = base.size();
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
            if (a != b && base.leq(a, b)) rel.emplace_back(a, b);
    if (step == Step::N) {
        for (int p = 0; p < n0; ++p) rel.emplace_back(p, n0);
    } else {
        rel.emplace_back(base.bottom(), n0);
        rel.emplace_back(n0, base.top());
    }
    std::vector<std::string> labels;
    for (int a = 0; a < n0; ++a) labels.push_back(base.label(a));
    labels.push_back(step == Step::N ? "N" : "E");
    return Poset::from_relations(n0 + 1, rel, std::move(labels));
}

}  // namespace

MCoverPoset mcover_extend_step(const MCoverPoset& mc, Step step) {
    const Poset& base = mc.base;
    const int m = mc.m;
    const int n0 = base.size();
    if (n0 == 0) throw precondition_error("extend-step", "empty base");
    const int bot = base.bottom();
    const int old_top = base.top();
    Poset new_base = attach_step(base, step);
    const int fresh = n0;  // index of the new element in the extended base

    // phi(a,b): the triangular grid of new tuples
    auto grid_tuple = [&](int a, int b) {
        CoverTuple t;
        if (step == Step::N) {
            t.assign(m - b, bot);
            t.insert(t.end(), b - a, old_top);
            t.insert(t.end(), a, fresh);
        } else {
            t.assign(m - b, bot);
            t.insert(t.end(), b - a, fresh);
            t.insert(t.end(), a, old_top);
        }
        return t;
    };
    auto old_padded_tuple = [&](int b) {  // (bot^{m-b}, old_top^{b})
        CoverTuple t(m, old_top);
        std::fill(t.begin(), t.begin() + (m - b), bot);
        return t;
    };

    std::vector<CoverTuple> elements = mc.elements;
    std::vector<std::pair<CoverTuple, CoverTuple>> covers;
    for (auto [x, y] : mc.poset.cover_pairs()) covers.emplace_back(mc.elements[x], mc.elements[y]);

    if (step == Step::N) {
        for (int b = 1; b <= m; ++b)
            for (int a = 1; a <= b; ++a) elements.push_back(grid_tuple(a, b));
        for (int b = 1; b <= m; ++b)
            for (int a = 1; a <= b; ++a) {
                if (a + 1 <= b) covers.emplace_back(grid_tuple(a, b), grid_tuple(a + 1, b));
                if (b + 1 <= m) covers.emplace_back(grid_tuple(a, b), grid_tuple(a, b + 1));
            }
        for (int b = 1; b <= m; ++b) covers.emplace_back(old_padded_tuple(b), grid_tuple(1, b));
    } else {
        // the grid extends by the diagonal (b,b), which are old elements, so
        // the unit step in a lands there when a+1 == b
        for (int b = 1; b <= m; ++b)
            for (int a = 0; a < b; ++a) elements.push_back(grid_tuple(a, b));
        for (int b = 1; b <= m; ++b)
            for (int a = 0; a < b; ++a) {
                if (a + 1 < b)
                    covers.emplace_back(grid_tuple(a, b), grid_tuple(a + 1, b));
                else
                    covers.emplace_back(grid_tuple(a, b), old_padded_tuple(b));
                if (b + 1 <= m) covers.emplace_back(grid_tuple(a, b), grid_tuple(a, b + 1));
            }
        for (int b = 0; b < m; ++b) covers.emplace_back(old_padded_tuple(b), grid_tuple(b, b + 1));
    }

    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::map<CoverTuple, int> index;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) index.emplace(elements[i], i);
    std::vector<std::pair<int, int>> rel;
    for (auto& [lo, hi] : covers)
        if (lo != hi) rel.emplace_back(index.at(lo), index.at(hi));
    std::vector<std::string> labels;
    for (const auto& t : elements) labels.push_back(tuple_label(new_base, t));
    MCoverPoset out;
    out.base = std::move(new_base);
    out.m = m;
    out.poset =
        Poset::from_relations(static_cast<int>(elements.size()), rel, std::move(labels));
    out.elements = std::move(elements);
    out.index = std::move(index);
    return out;
}

bool satisfies_condition_s(const Poset& base) {
    if (!hasse_minus_bottom_is_rooted_tree(base))
        throw precondition_error("condition-s", "tree criterion does not hold");
    const int b = base.bottom();
    std::vector<long long> size(base.size(), 0);
    for (int t = 0; t < base.size(); ++t) {
        int v = base.topo_order()[t];
        if (v == b) continue;
        size[v] = 1;
        for (int c : base.lower_covers(v))
            if (c != b) size[v] += size[c];
    }
    int v = base.top();
    while (true) {
        std::vector<int> big;
        for (int c : base.lower_covers(v))
            if (c != b && size[c] > 1) big.push_back(c);
        if (big.empty()) return true;
        if (big.size() > 1) return false;
        v = big.front();
    }
}

bool is_path_poset_shape(const Poset& base) {
    if (base.size() < 2)
        throw precondition_error("path-poset-shape", "poset must have at least two elements");
    return hasse_minus_bottom_is_rooted_tree(base) && satisfies_condition_s(base);
}

CoverStatistic cover_statistics(const Poset& p) {
    CoverStatistic st;
    for (int x = 0; x < p.size(); ++x) {
        std::size_t u = p.upper_covers(x).size();
        std::size_t l = p.lower_covers(x).size();
        if (st.uf.size() <= u) st.uf.resize(u + 1, 0);
        if (st.lf.size() <= l) st.lf.resize(l + 1, 0);
        ++st.uf[u];
        ++st.lf[l];
    }
    return st;
}

CoverStatistic predicted_cover_statistic(int k, int l, int m) {
    if (k < 1 || l < 1 || m < 1)
        throw precondition_error("cover-statistic", "parameters must be positive");
    CoverStatistic st;
    const int deg = std::max(2, l + 1);
    st.uf.assign(deg + 1, 0);
    st.uf[0] = 1;
    st.uf[1] = static_cast<long long>(k + l) * m;
    st.uf[2] += static_cast<long long>(k + l) * m * (m - 1) / 2;
    st.uf[l + 1] += m;
    st.lf = st.uf;
    return st;
}

namespace {

bool interval_is_nuclear_with_two_atoms(const Poset& p, int a, int b) {
    const int w = p.leq_matrix().words();
    Bits iv(w);
    rowops::and_rows(iv.data(), p.leq_matrix().row(a), p.geq_matrix().row(b), w);
    std::vector<int> atoms;
    rowops::for_each_bit(iv.data(), w, [&](int z) {
        if (z != a && p.covers(a, z)) atoms.push_back(z);
    });
    if (atoms.size() != 2) return false;
    auto j = p.join(atoms[0], atoms[1]);
    return j && *j == b;
}

}  // namespace

bool mobius_matches_trim_rule(const Poset& p) {
    MobiusTable mu = p.mobius();
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (!p.leq(a, b)) continue;
            std::int64_t expected;
            if (a == b)
                expected = 1;
            else if (p.covers(a, b))
                expected = -1;
            else if (interval_is_nuclear_with_two_atoms(p, a, b))
                expected = 1;
            else
                expected = 0;
            if (mu.at(a, b) != expected) return false;
        }
    return true;
}

bool trim_mobius_check(const Poset& p) {
    if (!p.is_lattice() || !p.is_trim())
        throw precondition_error("trim-mobius", "input is not a trim lattice");
    return mobius_matches_trim_rule(p);
}

}  // namespace covlat
