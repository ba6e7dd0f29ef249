#include "covlat/generate.hpp"

#include <algorithm>
#include <map>

#include "covlat/isomorphism.hpp"

namespace covlat {

namespace {

// Invariant fingerprint used to bucket candidates before the pairwise
// isomorphism test during deduplication.
std::vector<int> fingerprint(const Poset& p) {
    std::vector<int> f{p.size(), static_cast<int>(p.cover_count())};
    std::vector<int> prof;
    for (int x = 0; x < p.size(); ++x) {
        prof.push_back(rowops::popcount(p.leq_matrix().row(x), p.leq_matrix().words()) * 1000 +
                       rowops::popcount(p.geq_matrix().row(x), p.geq_matrix().words()));
    }
    std::sort(prof.begin(), prof.end());
    f.insert(f.end(), prof.begin(), prof.end());
    return f;
}

}  // namespace

std::vector<Poset> all_posets_up_to_iso(int n) {
    if (n == 0) return {Poset::from_relations(0, std::initializer_list<std::pair<int, int>>{})};
    // every finite poset admits a natural labelling (a linear extension), so
    // enumerating transitive sub-relations of the natural order is exhaustive
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::map<std::vector<int>, std::vector<Poset>> buckets;
    std::vector<Poset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        BitMatrix up(n, n);
        for (int i = 0; i < n; ++i) up.set(i, i);
        for (std::size_t t = 0; t < slots.size(); ++t)
            if (mask >> t & 1) up.set(slots[t].first, slots[t].second);
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            rowops::for_each_bit(up.row(i), up.words(), [&](int j) {
                if (!rowops::subset(up.row(j), up.row(i), up.words())) transitive = false;
            });
        if (!transitive) continue;
        Poset p = Poset::from_leq(std::move(up));
        auto& bucket = buckets[fingerprint(p)];
        bool fresh = std::none_of(bucket.begin(), bucket.end(),
                                  [&](const Poset& q) { return is_isomorphic(p, q); });
        if (fresh) {
            bucket.push_back(p);
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Poset> all_bounded_posets_up_to_iso(int max_size) {
    std::vector<Poset> out;
    if (max_size >= 1)
        out.push_back(Poset::from_relations(1, std::initializer_list<std::pair<int, int>>{}));
    for (int proper = 0; proper + 2 <= max_size; ++proper) {
        for (const Poset& q : all_posets_up_to_iso(proper)) {
            const int n = proper + 2;
            std::vector<std::pair<int, int>> rel;
            for (auto [a, b] : q.cover_pairs()) rel.emplace_back(a + 1, b + 1);
            for (int x = 1; x <= proper; ++x) {
                rel.emplace_back(0, x);
                rel.emplace_back(x, n - 1);
            }
            if (proper == 0) rel.emplace_back(0, 1);
            out.push_back(Poset::from_relations(n, rel));
        }
    }
    return out;
}

Poset random_bounded_poset(std::mt19937_64& rng, int max_proper) {
    std::uniform_int_distribution<int> size_dist(0, max_proper);
    const int proper = size_dist(rng);
    const int n = proper + 2;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= proper; ++i)
        for (int j = i + 1; j <= proper; ++j)
            if (coin(rng) < 0.35) rel.emplace_back(i, j);
    for (int x = 1; x <= proper; ++x) {
        rel.emplace_back(0, x);
        rel.emplace_back(x, n - 1);
    }
    if (proper == 0) rel.emplace_back(0, 1);
    return Poset::from_relations(n, rel);
}

}  // namespace covlat
