#include "covlat/completion.hpp"

#include <algorithm>
#include <set>

#include "covlat/mcover.hpp"

namespace covlat {

namespace {

Bits full_bits(int n) {
    Bits b = make_bits(n);
    for (int i = 0; i < n; ++i) rowops::set(b.data(), i);
    return b;
}

Bits fold_rows(const Poset& p, const BitMatrix& rows, const Bits& a) {
    Bits out = full_bits(p.size());
    rowops::for_each_bit(a.data(), static_cast<int>(a.size()), [&](int x) {
        for (int i = 0; i < rows.words(); ++i) out[i] &= rows.row(x)[i];
    });
    return out;
}

}  // namespace

Bits up_set(const Poset& p, const Bits& a) { return fold_rows(p, p.leq_matrix(), a); }
Bits down_set(const Poset& p, const Bits& a) { return fold_rows(p, p.geq_matrix(), a); }
Bits cut_closure(const Poset& p, const Bits& a) { return down_set(p, up_set(p, a)); }

int Completion::added_count() const {
    return static_cast<int>(std::count(principal_source.begin(), principal_source.end(), -1));
}

Completion dm_completion(const Poset& p) {
    const int n = p.size();
    const int w = p.leq_matrix().words();
    // every cut is an intersection of principal ideals (or the full carrier),
    // so saturating the family under pairwise intersection enumerates DM(P)
    std::set<Bits> family;
    family.insert(full_bits(n));
    for (int x = 0; x < n; ++x) {
        Bits d(p.geq_matrix().row(x), p.geq_matrix().row(x) + w);
        family.insert(std::move(d));
    }
    std::vector<Bits> work(family.begin(), family.end());
    while (!work.empty()) {
        Bits a = std::move(work.back());
        work.pop_back();
        std::vector<Bits> snapshot(family.begin(), family.end());
        for (const Bits& b : snapshot) {
            Bits c(w);
            rowops::and_rows(c.data(), a.data(), b.data(), w);
            if (family.insert(c).second) work.push_back(std::move(c));
        }
    }
    Completion out;
    out.cuts.assign(family.begin(), family.end());
    std::sort(out.cuts.begin(), out.cuts.end(), [&](const Bits& a, const Bits& b) {
        int pa = rowops::popcount(a.data(), w), pb = rowops::popcount(b.data(), w);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    const int c = static_cast<int>(out.cuts.size());
    BitMatrix up(c, c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (rowops::subset(out.cuts[i].data(), out.cuts[j].data(), w)) up.set(i, j);
    out.embedding.assign(n, -1);
    out.principal_source.assign(c, -1);
    for (int i = 0; i < c; ++i)
        for (int x = 0; x < n; ++x)
            if (rowops::equal(out.cuts[i].data(), p.geq_matrix().row(x), w)) {
                out.embedding[x] = i;
                out.principal_source[i] = x;
                break;
            }
    std::vector<std::string> labels;
    labels.reserve(c);
    for (int i = 0; i < c; ++i) {
        if (out.principal_source[i] >= 0) {
            labels.push_back(p.label(out.principal_source[i]));
        } else {
            // label an added cut by its maximal members
            std::string s = "*";
            bool first = true;
            rowops::for_each_bit(out.cuts[i].data(), w, [&](int x) {
                Bits strict(w);
                rowops::and_rows(strict.data(), p.leq_matrix().row(x), out.cuts[i].data(), w);
                strict[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
                if (!rowops::any(strict.data(), w)) {
                    if (!first) s += "|";
                    s += p.label(x);
                    first = false;
                }
            });
            labels.push_back(std::move(s));
        }
    }
    out.lattice = Poset::from_leq(std::move(up), std::move(labels));
    return out;
}

TamariCompletionReport verify_theorem_mtamari(int n, int m, long long budget) {
    if (n < 1 || m < 1) throw precondition_error("verify-mtamari", "parameters must be positive");
    TamariCompletionReport rep;
    rep.n = n;
    rep.m = m;
    RotationPoset t1 = mtamari(n, 1);
    MCoverPoset cover = mcover(t1.poset, m);
    rep.input_size = cover.poset.size();
    Completion dm = dm_completion(cover.poset);
    rep.completed_size = dm.lattice.size();
    rep.fuss = fuss_catalan(n, m);
    RotationPoset tnm = mtamari(n, m);
    rep.isomorphic = find_isomorphism(dm.lattice, tnm.poset, budget).has_value();

    auto jm_sub = [](const Poset& p) {
        std::set<int> jm;
        for (int x : p.join_irreducibles()) jm.insert(x);
        for (int x : p.meet_irreducibles()) jm.insert(x);
        std::vector<int> elems(jm.begin(), jm.end());
        return p.induced(elems);
    };
    rep.jm_restriction_isomorphic =
        find_isomorphism(jm_sub(cover.poset), jm_sub(tnm.poset), budget).has_value();
    auto ji = cover.poset.join_irreducibles();
    auto mi = cover.poset.meet_irreducibles();
    rep.join_dense = cover.poset.is_join_dense(ji);
    rep.meet_dense = cover.poset.is_meet_dense(mi);

    const int w = cover.poset.leq_matrix().words();
    for (int ci = 0; ci < static_cast<int>(dm.cuts.size()); ++ci) {
        if (dm.principal_source[ci] >= 0) continue;
        // componentwise Tamari meet over the cut's upper bounds
        std::vector<int> acc;
        for (int x = 0; x < cover.poset.size(); ++x) {
            if (!rowops::subset(dm.cuts[ci].data(), cover.poset.geq_matrix().row(x), w)) continue;
            const CoverTuple& t = cover.elements[x];
            if (acc.empty()) {
                acc = t;
            } else {
                for (int i = 0; i < m; ++i) acc[i] = *t1.poset.meet(acc[i], t[i]);
            }
        }
        std::vector<MDyckPath> fan;
        for (int i = 0; i < m; ++i) fan.push_back(t1.paths[acc[i]]);
        rep.added_fans.push_back(std::move(fan));
    }
    std::sort(rep.added_fans.begin(), rep.added_fans.end());
    return rep;
}

}  // namespace covlat
