#pragma once

#include <map>
#include <string>
#include <vector>

#include "covlat/poset.hpp"

namespace covlat {

/// An element of the m-cover poset: a weakly increasing m-tuple of base-poset
/// elements with at most three distinct values (b, p, q), where b is the
/// least element of the base and p is covered by q.
using CoverTuple = std::vector<int>;

/// The m-cover poset of a bounded base poset, ordered componentwise, together
/// with the tuple carried by each element.
struct MCoverPoset {
    Poset base;
    int m = 1;
    std::vector<CoverTuple> elements;
    Poset poset;

    int index_of(const CoverTuple& t) const;
    std::map<CoverTuple, int> index;
};

MCoverPoset mcover(const Poset& base, int m);

/// (c-k)*C(m,2) + m(n-1) + 1 for a bounded poset with n elements, c cover
/// relations and k atoms.
long long mcover_size_formula(long long n, long long c, long long k, long long m);

/// m * length(base); the constructed poset is asserted against this in tests.
long long mcover_length(const Poset& base, int m);

struct PredictedIrreducibles {
    std::vector<CoverTuple> join_set, meet_set;
};

/// Closed-form join-/meet-irreducible sets of the m-cover poset in terms of
/// the base's irreducibles.
PredictedIrreducibles mcover_irreducibles_predicted(const Poset& base, int m);

/// For an extremal bounded base: every m-cover is extremal iff the base has a
/// unique atom exactly when it has a unique coatom.
bool mcover_extremal_condition(const Poset& base);

/// Base is a lattice and every pairwise meet is the bottom or one of the two
/// arguments; equivalent to every m-cover being a lattice.
bool meet_condition_holds(const Poset& base);

/// Hasse diagram with the least element removed is a tree rooted at the top.
bool hasse_minus_bottom_is_rooted_tree(const Poset& base);

/// n*C(m+1,2) - m^2 + 1, valid when the tree criterion holds and n > 1.
long long mcover_lattice_size_formula(long long n, long long m);

/// Bounded poset whose proper part is a k-chain next to an l-antichain.
Poset p_kl(int k, int l);

/// Word over {N, E}; validated on use.
using NortheastWord = std::string;

/// The order on the letters of a northeast path alone.
Poset path_order(const NortheastWord& word);

/// Base poset extended by the letters of a northeast path: east letters
/// become atoms below their north letter, north letters stack above the whole
/// base. Throws if the result would not be bounded (word starting with E).
Poset path_poset(const Poset& base, const NortheastWord& word);

Poset p_kl_path(int k, int l, const NortheastWord& word);

enum class Step { N, E };

/// Incremental construction of the m-cover of base+step out of the m-cover of
/// base, via the triangular grid of new elements. Cross-check oracle for
/// mcover(); the direct construction is authoritative.
MCoverPoset mcover_extend_step(const MCoverPoset& mc, Step step);

/// Recursive subtree condition on the rooted tree of a tree-criterion poset:
/// at every node, at most one subtree has more than one element.
bool satisfies_condition_s(const Poset& base);

/// Tree criterion plus the subtree condition; characterizes the posets
/// isomorphic to some p_kl_path instance.
bool is_path_poset_shape(const Poset& base);

/// uf[d] = number of elements with d upper covers; lf for lower covers.
struct CoverStatistic {
    std::vector<long long> uf, lf;
};

CoverStatistic cover_statistics(const Poset& p);

/// 1 + (k+l)m x + (k+l)C(m,2) x^2 + m x^{l+1} with colliding powers summed.
CoverStatistic predicted_cover_statistic(int k, int l, int m);

/// Three-case Mobius rule: 1 on singleton intervals and on nuclear intervals
/// with two atoms, -1 on covers, 0 otherwise.
bool mobius_matches_trim_rule(const Poset& p);

/// Same check, but demands the input be a trim lattice first.
bool trim_mobius_check(const Poset& p);

}  // namespace covlat
