#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "covlat/poset.hpp"

namespace covlat {

/// An m-Dyck path of length (m+1)n, encoded by its step sequence u: entry u_k
/// is the x-coordinate of the k-th north step. The sequence is weakly
/// increasing with u_k <= m(k-1); the height sequence is a derived view.
struct MDyckPath {
    int m = 1;
    int n = 0;
    std::vector<int> u;

    friend auto operator<=>(const MDyckPath&, const MDyckPath&) = default;

    std::string to_string() const;
};

/// Validating factory; throws on an invalid step sequence.
MDyckPath make_mdyck(int m, std::vector<int> steps);

long long catalan(int n);
long long fuss_catalan(int n, int m);

/// All m-Dyck paths with n north steps, lexicographic by step sequence.
std::vector<MDyckPath> enumerate_mdyck(int n, int m);

/// h_k = max{ j : u_j < k }, k = 1..mn.
std::vector<int> step_to_height(const MDyckPath& p);

/// Inverse conversion; validates the height sequence.
MDyckPath height_to_step(const std::vector<int>& h, int m);

/// End index k (1-based) of the primitive subsequence of u starting at i.
int primitive_subsequence_end(const MDyckPath& p, int i);

/// Upper covers in the rotation order: one per ascent of the step sequence,
/// decrementing its primitive subsequence.
std::vector<MDyckPath> rotation_covers(const MDyckPath& p);

/// The m-Tamari lattice: all m-Dyck paths of parameter n under the transitive
/// closure of the rotation covers.
struct RotationPoset {
    int n = 0, m = 1;
    std::vector<MDyckPath> paths;
    Poset poset;
    std::map<std::vector<int>, int> index;

    int index_of(const MDyckPath& p) const;
    bool leq(const MDyckPath& a, const MDyckPath& b) const;
};

RotationPoset mtamari(int n, int m);

/// Closed-form step sequences of the meet-/join-irreducible elements, sorted
/// lexicographically; each list has m*C(n,2) entries.
std::vector<MDyckPath> tamari_meet_irreducibles_predicted(int n, int m);
std::vector<MDyckPath> tamari_join_irreducibles_predicted(int n, int m);

/// (n-1)/2 (Cat(n)-2) C(m,2) + m Cat(n) - m + 1, the size of the m-cover of
/// the Tamari lattice.
long long tmn_size_formula(int n, int m);

}  // namespace covlat
