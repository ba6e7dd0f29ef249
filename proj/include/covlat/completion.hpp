#pragma once

#include <vector>

#include "covlat/dyck.hpp"
#include "covlat/isomorphism.hpp"
#include "covlat/poset.hpp"

namespace covlat {

/// A^u, A^l and the cut closure A -> (A^u)^l over a fixed source poset.
Bits up_set(const Poset& p, const Bits& a);
Bits down_set(const Poset& p, const Bits& a);
Bits cut_closure(const Poset& p, const Bits& a);

/// Dedekind-MacNeille completion: the lattice of all cuts (A with A^{ul}=A)
/// ordered by inclusion, realized as the intersection closure of the
/// principal ideals plus the full carrier.
struct Completion {
    Poset lattice;
    std::vector<Bits> cuts;              // over source elements
    std::vector<int> embedding;          // source element -> cut index
    std::vector<int> principal_source;   // cut index -> source element or -1

    int added_count() const;
};

Completion dm_completion(const Poset& p);

/// End-to-end check that completing the m-cover of the classical Tamari
/// lattice reproduces the m-Tamari lattice, together with the skeleton facts
/// the argument rests on.
struct TamariCompletionReport {
    int n = 0, m = 0;
    long long input_size = 0;
    long long completed_size = 0;
    long long fuss = 0;
    bool isomorphic = false;
    bool jm_restriction_isomorphic = false;
    bool join_dense = false;
    bool meet_dense = false;
    /// Non-principal cuts, each rendered as the componentwise Tamari meet of
    /// its upper bounds: an m-tuple of classical Dyck paths.
    std::vector<std::vector<MDyckPath>> added_fans;

    bool ok() const {
        return isomorphic && completed_size == fuss && jm_restriction_isomorphic && join_dense &&
               meet_dense;
    }
};

TamariCompletionReport verify_theorem_mtamari(int n, int m,
                                              long long budget = kDefaultIsoBudget);

}  // namespace covlat
