#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covlat/bitmatrix.hpp"

namespace covlat {

/// Adjacency-list digraph over dense vertex indices.
struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Digraph(int n_ = 0) : n(n_), adj(n_) {}
    void add_edge(int a, int b) { adj[a].push_back(b); }
};

/// Kahn topological order with ascending-index tie break; nullopt on a cycle.
std::optional<std::vector<int>> topological_order(const Digraph& g);

// Every kernel below comes in a serial and an OpenMP-parallel flavour that
// produce bit-identical results. The parallel ones are what the library calls;
// the serial ones are the references the test and benchmark targets compare
// against.

/// Reflexive-transitive closure of an acyclic relation, row i = up-set of i.
BitMatrix closure_serial(const Digraph& g, const std::vector<int>& topo);
BitMatrix closure_parallel(const Digraph& g, const std::vector<int>& topo);

BitMatrix transpose(const BitMatrix& m);

/// Hasse diagram from a reflexively-transitively closed up-set matrix.
BitMatrix covers_serial(const BitMatrix& up);
BitMatrix covers_parallel(const BitMatrix& up);

/// All-pairs meet/join tables (-1 where undefined). Rows of `down_t`/`up_t`
/// are indexed by element, columns by topological position, so the greatest
/// element of a down-set intersection is its highest set bit.
struct MeetJoinTables {
    std::vector<std::int32_t> meet, join;
    bool all_meets = false, all_joins = false;

    std::int32_t meet_at(int n, int x, int y) const {
        return meet[static_cast<std::size_t>(x) * n + y];
    }
    std::int32_t join_at(int n, int x, int y) const {
        return join[static_cast<std::size_t>(x) * n + y];
    }
};

MeetJoinTables meet_join_tables_serial(const BitMatrix& down_t, const BitMatrix& up_t,
                                       const std::vector<int>& topo);
MeetJoinTables meet_join_tables_parallel(const BitMatrix& down_t, const BitMatrix& up_t,
                                         const std::vector<int>& topo);

/// Full Mobius table, entry (x,y) meaningful where x <= y.
std::vector<std::int64_t> mobius_serial(const BitMatrix& up, const BitMatrix& down,
                                        const std::vector<int>& topo);
std::vector<std::int64_t> mobius_parallel(const BitMatrix& up, const BitMatrix& down,
                                          const std::vector<int>& topo);

}  // namespace covlat
