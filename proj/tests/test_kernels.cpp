#include <doctest.h>

#include <random>

#include "covlat/dyck.hpp"
#include "covlat/generate.hpp"
#include "covlat/kernels.hpp"
#include "oracles.hpp"

using namespace covlat;

namespace {

Digraph random_dag(std::mt19937_64& rng, int n, double p) {
    Digraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("closure: serial, parallel and Warshall agree") {
    std::mt19937_64 rng(20240817);
    for (int round = 0; round < 20; ++round) {
        const int n = 3 + static_cast<int>(rng() % 60);
        Digraph g = random_dag(rng, n, 0.15);
        auto topo = topological_order(g);
        REQUIRE(topo.has_value());
        BitMatrix s = closure_serial(g, *topo);
        BitMatrix p = closure_parallel(g, *topo);
        CHECK(s == p);
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v)
            for (int w : g.adj[v]) edges.emplace_back(v, w);
        auto r = oracles::warshall(n, edges);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(s.get(i, j) == r[i][j]);
    }
}

TEST_CASE("closure detects cycles") {
    Digraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    CHECK(!topological_order(g).has_value());
}

TEST_CASE("covers kernels agree and closure of reduction reproduces the order") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        Poset p = random_bounded_poset(rng, 8);
        BitMatrix cs = covers_serial(p.leq_matrix());
        BitMatrix cp = covers_parallel(p.leq_matrix());
        CHECK(cs == cp);
        Digraph hasse(p.size());
        for (int i = 0; i < p.size(); ++i)
            rowops::for_each_bit(cs.row(i), cs.words(), [&](int j) { hasse.add_edge(i, j); });
        auto topo = topological_order(hasse);
        REQUIRE(topo.has_value());
        CHECK(closure_serial(hasse, *topo) == p.leq_matrix());
    }
}

TEST_CASE("meet/join tables: serial == parallel == definitional oracle") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 15; ++round) {
        Poset p = random_bounded_poset(rng, 7);
        MeetJoinTables ts = meet_join_tables_serial(p.down_by_topo(), p.up_by_topo(),
                                                    p.topo_order());
        MeetJoinTables tp = meet_join_tables_parallel(p.down_by_topo(), p.up_by_topo(),
                                                      p.topo_order());
        CHECK(ts.meet == tp.meet);
        CHECK(ts.join == tp.join);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                auto m = reference::meet(p, x, y);
                auto j = reference::join(p, x, y);
                CHECK(ts.meet_at(p.size(), x, y) == (m ? *m : -1));
                CHECK(ts.join_at(p.size(), x, y) == (j ? *j : -1));
            }
    }
}

TEST_CASE("meet/join tables on a Tamari lattice match the oracle") {
    RotationPoset t = mtamari(4, 2);
    const Poset& p = t.poset;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            auto m = reference::meet(p, x, y);
            auto j = reference::join(p, x, y);
            REQUIRE(m.has_value());
            REQUIRE(j.has_value());
            CHECK(p.meet(x, y) == m);
            CHECK(p.join(x, y) == j);
        }
}

TEST_CASE("mobius kernels agree with the recursive oracle, rows sum to zero") {
    std::mt19937_64 rng(2311);
    for (int round = 0; round < 10; ++round) {
        Poset p = random_bounded_poset(rng, 7);
        auto ms = mobius_serial(p.leq_matrix(), p.geq_matrix(), p.topo_order());
        auto mp = mobius_parallel(p.leq_matrix(), p.geq_matrix(), p.topo_order());
        CHECK(ms == mp);
        MobiusTable ref = reference::mobius(p);
        CHECK(ms == ref.values);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                if (!p.lt(x, y)) continue;
                std::int64_t sum = 0;
                for (int z = 0; z < p.size(); ++z)
                    if (p.leq(x, z) && p.leq(z, y)) sum += ms[static_cast<std::size_t>(x) * p.size() + z];
                CHECK(sum == 0);
            }
    }
}
