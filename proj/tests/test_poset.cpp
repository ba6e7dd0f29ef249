#include <doctest.h>
#include <numeric>

#include <algorithm>
#include <random>
#include <set>

#include "covlat/generate.hpp"
#include "covlat/isomorphism.hpp"
#include "covlat/dyck.hpp"
#include "covlat/mcover.hpp"
#include "oracles.hpp"

using namespace covlat;

namespace {

Poset chain(int k) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(k, rel);
}

// 0 < 1 < {2,3} < 4, the lattice whose 2-cover is not a lattice
Poset fig_meet_lattice() {
    return Poset::from_relations(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

Poset pentagon() { return Poset::from_relations(5, {{0, 2}, {2, 3}, {3, 4}, {0, 1}, {1, 4}}); }

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("construction closes arbitrary acyclic relations") {
    Poset two = Poset::from_relations(2, {{0, 1}});
    CHECK(two.size() == 2);
    CHECK(two.leq(0, 1));
    CHECK(two.cover_count() == 1);

    Poset redundant = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
    Poset plain = Poset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(redundant.leq_matrix() == plain.leq_matrix());
    CHECK(redundant.cover_count() == 2);

    CHECK_THROWS_AS(Poset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}), error);
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 5}}), error);
}

TEST_CASE("bounds, atoms and coatoms") {
    Poset two = chain(2);
    CHECK(two.is_bounded());
    CHECK(two.atoms() == std::vector<int>{1});
    CHECK(two.coatoms() == std::vector<int>{0});

    Poset p33 = p_kl(3, 3);
    CHECK(p33.is_bounded());
    // atoms c1,a1,a2,a3; coatoms c3,a1,a2,a3
    CHECK(as_set(p33.atoms()) == std::set<int>{1, 4, 5, 6});
    CHECK(as_set(p33.coatoms()) == std::set<int>{3, 4, 5, 6});

    Poset anti = Poset::from_relations(2, std::initializer_list<std::pair<int, int>>{});
    CHECK(!anti.is_bounded());
    CHECK_THROWS_AS(anti.bottom(), precondition_error);
}

TEST_CASE("length and cover counts") {
    Poset five = chain(5);
    CHECK(five.length() == 4);
    CHECK(five.cover_count() == 4);
    CHECK_THROWS_AS(Poset::from_relations(2, std::initializer_list<std::pair<int, int>>{}).length(),
                    precondition_error);
    // chain of length 4 through the k-chain side
    CHECK(p_kl(3, 3).length() == 4);
}

TEST_CASE("meets and joins") {
    Poset b2 = p_kl(1, 1);
    CHECK(b2.meet(1, 2) == b2.bottom());
    CHECK(b2.join(1, 2) == b2.top());
    CHECK(b2.is_lattice());

    Poset fig = fig_meet_lattice();
    CHECK(fig.is_lattice());
    CHECK(fig.meet(2, 3) == 1);
    CHECK(fig.meet(2, 3) != fig.bottom());

    Poset anti = Poset::from_relations(2, std::initializer_list<std::pair<int, int>>{});
    CHECK(!anti.meet(0, 1).has_value());
    CHECK(!anti.is_lattice());
}

TEST_CASE("irreducibles") {
    Poset five = chain(5);
    CHECK(five.join_irreducibles() == std::vector<int>{1, 2, 3, 4});
    CHECK(five.meet_irreducibles() == std::vector<int>{0, 1, 2, 3});
    // J and M of the singleton are empty
    Poset one = Poset::from_relations(1, std::initializer_list<std::pair<int, int>>{});
    CHECK(one.join_irreducibles().empty());
    CHECK(one.meet_irreducibles().empty());
}

TEST_CASE("interval, product, proper part") {
    Poset iv = chain(5).interval(1, 3);
    CHECK(iv.size() == 3);
    CHECK(is_isomorphic(iv, chain(3)));
    CHECK_THROWS_AS(chain(5).interval(3, 1), precondition_error);

    Poset b2 = chain(2).direct_product(chain(2));
    CHECK(is_isomorphic(b2, p_kl(1, 1)));

    Poset pp = p_kl(2, 3).proper_part();
    CHECK(pp.size() == 5);
    CHECK(pp.cover_count() == 1);  // only the chain edge survives
    CHECK(is_isomorphic(chain(2).proper_part(),
                        Poset::from_relations(0, std::initializer_list<std::pair<int, int>>{})));
}

TEST_CASE("two-plus-two-freeness") {
    CHECK(chain(6).is_two_plus_two_free());
    // bounded poset whose proper part is two disjoint 2-chains
    Poset bad = Poset::from_relations(
        6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 5}, {4, 5}});
    CHECK(!bad.is_two_plus_two_free());
    CHECK(p_kl_path(3, 3, "NENNE").is_two_plus_two_free());

    std::mt19937_64 rng(5150);
    for (int round = 0; round < 30; ++round) {
        Poset p = random_bounded_poset(rng, 7);
        CHECK(p.is_two_plus_two_free() == oracles::two_plus_two_free(p));
    }
}

TEST_CASE("left-modularity") {
    // every element of a distributive lattice is left-modular
    Poset b3 = chain(2).direct_product(chain(2)).direct_product(chain(2));
    for (int x = 0; x < b3.size(); ++x) {
        CHECK(b3.is_left_modular_element(x));
        CHECK(b3.left_modular_element_by_definition(x));
    }
    CHECK(b3.is_left_modular());

    Poset n5 = pentagon();
    for (int x = 0; x < n5.size(); ++x)
        CHECK(n5.is_left_modular_element(x) == n5.left_modular_element_by_definition(x));
    CHECK(n5.is_left_modular());

    // the canonical chain (c_{i-1}^{m-j}, c_i^j) is left-modular in P_{k,l}<m>
    const int k = 2, l = 2, m = 2;
    MCoverPoset mc = mcover(p_kl(k, l), m);
    std::vector<int> cs{0};
    for (int i = 1; i <= k; ++i) cs.push_back(i);
    cs.push_back(mc.base.top());
    CHECK(mc.poset.is_left_modular_element(mc.index_of(CoverTuple(m, 0))));
    for (int i = 1; i <= k + 1; ++i)
        for (int j = 1; j <= m; ++j) {
            CoverTuple t(m, cs[i]);
            std::fill(t.begin(), t.begin() + (m - j), cs[i - 1]);
            CHECK(mc.poset.is_left_modular_element(mc.index_of(t)));
        }

    CHECK_THROWS_AS(Poset::from_relations(2, std::initializer_list<std::pair<int, int>>{})
                        .is_left_modular(),
                    precondition_error);
}

TEST_CASE("left-modular criteria agree on all lattices with <= 8 elements") {
    for (const Poset& p : all_bounded_posets_up_to_iso(8)) {
        if (!p.is_lattice()) continue;
        for (int x = 0; x < p.size(); ++x)
            CHECK(p.is_left_modular_element(x) == p.left_modular_element_by_definition(x));
    }
}

TEST_CASE("left-modular criteria agree on random lattices with <= 12 elements") {
    std::mt19937_64 rng(424242);
    int produced = 0;
    while (produced < 60) {
        Poset p = random_bounded_poset(rng, 10);
        if (!p.is_lattice()) continue;
        ++produced;
        for (int x = 0; x < p.size(); ++x)
            CHECK(p.is_left_modular_element(x) == p.left_modular_element_by_definition(x));
    }
}

TEST_CASE("extremal and trim") {
    CHECK(chain(4).is_trim());
    CHECK(mcover(p_kl(2, 1), 2).poset.is_trim());
    // |M| exceeds the length for P_{1,2}<2>
    Poset c = mcover(p_kl(1, 2), 2).poset;
    CHECK(c.length() == 4);
    CHECK(c.meet_irreducibles().size() == 6);
    CHECK(!c.is_extremal());
    CHECK(!c.is_trim());
    Poset anti = Poset::from_relations(2, std::initializer_list<std::pair<int, int>>{});
    CHECK_THROWS_AS(anti.is_trim(), precondition_error);
}

TEST_CASE("mobius values") {
    MobiusTable two = chain(2).mobius();
    CHECK(two.at(0, 1) == -1);
    Poset b2 = p_kl(1, 1);
    CHECK(b2.mobius().at(b2.bottom(), b2.top()) == 1);
    // every value of the 3-cover of P_{2,1;N} lies in {-1,0,1}
    Poset c = mcover(p_kl_path(2, 1, "N"), 3).poset;
    MobiusTable mu = c.mobius();
    for (int x = 0; x < c.size(); ++x)
        for (int y = 0; y < c.size(); ++y)
            if (c.leq(x, y)) CHECK(std::abs(mu.at(x, y)) <= 1);
}

TEST_CASE("isomorphism search") {
    Poset p33 = p_kl(3, 3);
    auto self = find_isomorphism(p33, p33);
    REQUIRE(self.has_value());
    for (int a = 0; a < p33.size(); ++a)
        for (int b = 0; b < p33.size(); ++b)
            CHECK(p33.leq(a, b) == p33.leq((*self)[a], (*self)[b]));

    CHECK(!is_isomorphic(chain(4), p_kl(1, 1)));
    CHECK_THROWS_AS(find_isomorphism(p33, p33, 1), budget_error);
}

TEST_CASE("isomorphism is invariant under relabeling") {
    std::mt19937_64 rng(777);
    for (int round = 0; round < 20; ++round) {
        Poset p = random_bounded_poset(rng, 7);
        std::vector<int> perm(p.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        BitMatrix up(p.size(), p.size());
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                if (p.leq(a, b)) up.set(perm[a], perm[b]);
        Poset q = Poset::from_leq(std::move(up));
        auto iso = find_isomorphism(p, q);
        REQUIRE(iso.has_value());
        auto back = find_isomorphism(q, p);
        CHECK(back.has_value());
    }
}

TEST_CASE("join and meet density") {
    Poset b2 = p_kl(1, 1);
    std::vector<int> all{0, 1, 2, 3};
    CHECK(b2.is_join_dense(all));
    CHECK(b2.is_meet_dense(all));
    // a proper join-dense subset must contain all join-irreducibles
    std::vector<int> ji = b2.join_irreducibles();
    CHECK(b2.is_join_dense(ji));
    std::vector<int> missing{1};
    CHECK(!b2.is_join_dense(missing));
}

TEST_CASE("density agrees with the least-upper-bound oracle") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 25; ++round) {
        Poset p = random_bounded_poset(rng, 6);
        std::vector<int> s;
        for (int x = 0; x < p.size(); ++x)
            if (rng() & 1) s.push_back(x);
        bool expect = true;
        for (int x = 0; x < p.size(); ++x) {
            std::vector<int> below;
            for (int e : s)
                if (p.leq(e, x)) below.push_back(e);
            auto l = oracles::lub(p, below);
            if (!l || *l != x) expect = false;
        }
        CHECK(p.is_join_dense(s) == expect);
    }
}

TEST_CASE("dot export") {
    Poset two = chain(2).with_labels({"lo", "hi"});
    std::string dot = two.to_dot();
    CHECK(dot.find("lo") != std::string::npos);
    CHECK(dot.find("hi") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);

    std::string big = mcover(p_kl(1, 1), 2).poset.to_dot();
    std::size_t edges = 0;
    for (std::size_t pos = big.find("->"); pos != std::string::npos; pos = big.find("->", pos + 1))
        ++edges;
    CHECK(edges == static_cast<std::size_t>(mcover(p_kl(1, 1), 2).poset.cover_count()));
}

TEST_CASE("duality swaps the irreducibles") {
    std::mt19937_64 rng(1812);
    for (int round = 0; round < 25; ++round) {
        Poset p = random_bounded_poset(rng, 8);
        Poset d = p.dual();
        CHECK(as_set(p.meet_irreducibles()) == as_set(d.join_irreducibles()));
        CHECK(as_set(p.join_irreducibles()) == as_set(d.meet_irreducibles()));
    }
}

TEST_CASE("closure idempotence on constructed posets") {
    std::mt19937_64 rng(64);
    for (int round = 0; round < 25; ++round) {
        Poset p = random_bounded_poset(rng, 8);
        // rebuild from the cover relation alone; the order must come back
        Poset q = Poset::from_relations(p.size(), p.cover_pairs());
        CHECK(q.leq_matrix() == p.leq_matrix());
        CHECK(q.cover_matrix() == p.cover_matrix());
    }
}
