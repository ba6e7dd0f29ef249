#include <doctest.h>

#include <algorithm>

#include "covlat/verify.hpp"

using namespace covlat;

TEST_CASE("family generators") {
    auto family = pkl_path_family(3, 3, 3);
    // 4*4 parameter pairs, words: empty + 1 + 2 + 4 starting with N
    CHECK(family.size() == 16u * 8u);
    CHECK(family.front().name == "P(0,0;-)");
    for (const auto& [name, p] : family) CHECK(p.is_bounded());

    CHECK(exhaustive_bounded_family(6).size() == 26u);
    auto trees = tree_criterion_family(7);
    CHECK(trees.size() == 37u);
    for (const auto& [name, p] : trees) CHECK(hasse_minus_bottom_is_rooted_tree(p));
}

TEST_CASE("claimed trim shape matcher") {
    CHECK(matches_pk1_north_shape(p_kl(2, 1)));
    CHECK(matches_pk1_north_shape(p_kl_path(1, 1, "NN")));
    CHECK(matches_pk1_north_shape(p_kl_path(0, 1, "N")));  // a 4-chain
    CHECK(!matches_pk1_north_shape(p_kl(0, 0)));           // too small
    CHECK(!matches_pk1_north_shape(p_kl(2, 2)));
    CHECK(!matches_pk1_north_shape(p_kl_path(1, 1, "NE")));
}

TEST_CASE("suite rows carry the verdicts the acceptance battery relies on") {
    auto lat = suite_lattice_equivalence(exhaustive_bounded_family(5), {2});
    CHECK(lat.size() == 10u);
    CHECK(std::all_of(lat.begin(), lat.end(), [](const auto& r) { return r.ok; }));

    // the trim suite must expose both defect directions on the tiny family
    auto trim = suite_trim_characterization(pkl_path_family(1, 1, 1), {2});
    bool saw_trim_unclaimed = false, saw_claimed_untrim = false;
    for (const auto& r : trim) {
        if (r.trim && !r.claimed_shape) saw_trim_unclaimed = true;    // the 2-chain
        if (!r.trim && r.claimed_shape) saw_claimed_untrim = true;    // P(1,1;N)
        if (r.trim) CHECK(r.mobius_rule);
    }
    CHECK(saw_trim_unclaimed);
    CHECK(saw_claimed_untrim);

    auto stats = suite_cover_statistics(2, 2, {2});
    CHECK(stats.size() == 4u);
    for (const auto& r : stats) {
        CHECK(r.ok);
        CHECK(r.computed == r.predicted);
    }
    CHECK(polynomial_string({1, 12, 6, 0, 2}) == "1+12x+6x^2+2x^4");

    auto tam = suite_tamari_structure(4, 2, 2);
    for (const auto& r : tam) CHECK(r.ok);

    auto strip = suite_strip(3, 2, 3, 2);
    for (const auto& r : strip) {
        CHECK(r.ok);
        if (r.fans_enumerated >= 0) CHECK(r.fans_enumerated == r.fans_formula);
    }

    auto agree = suite_left_modular_agreement(6, 5, 6, 1);
    CHECK(!agree.empty());
    for (const auto& r : agree) CHECK(r.agree);
}
