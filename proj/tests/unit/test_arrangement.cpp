#include <doctest.h>

#include "helpers.hpp"
#include "ssbid/arrangement.hpp"

using namespace ssbid;

TEST_CASE("solve_intersection propagates axis and difference constraints") {
    auto a = solve_intersection(2, {Hyperplane::make_axis(1, 3), Hyperplane::make_axis(2, 2)});
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<Coord>{3, 2});

    auto b = solve_intersection(2, {Hyperplane::make_axis(1, 3), Hyperplane::make_diff(1, 2, 1)});
    REQUIRE(b.has_value());
    CHECK(*b == std::vector<Coord>{3, 2});

    CHECK_FALSE(solve_intersection(2, {Hyperplane::make_axis(1, 3), Hyperplane::make_axis(1, 5)})
                    .has_value());
    // dependent normals: two parallel planes never pin down p_2
    CHECK_FALSE(solve_intersection(2, {Hyperplane::make_axis(1, 3), Hyperplane::make_axis(1, 3)})
                    .has_value());
    CHECK_FALSE(
        solve_intersection(3, {Hyperplane::make_diff(1, 2, 0), Hyperplane::make_diff(2, 3, 1),
                               Hyperplane::make_diff(1, 3, 1)})
            .has_value());

    auto c = solve_intersection(3, {Hyperplane::make_axis(2, 4), Hyperplane::make_diff(1, 2, -1),
                                    Hyperplane::make_diff(2, 3, 2)});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Coord>{3, 4, 2});
}

TEST_CASE("solutions satisfy every input constraint") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Hyperplane> hs;
        for (int k = 0; k < n; ++k) {
            if (rng() % 2) {
                hs.push_back(Hyperplane::make_axis(1 + rng() % n, rng() % 5));
            } else {
                int i = 1 + rng() % n, j = 1 + rng() % n;
                if (i == j) j = i % n + 1;
                hs.push_back(Hyperplane::make_diff(i, j, static_cast<Coord>(rng() % 9) - 4));
            }
        }
        auto v = solve_intersection(n, hs);
        if (!v) continue;
        RationalPoint p = to_point(*v);
        for (const auto &h : hs) CHECK(side(h, p) == 0);
    }
}

TEST_CASE("add_hyperplane enumerates new in-box vertices") {
    Arrangement arr(2, 4);
    CHECK(arr.hyperplanes().size() == 4);
    CHECK(arr.vertices().size() == 4);  // box corners

    auto fresh = arr.add_hyperplane(Hyperplane::make_axis(2, 3));
    std::set<std::vector<Coord>> got(fresh.begin(), fresh.end());
    CHECK(got == std::set<std::vector<Coord>>{{0, 3}, {4, 3}});

    auto diag = arr.add_hyperplane(Hyperplane::make_diff(1, 2, 0));
    std::set<std::vector<Coord>> got2(diag.begin(), diag.end());
    CHECK(got2 == std::set<std::vector<Coord>>{{3, 3}});  // (0,0), (4,4) already present

    CHECK_THROWS_AS(arr.add_hyperplane(Hyperplane::make_axis(2, 3)), DuplicateHyperplane);

    // far plane with no in-box intersections besides out-of-range ones
    auto none = arr.add_hyperplane(Hyperplane::make_diff(1, 2, 9));
    CHECK(none.empty());
}

TEST_CASE("signature takes strict sides only") {
    Arrangement arr(2, 4);
    arr.add_hyperplane(Hyperplane::make_axis(2, 3));
    RationalPoint p{Rat(3, 5), Rat(7, 2)};
    RationalPoint q{Rat(3, 5), Rat(5, 2)};  // mirrored across p_2 = 3
    auto sp = arr.signature(p), sq = arr.signature(q);
    REQUIRE(sp.size() == 5);
    int diffs = 0;
    for (size_t i = 0; i < sp.size(); ++i) diffs += sp[i] != sq[i];
    CHECK(diffs == 1);
    CHECK(sp[4] != sq[4]);
    CHECK_THROWS_AS(arr.signature({Rat(3, 5), Rat(3)}), OnHyperplane);
}

TEST_CASE("witnesses appear until every facet hyperplane is present") {
    BidList single = normalize(2, {Bid{{3, 2}, 1}});
    DemandOracle oracle(Instance::from(single));
    Arrangement arr(2, 4);
    for (const auto &v : arr.vertices()) arr.attach_record(super_query(oracle, v));
    CHECK(arr.find_witnesses().has_value());

    DemandOracle empty_oracle(Instance::from(BidList{2, {}}));
    Arrangement empty_arr(2, 4);
    for (const auto &v : empty_arr.vertices())
        empty_arr.attach_record(super_query(empty_oracle, v));
    CHECK_FALSE(empty_arr.find_witnesses().has_value());
}

TEST_CASE("equal signatures mean no separating hyperplane") {
    std::mt19937_64 rng(47);
    Arrangement arr(2, 4);
    arr.add_hyperplane(Hyperplane::make_axis(1, 2));
    arr.add_hyperplane(Hyperplane::make_diff(1, 2, 1));
    DemandOracle oracle(Instance::from(helpers::random_positive_list(rng, 2, 4, 4, 2)));
    for (const auto &v : arr.vertices()) arr.attach_record(super_query(oracle, v));
    CHECK(arr.vertices().size() <= 21);  // C(|H|, n) with |H| = 7
    for (size_t a = 0; a < arr.points().size(); ++a)
        for (size_t b = a + 1; b < arr.points().size(); ++b) {
            if (arr.points()[a].signature != arr.points()[b].signature) continue;
            for (const auto &h : arr.hyperplanes())
                CHECK(side(h, arr.points()[a].price) == side(h, arr.points()[b].price));
        }
}
