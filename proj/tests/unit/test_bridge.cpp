#include <doctest.h>

#include "helpers.hpp"
#include "ssbid/bridge.hpp"

using namespace ssbid;

TEST_CASE("utility and lifted_value on a single unit bid") {
    ValuationOracle vo = ValuationOracle::from_positive_bids(normalize(2, {Bid{{2, 3}, 1}}));
    CHECK(vo.supply() == 1);
    CHECK(*vo.value({Int(0), Int(0)}) == 0);
    CHECK(*vo.value({Int(1), Int(0)}) == 2);
    CHECK(*vo.value({Int(0), Int(1)}) == 3);
    CHECK_FALSE(vo.value({Int(1), Int(1)}).has_value());  // beyond supply
    CHECK(vo.queries() == 4);

    CHECK(*utility(vo, {Int(0), Int(1)}, {Rat(1), Rat(1)}) == 2);
    CHECK(*utility(vo, {Int(0), Int(1)}, {Rat(3), Rat(4)}) == -1);
    CHECK_FALSE(utility(vo, {Int(2), Int(0)}, {Rat(1), Rat(1)}).has_value());

    // the lift is finite exactly on the plane x_0 = -sum(x)
    CHECK(*lifted_value(vo, Int(-1), {Int(0), Int(1)}) == 3);
    CHECK_FALSE(lifted_value(vo, Int(0), {Int(0), Int(1)}).has_value());
    CHECK(*lifted_value(vo, Int(0), {Int(0), Int(0)}) == 0);

    CHECK_THROWS_AS(ValuationOracle::from_positive_bids(normalize(2, {Bid{{1, 1}, -1}})),
                    NegativeWeight);
}

TEST_CASE("demand_from_valuation walks to a maximizer") {
    ValuationOracle vo = ValuationOracle::from_positive_bids(normalize(2, {Bid{{2, 3}, 1}}));
    CHECK(demand_from_valuation(vo, {Rat(1), Rat(1)}) == Bundle{Int(0), Int(1)});
    CHECK(demand_from_valuation(vo, {Rat(3), Rat(4)}) == Bundle{Int(0), Int(0)});
    // everything ties at utility zero: no strict ascent from the origin
    CHECK(demand_from_valuation(vo, {Rat(2), Rat(3)}) == Bundle{Int(0), Int(0)});

    ValuationOracle bad(2, Int(1), [](const Bundle &) { return std::nullopt; });
    CHECK_THROWS_AS(demand_from_valuation(bad, {Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("valuation demand matches bid list demand within the query budget") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 25; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        Coord M = static_cast<Coord>(rng() % 6);
        BidList bids = helpers::random_positive_list(rng, n, 2, M, 2);
        ValuationOracle vo = ValuationOracle::from_positive_bids(bids);
        long long L = vo.supply().convert_to<long long>();
        for (int s = 0; s < 4; ++s) {
            RationalPoint p = helpers::random_nonmarginal_price(rng, n, -1, M + 1);
            vo.reset_counter();
            CHECK(demand_from_valuation(vo, p) == demand_nonmarginal(bids, p));
            CHECK(vo.queries() <= (n + 1LL) * (n + 1) * (L + 1));
        }
    }
}
