#include <doctest.h>

#include "helpers.hpp"

using namespace ssbid;

TEST_CASE("bid_demanded_goods computes the argmax over goods and reject") {
    Bid b{{3, 2}, 1};
    CHECK(bid_demanded_goods(b, {Rat(5, 2), Rat(5, 2)}) == std::vector<int>{1});
    CHECK(bid_demanded_goods(b, {Rat(3), Rat(5, 2)}) == std::vector<int>{0, 1});
    CHECK(bid_demanded_goods(Bid{{0, 0}, 1}, {Rat(0), Rat(0)}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("is_marginal detects ties") {
    BidList bids = normalize(2, {Bid{{3, 2}, 1}});
    CHECK_FALSE(is_marginal(bids, {Rat(3), Rat(1)}));
    CHECK(is_marginal(bids, {Rat(3), Rat(2)}));
    CHECK_FALSE(is_marginal(bids, {Rat(29, 10), Rat(5, 2)}));
    CHECK_FALSE(is_marginal(BidList{2, {}}, {Rat(0), Rat(0)}));
}

TEST_CASE("demand_nonmarginal sums weighted unit vectors") {
    BidList bids = normalize(2, {Bid{{2, 0}, 1}, Bid{{0, 0}, 1}, Bid{{1, 3}, 1}});
    CHECK(demand_nonmarginal(bids, {Rat(1), Rat(2)}) == Bundle{1, 1});
    BidList single = normalize(2, {Bid{{3, 2}, 1}});
    CHECK(demand_nonmarginal(single, {Rat(5, 2), Rat(13, 5)}) == Bundle{1, 0});
    CHECK(demand_nonmarginal(single, {Rat(9, 2), Rat(9, 2)}) == Bundle{0, 0});
    CHECK_THROWS_AS(demand_nonmarginal(single, {Rat(3), Rat(2)}), MarginalPrice);
}

TEST_CASE("demand_set collects the discrete hull at marginal prices") {
    BidList single = normalize(2, {Bid{{3, 2}, 1}});
    CHECK(demand_set(single, {Rat(3), Rat(5, 2)}) ==
          std::set<Bundle>{Bundle{0, 0}, Bundle{1, 0}});
    CHECK(demand_set(single, {Rat(29, 10), Rat(5, 2)}) == std::set<Bundle>{Bundle{1, 0}});
    BidList heavy = normalize(2, {Bid{{3, 2}, 2}});
    CHECK(demand_set(heavy, {Rat(3), Rat(5, 2)}) ==
          std::set<Bundle>{Bundle{0, 0}, Bundle{1, 0}, Bundle{2, 0}});
}

TEST_CASE("oracle tie-breaking follows the priority permutation") {
    Instance inst = Instance::from(normalize(2, {Bid{{3, 2}, 1}}));
    RationalPoint tie{Rat(3), Rat(2)};

    DemandOracle reject_first(inst);
    CHECK(reject_first.query(tie, QueryCategory::Other) == Bundle{0, 0});
    CHECK(reject_first.ledger().total == 1);

    DemandOracle favor_one(inst, {1, 0, 2});
    CHECK(favor_one.query(tie, QueryCategory::Other) == Bundle{1, 0});

    CHECK_THROWS_AS(DemandOracle(inst, {0, 1}), DimensionMismatch);
    CHECK_THROWS_AS(DemandOracle(inst, {0, 1, 1}), DimensionMismatch);
}

TEST_CASE("oracle answers stay inside the demand set") {
    std::mt19937_64 rng(3);
    std::vector<std::vector<int>> priorities{{0, 1, 2}, {2, 1, 0}, {1, 2, 0}, {0, 2, 1}};
    for (int t = 0; t < 20; ++t) {
        BidList bids = helpers::random_positive_list(rng, 2, 4, 4, 2);
        Instance inst = Instance::from(bids);
        for (const auto &prio : priorities) {
            DemandOracle oracle(inst, prio);
            // marginal prices: bid corners and midpoints of edges
            for (const auto &b : bids.bids) {
                RationalPoint corner{Rat(b.vector[0]), Rat(b.vector[1])};
                auto ds = demand_set(bids, corner);
                CHECK(ds.count(oracle.query(corner, QueryCategory::Other)) == 1);
            }
            for (int s = 0; s < 10; ++s) {
                RationalPoint p = helpers::random_nonmarginal_price(rng, 2, -1, 5);
                CHECK(oracle.query(p, QueryCategory::Other) == demand_nonmarginal(bids, p));
            }
        }
    }
}

TEST_CASE("strong-substitutes monotonicity on positive lists") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(rng() % 2);
        BidList bids = helpers::random_positive_list(rng, n, 5, 6, 3);
        RationalPoint p = helpers::random_nonmarginal_price(rng, n, 0, 7);
        RationalPoint q = p;
        // raise a random subset of prices by a non-integral amount
        for (int i = 0; i < n; ++i)
            if (rng() % 2) q[i] += Rat(1 + static_cast<int>(rng() % 3), 7);
        if (is_marginal(bids, q)) continue;
        Bundle x = demand_nonmarginal(bids, p), y = demand_nonmarginal(bids, q);
        Int totx = 0, toty = 0;
        for (int i = 0; i < n; ++i) {
            totx += x[i];
            toty += y[i];
            if (p[i] == q[i]) CHECK(y[i] >= x[i]);
        }
        CHECK(toty <= totx);
    }
}

TEST_CASE("find_magnitude probes the diagonal") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 25; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        BidList bids = helpers::random_positive_list(rng, n, 5, 30, 2);
        Instance inst = Instance::from(bids);
        DemandOracle oracle(inst);
        CHECK(find_magnitude(oracle, 1000) == inst.magnitude);
    }
    DemandOracle empty(Instance::from(BidList{2, {}}));
    CHECK(find_magnitude(empty, 100) == 0);
    DemandOracle big(Instance::from(normalize(2, {Bid{{9, 9}, 1}})));
    CHECK_THROWS_AS(find_magnitude(big, 4), UpperBoundTooSmall);
}

TEST_CASE("valuation_positive brute-forces the assignment problem") {
    BidList bids = normalize(2, {Bid{{2, 3}, 1}});
    CHECK(valuation_positive(bids, Bundle{1, 0}) == Rat(2));
    CHECK(valuation_positive(bids, Bundle{0, 0}) == Rat(0));
    CHECK_FALSE(valuation_positive(bids, Bundle{1, 1}).has_value());
    CHECK_THROWS_AS(valuation_positive(normalize(2, {Bid{{1, 1}, -1}}), Bundle{0, 0}),
                    NegativeWeight);
    BidList two = normalize(2, {Bid{{2, 3}, 1}, Bid{{4, 1}, 1}});
    CHECK(valuation_positive(two, Bundle{1, 1}) == Rat(7));
    CHECK(valuation_positive(two, Bundle{2, 0}) == Rat(6));
    CHECK(valuation_positive(two, Bundle{0, 1}) == Rat(3));
}

namespace {

// exchange property of the M-natural lift: for i with x_i > y_i there is
// j with x_j < y_j, or the plain drop move, fixing the inequality
bool exchange_holds(const BidList &bids, const Bundle &x, const Bundle &y) {
    auto fx = valuation_positive(bids, x), fy = valuation_positive(bids, y);
    if (!fx || !fy) return true;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= y[i]) continue;
        bool found = false;
        auto try_pair = [&](int j) {
            Bundle xe = x, ye = y;
            --xe[i];
            ++ye[i];
            if (j >= 0) {
                ++xe[j];
                --ye[j];
            }
            auto fxe = valuation_positive(bids, xe), fye = valuation_positive(bids, ye);
            if (fxe && fye && *fx + *fy <= *fxe + *fye) found = true;
        };
        try_pair(-1);  // j = 0, the reject good
        for (size_t j = 0; j < x.size() && !found; ++j)
            if (x[j] < y[j]) try_pair(static_cast<int>(j));
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("valuation_positive satisfies the exchange property") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        int n = 2;
        BidList bids = helpers::random_positive_list(rng, n, 3, 4, 1);
        Int supply = 0;
        for (const auto &b : bids.bids) supply += b.weight;
        long long cap = supply.convert_to<long long>();
        for (long long x1 = 0; x1 <= cap; ++x1)
            for (long long x2 = 0; x1 + x2 <= cap; ++x2)
                for (long long y1 = 0; y1 <= cap; ++y1)
                    for (long long y2 = 0; y1 + y2 <= cap; ++y2)
                        CHECK(exchange_holds(bids, Bundle{x1, x2}, Bundle{y1, y2}));
    }
}
