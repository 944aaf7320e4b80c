#include "ssbid/learn_positive.hpp"

namespace ssbid {

Bundle ResidualOracle::query(const RationalPoint &p, QueryCategory category) {
    Bundle b = base_.query(p, category);
    Bundle l = demand_nonmarginal(learnt_, p);
    for (size_t i = 0; i < b.size(); ++i) b[i] -= l[i];
    return b;
}

void ResidualOracle::add_learnt(const Bid &b) {
    learnt_ = merge(learnt_, BidList{learnt_.n, {b}});
}

namespace {

// Units of good 1 demanded at the q- point of (k, M, ..., M). Non-increasing
// in k, positive iff some bid has b_1 >= k (Observation 1 context).
bool good1_demand_positive(DemandSource &oracle, Coord k, Coord M) {
    std::vector<Coord> q(oracle.goods(), M);
    q[0] = k;
    auto [minus, plus] = delta_points(q);
    (void)plus;
    Bundle b = oracle.query(minus, QueryCategory::Search);
    return b[0] > 0;
}

}  // namespace

Bid find_one_positive_bid(DemandSource &oracle, Coord M) {
    const int n = oracle.goods();
    std::vector<Coord> x(n, 0);

    // Coordinate 1: largest k with good-1 demand positive at q-(k, M, ..., M).
    if (!good1_demand_positive(oracle, 0, M))
        throw InvariantViolation("no bid demands good 1 at the start of L1");
    Coord lo = 0, hi = M;
    if (M > 0 && good1_demand_positive(oracle, M, M)) {
        lo = M;
    } else {
        while (hi - lo > 1) {
            Coord mid = lo + (hi - lo) / 2;
            if (good1_demand_positive(oracle, mid, M))
                lo = mid;
            else
                hi = mid;
        }
    }
    x[0] = lo;

    // Coordinates i >= 2: smallest k with Delta((x_1..x_{i-1}, k, M..M)) > 0,
    // which is non-decreasing along L_i.
    for (int i = 2; i <= n; ++i) {
        std::vector<Coord> q(n, M);
        for (int t = 0; t < i - 1; ++t) q[t] = x[t];
        auto delta_at = [&](Coord k) {
            q[i - 1] = k;
            return delta_query(oracle, q);
        };
        if (M == 0) {
            x[i - 1] = 0;
            continue;
        }
        if (delta_at(0) > 0) {
            x[i - 1] = 0;
            continue;
        }
        if (delta_at(M) <= 0)
            throw InvariantViolation("Delta(l^i) <= 0 at the end of L" + std::to_string(i));
        Coord a = 0, b = M;  // Delta(a) <= 0 < Delta(b)
        while (b - a > 1) {
            Coord mid = a + (b - a) / 2;
            if (delta_at(mid) > 0)
                b = mid;
            else
                a = mid;
        }
        x[i - 1] = b;
    }

    Weight w = delta_query(oracle, x);
    if (w <= 0) throw InvariantViolation("Delta at the located point is not positive");
    return Bid{x, w};
}

namespace {

// All-negative non-marginal probe: every remaining positive bid demands a
// real good here, so the bundle's entry sum equals the remaining weight.
RationalPoint residual_probe(int n) {
    RationalPoint p(n);
    for (int i = 1; i <= n; ++i) p[i - 1] = Rat(-1, 2) + Rat(i, 4LL * (n + 1));
    return p;
}

}  // namespace

BidList learn_positive_bids(DemandSource &oracle, Coord upper) {
    const int n = oracle.goods();
    Coord M = find_magnitude(oracle, upper);
    ResidualOracle residual(oracle);
    RationalPoint probe = residual_probe(n);
    while (true) {
        Bundle left = residual.query(probe, QueryCategory::Search);
        Int total = 0;
        for (const Int &v : left) total += v;
        if (total == 0) break;
        residual.add_learnt(find_one_positive_bid(residual, M));
    }
    return residual.learnt();
}

}  // namespace ssbid
