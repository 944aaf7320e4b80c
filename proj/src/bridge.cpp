#include "ssbid/bridge.hpp"

#include <map>

namespace ssbid {

ValuationOracle ValuationOracle::from_positive_bids(const BidList &bids) {
    Int supply = 0;
    for (const auto &b : bids.bids) {
        if (b.weight < 0) throw NegativeWeight("valuation requires a positive bid list");
        supply += b.weight;
    }
    BidList copy = bids;
    return ValuationOracle(bids.n, supply,
                           [copy](const Bundle &x) { return valuation_positive(copy, x); });
}

std::optional<Rat> utility(ValuationOracle &vo, const Bundle &x, const RationalPoint &p) {
    auto v = vo.value(x);
    if (!v) return std::nullopt;
    Rat u = *v;
    for (size_t i = 0; i < x.size(); ++i) u -= p[i] * Rat(x[i]);
    return u;
}

std::optional<Rat> lifted_value(ValuationOracle &vo, const Int &x0, const Bundle &x) {
    Int s = 0;
    for (const auto &c : x) s += c;
    if (x0 != -s) return std::nullopt;
    return vo.value(x);
}

Bundle demand_from_valuation(ValuationOracle &vo, const RationalPoint &p) {
    const int n = vo.goods();
    std::map<Bundle, std::optional<Rat>> memo;
    auto util = [&](const Bundle &x) -> std::optional<Rat> {
        auto it = memo.find(x);
        if (it == memo.end()) it = memo.emplace(x, vo.value(x)).first;
        if (!it->second) return std::nullopt;
        Rat u = *it->second;
        for (int i = 0; i < n; ++i) u -= p[i] * Rat(x[i]);
        return u;
    };

    Bundle x(n, Int(0));
    auto current = util(x);
    if (!current) throw DomainError("valuation is minus infinity at the empty bundle");
    while (true) {
        std::optional<Rat> best;
        Bundle best_move;
        // moves x - e^i + e^j with i, j in [n]_0: add, drop, and swap
        for (int i = 0; i <= n; ++i) {
            if (i > 0 && x[i - 1] == 0) continue;
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                Bundle y = x;
                if (i > 0) --y[i - 1];
                if (j > 0) ++y[j - 1];
                auto u = util(y);
                if (u && *u > *current && (!best || *u > *best)) {
                    best = u;
                    best_move = y;  // ties keep the lexicographically first (i, j)
                }
            }
        }
        if (!best) return x;
        x = best_move;
        current = best;
    }
}

}  // namespace ssbid
