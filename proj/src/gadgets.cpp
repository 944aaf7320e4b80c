#include "ssbid/gadgets.hpp"

#include <random>

#include "ssbid/demand.hpp"
#include "ssbid/learn_general.hpp"
#include "ssbid/queries.hpp"

namespace ssbid {

int rho(const std::vector<Coord> &v) {
    int odd = 0;
    for (Coord c : v) odd ^= static_cast<int>(c & 1);
    return odd ? -1 : 1;
}

BidList island_gadget(const std::vector<Coord> &x, int n) {
    std::vector<Bid> bids;
    std::vector<Coord> off(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i) off[i] = (mask >> i) & 1;
        std::vector<Coord> lower(n), upper(n);
        for (int i = 0; i < n; ++i) {
            lower[i] = x[i] + off[i];
            upper[i] = x[i] + off[i] + 2;
        }
        int sign = rho(off);
        bids.push_back(Bid{lower, sign});
        bids.push_back(Bid{upper, -sign});
    }
    return normalize(n, bids);
}

BidList boundary_bids(int n, Coord M) {
    std::vector<Bid> bids;
    for (int i = 0; i < n; ++i)
        for (Coord m = 0; m < M; ++m) {
            std::vector<Coord> v(n, 0);
            v[i] = m;
            bids.push_back(Bid{v, 1});
        }
    // Pair families and corners carry weight 2: with two goods both negative
    // bids on a diagonal of the upper gadget cube can sit in one indifference
    // support (prices between the cubes), a deficit of 2 that a single cover
    // bid on the difference line cannot absorb.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Coord m = 0; m < M; ++m) {
                std::vector<Coord> v(n, 0);
                v[i] = m;
                v[j] = M;
                bids.push_back(Bid{v, 2});
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Coord> v(n, 0);
            v[i] = M;
            v[j] = M;
            bids.push_back(Bid{v, 2});
        }
    return normalize(n, bids);
}

BidList adversarial_instance(int n, int k, const std::vector<Coord> &gadget_cell) {
    if (static_cast<int>(gadget_cell.size()) != n)
        throw DimensionMismatch("gadget cell dimension does not match good count");
    for (Coord c : gadget_cell)
        if (c < 0 || c > 4 * (k - 1) || c % 4 != 0)
            throw CellOutOfRange("gadget cell must lie on the lattice 4[k-1]_0^n");
    return merge(island_gadget(gadget_cell, n), boundary_bids(n, 4 * Coord(k)));
}

bool gadget_leak_check(const std::vector<Coord> &x, const BidList &base, int n, Coord M) {
    BidList with_gadget = merge(base, island_gadget(x, n));
    const long long s = 4LL * n * (n + 1);  // common denominator of the offsets

    std::vector<Coord> q(n, -1);
    while (true) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
            if (q[i] < x[i] || q[i] > x[i] + 3) inside = false;
        if (!inside) {
            for (const auto &cell : super_query_points(q)) {
                std::vector<long long> t(n);
                for (int i = 0; i < n; ++i) {
                    int rank = 0;
                    while (cell.perm[rank] != i + 1) ++rank;
                    long long off = s / 2 + (rank + 1);
                    t[i] = q[i] * s + ((cell.orthant >> i) & 1 ? off : off - s);
                }
                if (demand_nonmarginal_scaled(with_gadget, t, s) !=
                    demand_nonmarginal_scaled(base, t, s))
                    return false;
            }
        }
        int i = 0;
        while (i < n && q[i] == M + 1) {
            q[i] = -1;
            ++i;
        }
        if (i == n) break;
        ++q[i];
    }
    return true;
}

bool parity_count_check(const RationalPoint &c) {
    const int n = static_cast<int>(c.size());
    bool some = false;
    for (const auto &ci : c) some |= ci >= 1;
    if (!some) throw PreconditionUnmet("some coordinate must be at least 1");
    long long even = 0, odd = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool fits = true;
        int ones = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) {
                ++ones;
                if (c[i] < 1) fits = false;
            }
        if (!fits) continue;
        (ones % 2 == 0 ? even : odd) += 1;
    }
    return even == odd;
}

LowerBoundReport lower_bound_experiment(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Coord> pick(0, k - 1);
    std::vector<Coord> cell(n);
    for (auto &c : cell) c = 4 * pick(rng);

    BidList hidden = adversarial_instance(n, k, cell);
    DemandOracle oracle(Instance::from(hidden));
    BidList learnt = learn_general_bids(oracle);

    LowerBoundReport report;
    report.n = n;
    report.k = k;
    report.queries_used = oracle.ledger().total;
    report.k_power_n = 1;
    for (int i = 0; i < n; ++i) report.k_power_n *= k;
    report.recovered = bidlists_equal(learnt, hidden);
    report.bid_count =
        (1LL << (n + 1)) + 4LL * k * n + 8LL * k * n * (n - 1) + 1LL * n * (n - 1);
    report.merged_bid_count =
        (1LL << (n + 1)) + 4LL * k * n + 4LL * k * n * (n - 1) + n * (n - 1) / 2;

    // identify the cell from the recovered list
    std::vector<Coord> probe(n, 0);
    while (true) {
        std::vector<Coord> candidate(n);
        for (int i = 0; i < n; ++i) candidate[i] = 4 * probe[i];
        if (bidlists_equal(learnt, adversarial_instance(n, k, candidate))) {
            report.located_cell = candidate;
            break;
        }
        int i = 0;
        while (i < n && probe[i] == k - 1) {
            probe[i] = 0;
            ++i;
        }
        if (i == n) break;
        ++probe[i];
    }
    return report;
}

}  // namespace ssbid
