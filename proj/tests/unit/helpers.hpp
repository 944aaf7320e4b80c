#pragma once

#include <random>

#include "ssbid/demand.hpp"

namespace helpers {

using namespace ssbid;

/// Smallest k with 2^k >= x; equals ceil(log2(x)) for x >= 1.
inline long long ceil_log2(long long x) {
    long long k = 0, v = 1;
    while (v < x) {
        v <<= 1;
        ++k;
    }
    return k;
}

inline BidList random_positive_list(std::mt19937_64 &rng, int n, int max_bids, Coord M,
                                    Weight W) {
    std::uniform_int_distribution<int> count(1, max_bids);
    std::uniform_int_distribution<Coord> coord(0, M);
    std::uniform_int_distribution<Weight> weight(1, W);
    std::vector<Bid> bids;
    int b = count(rng);
    for (int t = 0; t < b; ++t) {
        std::vector<Coord> v(n);
        for (auto &c : v) c = coord(rng);
        bids.push_back(Bid{v, weight(rng)});
    }
    return normalize(n, bids);
}

/// Arbitrary signed weights; usually not a valid SS list. Fine for the
/// delta and existence semantics, which hold for any integral list.
inline BidList random_mixed_list(std::mt19937_64 &rng, int n, int max_bids, Coord M, Weight W) {
    std::uniform_int_distribution<int> count(0, max_bids);
    std::uniform_int_distribution<Coord> coord(0, M);
    std::uniform_int_distribution<Weight> weight(-W, W);
    std::vector<Bid> bids;
    int b = count(rng);
    for (int t = 0; t < b; ++t) {
        std::vector<Coord> v(n);
        for (auto &c : v) c = coord(rng);
        Weight w = weight(rng);
        if (w == 0) w = 1;
        bids.push_back(Bid{v, w});
    }
    return normalize(n, bids);
}

inline std::vector<Coord> random_integral_point(std::mt19937_64 &rng, int n, Coord lo, Coord hi) {
    std::uniform_int_distribution<Coord> coord(lo, hi);
    std::vector<Coord> q(n);
    for (auto &c : q) c = coord(rng);
    return q;
}

/// Random price avoiding every hyperplane p_i = c and p_i - p_j = c with
/// integral c, hence non-marginal for every integral bid list.
inline RationalPoint random_nonmarginal_price(std::mt19937_64 &rng, int n, Coord lo, Coord hi) {
    const long long D = 2310;
    std::uniform_int_distribution<long long> dist(lo * D, hi * D);
    std::vector<long long> num(n);
    while (true) {
        bool ok = true;
        for (auto &a : num) a = dist(rng);
        for (int i = 0; i < n && ok; ++i) {
            if (num[i] % D == 0) ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if ((num[i] - num[j]) % D == 0) ok = false;
        }
        if (ok) break;
    }
    RationalPoint p(n);
    for (int i = 0; i < n; ++i) p[i] = Rat(num[i], D);
    return p;
}

inline Weight brute_generalized_delta(const BidList &bids, const std::vector<Coord> &q,
                                      std::uint32_t s_mask) {
    Weight sum = 0;
    for (const auto &b : bids.bids) {
        if (b.vector[0] != q[0]) continue;
        bool ok = true;
        for (int i = 2; i <= bids.n; ++i) {
            bool strict = (s_mask >> (i - 2)) & 1;
            if (strict ? b.vector[i - 1] >= q[i - 1] : b.vector[i - 1] > q[i - 1]) ok = false;
        }
        if (ok) sum += b.weight;
    }
    return sum;
}

inline Weight brute_delta(const BidList &bids, const std::vector<Coord> &q) {
    return brute_generalized_delta(bids, q, 0);
}

inline Weight brute_existence(const BidList &bids, const std::vector<Coord> &p) {
    for (const auto &b : bids.bids)
        if (b.vector == p) return b.weight;
    return 0;
}

}  // namespace helpers
