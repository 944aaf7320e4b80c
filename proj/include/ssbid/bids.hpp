#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ssbid/errors.hpp"
#include "ssbid/rational.hpp"

namespace ssbid {

using Coord = long long;
using Weight = long long;

/// Price vector over the n real goods. The reject good 0 is implicit and has
/// price fixed at 0.
using RationalPoint = std::vector<Rat>;

/// Aggregate demand. Entries may be transiently negative while working with
/// invalid bid lists.
using Bundle = std::vector<Int>;

/// An integral bid vector together with a signed nonzero weight.
struct Bid {
    std::vector<Coord> vector;
    Weight weight = 0;

    friend bool operator==(const Bid &, const Bid &) = default;
};

struct BidList {
    int n = 0;
    std::vector<Bid> bids;

    friend bool operator==(const BidList &, const BidList &) = default;
};

/// Canonical form: weights merged per vector, zero weights dropped, bids
/// ordered lexicographically by vector.
inline BidList normalize(int n, const std::vector<Bid> &bids) {
    std::map<std::vector<Coord>, Weight> merged;
    for (const auto &b : bids) {
        if (static_cast<int>(b.vector.size()) != n)
            throw DimensionMismatch("bid dimension does not match good count");
        merged[b.vector] += b.weight;
    }
    BidList out;
    out.n = n;
    for (const auto &[v, w] : merged)
        if (w != 0) out.bids.push_back(Bid{v, w});
    return out;
}

inline BidList normalize(const BidList &list) { return normalize(list.n, list.bids); }

/// Equality as sets of (vector, weight) pairs; both inputs must be normalized.
inline bool bidlists_equal(const BidList &a, const BidList &b) {
    return a.n == b.n && a.bids == b.bids;
}

inline BidList merge(const BidList &a, const BidList &b) {
    if (a.n != b.n) throw DimensionMismatch("cannot merge bid lists of different dimension");
    std::vector<Bid> all = a.bids;
    all.insert(all.end(), b.bids.begin(), b.bids.end());
    return normalize(a.n, all);
}

/// Bid list plus its derived parameters: magnitude M (max L-infinity norm of
/// the vectors) and maximum bid weight W.
struct Instance {
    BidList bidlist;
    Coord magnitude = 0;
    Weight max_weight = 0;

    static Instance from(BidList list) {
        Instance inst;
        inst.bidlist = normalize(list);
        for (const auto &b : inst.bidlist.bids) {
            for (Coord c : b.vector) inst.magnitude = std::max(inst.magnitude, c);
            inst.max_weight = std::max(inst.max_weight, std::abs(b.weight));
        }
        return inst;
    }
};

inline RationalPoint to_point(const std::vector<Coord> &q) {
    RationalPoint p;
    p.reserve(q.size());
    for (Coord c : q) p.emplace_back(c);
    return p;
}

}  // namespace ssbid
