#pragma once

#include "ssbid/queries.hpp"

namespace ssbid {

/// View of an oracle with the already-learnt bids subtracted out. Only valid
/// at prices that are non-marginal for every integral bid list, where the
/// learnt list's demand is a single bundle.
class ResidualOracle : public DemandSource {
  public:
    explicit ResidualOracle(DemandSource &base) : base_(base) {
        learnt_.n = base.goods();
    }

    Bundle query(const RationalPoint &p, QueryCategory category) override;
    int goods() const override { return learnt_.n; }

    const BidList &learnt() const { return learnt_; }
    void add_learnt(const Bid &b);

  private:
    DemandSource &base_;
    BidList learnt_;
};

/// One bid of the oracle's hidden all-positive list, found by per-coordinate
/// binary search along axis segments. M bounds the magnitude.
/// Cost at most 4n(ceil(log2(M+1)) + 1) demand queries.
/// Throws InvariantViolation when a search invariant fails, which signals a
/// negative-weight hidden list.
Bid find_one_positive_bid(DemandSource &oracle, Coord M);

/// Recovers an all-positive hidden list exactly by repeatedly finding a bid
/// and removing it from a residual view. Runs find_magnitude first; upper
/// bounds the magnitude search.
BidList learn_positive_bids(DemandSource &oracle, Coord upper = Coord(1) << 40);

}  // namespace ssbid
