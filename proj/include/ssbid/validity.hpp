#pragma once

#include <optional>
#include <set>
#include <utility>

#include "ssbid/bids.hpp"
#include "ssbid/geometry.hpp"

namespace ssbid {

/// First indifference support with a negative weight sum, in scan order.
struct ViolationWitness {
    RationalPoint p;
    int i = 0, j = 0;  // goods in [n]_0
    Weight sum = 0;
};

/// Bids whose demanded-goods set at p contains both i and j, with the sum of
/// their weights.
std::pair<BidList, Weight> indifference_support(const BidList &bids, const RationalPoint &p,
                                                int i, int j);

/// Validity check: every indifference support must have a non-negative
/// weight sum. Scans all ordered good pairs over the lattice
/// (1/(n+1)) Z^n intersected with [-1, M+1]^n; the spacing realizes every
/// strict ordering of up to n fractional parts, so each face of the
/// integral-offset arrangement meeting the box is sampled.
/// Returns nullopt when valid, otherwise the first violation found.
std::optional<ViolationWitness> is_valid(const BidList &bids);

/// Superset of all hyperplanes that can carry an LIP facet: p_i = b_i and
/// p_i - p_j = b_i - b_j over all bids and good pairs.
std::set<Hyperplane> candidate_hyperplanes(const BidList &bids);

}  // namespace ssbid
