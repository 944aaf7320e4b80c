#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ssbid/demand.hpp"
#include "ssbid/geometry.hpp"

namespace ssbid {

/// The perturbed pair (q-, q+) around an integral point: q' shifts
/// coordinate i >= 2 by 1/(2(n-i+1)) and the pair splits coordinate 1 by
/// +-1/(2n). Both points are non-marginal for every integral bid list.
std::pair<RationalPoint, RationalPoint> delta_points(const std::vector<Coord> &q);

/// Subsets S of {2..n} are passed as bitmasks: bit (i-2) set means i in S.
std::pair<RationalPoint, RationalPoint> generalized_delta_points(const std::vector<Coord> &q,
                                                                 std::uint32_t s_mask);

/// Delta query: first-coordinate demand difference between q- and q+.
/// Equals the sum of the weights of bids with b_1 = q_1 and b <= q.
/// Costs exactly 2 ledger queries.
Weight delta_query(DemandSource &oracle, const std::vector<Coord> &q);

/// Generalized delta query w.r.t. S: counts bids with b_1 = q_1 and
/// b <= q(S). Costs exactly 2 ledger queries.
Weight generalized_delta_query(DemandSource &oracle, const std::vector<Coord> &q,
                               std::uint32_t s_mask);

/// Weight of the bid at p, or 0 if there is none. Inclusion-exclusion over
/// all 2^(n-1) generalized delta queries; costs exactly 2^n ledger queries.
Weight existence_query(DemandSource &oracle, const std::vector<Coord> &p);

/// One cell of the orthant-permutation triangulation of the unit ball.
struct SuperCell {
    std::uint32_t orthant = 0;   // bit (i-1) set: a_i = +1
    std::vector<int> perm;       // goods ordered by increasing magnitude rank
    RationalPoint point;         // representative interior price
};

/// Representative interior points of all 2^n * n! cells around p. Each
/// orthant cube is cut by the ordering of its Freudenthal coordinates
/// t_i = a_i > 0 ? x_i : x_i + 1; the representative puts t at 1/2 + rank *
/// eps with eps = 1/(4n(n+1)). Every point is non-marginal for every
/// integral bid list and within L-infinity distance < 1 of p.
std::vector<SuperCell> super_query_points(const std::vector<Coord> &p);

struct SuperQueryRecord {
    int n = 0;
    std::vector<Coord> center;
    std::vector<SuperCell> cells;
    std::vector<Bundle> bundles;  // parallel to cells
};

/// Queries every representative point; costs 2^n * n! ledger queries.
SuperQueryRecord super_query(DemandSource &oracle, const std::vector<Coord> &p);

/// Demand set at any price within L-infinity distance < 1 of the record's
/// center, reconstructed with no further oracle queries.
std::set<Bundle> local_demand(const SuperQueryRecord &rec, const RationalPoint &p);

/// Hyperplanes through the center that carry a facet of the LIP within the
/// unit ball, detected by mirrored representative cell pairs.
std::set<Hyperplane> local_facets(const SuperQueryRecord &rec);

/// Simulates existence_query(center) from the record at zero ledger cost.
Weight existence_from_record(const SuperQueryRecord &rec);

}  // namespace ssbid
