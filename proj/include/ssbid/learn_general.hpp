#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "ssbid/arrangement.hpp"

namespace ssbid {

/// Witness pair refined to L-infinity distance < 1/4 with distinct recorded
/// bundles.
struct RefinedWitnesses {
    RationalPoint s, s_prime;
    Bundle b, b_prime;
};

/// Bisects the segment [q, q'] until the endpoints are closer than 1/4.
/// Midpoints may be marginal; the half whose endpoint bundles still differ is
/// kept, which always exists.
RefinedWitnesses binary_search_refine(DemandSource &oracle, const RationalPoint &q,
                                      const RationalPoint &q_prime);

/// The unique point of [s, s'] where p_i - p_j is integral (p_0 = 0), or
/// nullopt. Requires ||s - s'||_inf <= 1/4 so at most one integer is hit.
std::optional<RationalPoint> intersection_lambda(const RationalPoint &s,
                                                 const RationalPoint &s_prime, int i, int j);

using RecordCache = std::map<std::vector<Coord>, SuperQueryRecord>;

/// A facet hyperplane separating the cells of the witnesses q, q', found by
/// refining, intersecting candidate normals, and super-querying the rounded
/// intersection points. Hyperplanes in `known` are skipped; records are
/// reused through `cache` when given.
/// Throws NoFacetFound if every candidate fails (invalid oracle or bug).
Hyperplane find_separating_hyperplane(DemandSource &oracle, const RationalPoint &q,
                                      const RationalPoint &q_prime,
                                      const std::vector<Hyperplane> &known = {},
                                      RecordCache *cache = nullptr);

struct LearnLimits {
    std::size_t max_hyperplanes = 10000;
    std::size_t max_vertices = 1000000;
    Coord magnitude_upper = Coord(1) << 40;
};

struct LearnStats {
    std::size_t hyperplanes = 0;  // box planes included
    std::size_t vertices = 0;
    Coord magnitude = 0;
};

/// Full learner for mixed-sign valid bid lists: discovers every LIP facet
/// hyperplane via witness pairs, super-queries all arrangement vertices, and
/// reads bids off the vertex records. Cost grows as 2^n n! C(|H|, n); the
/// limits make the blow-up fail loudly instead of hanging.
BidList learn_general_bids(DemandSource &oracle, const LearnLimits &limits = {},
                           LearnStats *stats = nullptr);

/// Spot check: samples random non-marginal prices in [-1, M+1]^n and compares
/// the learnt list's demand with the oracle's. Deterministic under seed.
bool verify_learned(DemandSource &oracle, const BidList &learnt, int trials,
                    std::uint64_t seed);

}  // namespace ssbid
