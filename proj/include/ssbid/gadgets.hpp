#pragma once

#include <cstdint>

#include "ssbid/bids.hpp"

namespace ssbid {

/// +1 when v has an even number of odd entries, -1 otherwise.
int rho(const std::vector<Coord> &v);

/// The island gadget at x: unit bids of weight rho(b - x) on x + {0,1}^n and
/// -rho(b - x) on x + {2,3}^n. Total weight zero; demand is unaffected
/// outside x + [3]_0^n.
BidList island_gadget(const std::vector<Coord> &x, int n);

/// Weight-1 axis bids m e^i for m in {0..M-1}, weight-2 bids m e^i + M e^j
/// for every ordered pair i != j and m in {0..M-1}, plus weight-2 corners
/// M(e^i + e^j) for i < j. Normalization merges the shared points (the
/// origin ends up with weight n).
BidList boundary_bids(int n, Coord M);

/// Island gadget at gadget_cell plus boundary bids with M = 4k. The cell
/// must lie on the lattice 4 [k-1]_0^n.
/// Throws CellOutOfRange otherwise.
BidList adversarial_instance(int n, int k, const std::vector<Coord> &gadget_cell);

/// Exhaustive no-leak check: at every super-query representative around every
/// integral point of [-1, M+1]^n outside x + [3]_0^n, demand of
/// base + gadget(x) equals demand of base.
bool gadget_leak_check(const std::vector<Coord> &x, const BidList &base, int n, Coord M);

/// True iff {x in {0,1}^n : x <= c} has equally many vectors of even and odd
/// parity. Throws PreconditionUnmet unless some c_i >= 1.
bool parity_count_check(const RationalPoint &c);

struct LowerBoundReport {
    int n = 0, k = 0;
    long long queries_used = 0;
    long long k_power_n = 0;  // information-theoretic floor is k^n - 1
    std::vector<Coord> located_cell;
    bool recovered = false;
    long long bid_count = 0;         // unit constituents of the construction
    long long merged_bid_count = 0;  // distinct bid points before the gadget merge
};

/// Hides the gadget in a random cell, runs the general learner, and reports
/// its query count against the k^n - 1 floor. Deterministic under seed.
LowerBoundReport lower_bound_experiment(int n, int k, std::uint64_t seed);

}  // namespace ssbid
