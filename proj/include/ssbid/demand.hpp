#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssbid/bids.hpp"
#include "ssbid/errors.hpp"

namespace ssbid {

/// Goods (including the reject good 0) maximizing b_i - p_i. Never empty.
std::vector<int> bid_demanded_goods(const Bid &b, const RationalPoint &p);

/// True iff some bid is indifferent between two or more goods at p.
bool is_marginal(const BidList &bids, const RationalPoint &p);

/// Aggregate demand at a non-marginal price: each bid contributes weight
/// items of its uniquely demanded good (reject contributes nothing).
/// Throws MarginalPrice if p is marginal.
Bundle demand_nonmarginal(const BidList &bids, const RationalPoint &p);

/// Demand in the limit p + t*dir as t -> 0+, where dir has pairwise distinct
/// nonzero entries (the reject direction is 0). Each bid's tie is resolved
/// towards the good with the smallest direction component.
Bundle directional_demand(const BidList &bids, const RationalPoint &p, const RationalPoint &dir);

/// Integer points of the convex hull of the given bundles, by brute force
/// over the integer bounding box. Test-oracle scale only.
std::set<Bundle> discrete_convex_hull(const std::set<Bundle> &bundles);

/// Full demand set D_B(p): discrete convex hull of the bundles demanded at
/// non-marginal prices arbitrarily close to p. Test-oracle scale only.
std::set<Bundle> demand_set(const BidList &bids, const RationalPoint &p);

/// demand_nonmarginal at the price t/s, in plain integer arithmetic. Fast
/// path for lattice scans; coordinates must stay far below 2^63 / s.
Bundle demand_nonmarginal_scaled(const BidList &bids, const std::vector<long long> &t,
                                 long long s);

enum class QueryCategory { Delta, Existence, Super, Search, Other };

std::string category_name(QueryCategory c);

struct QueryLedger {
    long long total = 0;
    std::map<QueryCategory, long long> by_category;

    void add(QueryCategory c) {
        ++total;
        ++by_category[c];
    }
    long long category(QueryCategory c) const {
        auto it = by_category.find(c);
        return it == by_category.end() ? 0 : it->second;
    }
};

/// Anything that can answer demand queries (a real oracle or a residual view
/// of one). Every invocation is charged to a ledger by the implementation.
class DemandSource {
  public:
    virtual ~DemandSource() = default;
    virtual Bundle query(const RationalPoint &p, QueryCategory category) = 0;
    virtual int goods() const = 0;
};

/// The adversarial demand oracle Q_B. At marginal prices each bid's tie is
/// broken by a fixed priority permutation over [n]_0, which equals demand at
/// an infinitesimally perturbed non-marginal price and hence always returns
/// an element of D_B(p).
class DemandOracle : public DemandSource {
  public:
    explicit DemandOracle(Instance instance, std::vector<int> priority = {});

    Bundle query(const RationalPoint &p, QueryCategory category) override;
    int goods() const override { return instance_.bidlist.n; }

    const QueryLedger &ledger() const { return ledger_; }
    void reset_ledger() { ledger_ = QueryLedger{}; }
    const Instance &hidden() const { return instance_; }

  private:
    Instance instance_;
    std::vector<int> priority_;  // priority_[k] = k-th preferred good in [n]_0
    RationalPoint tie_dir_;      // direction realizing the priority, dir[0] = 0
    QueryLedger ledger_;
};

/// Recovers the magnitude M by doubling followed by binary search on the
/// diagonal, probing at (m + 1/2) * e^[n]. O(log M) queries. Throws
/// UpperBoundTooSmall if demand is still nonempty at (upper + 1/2) * e^[n].
Coord find_magnitude(DemandSource &oracle, Coord upper);

/// Ground-truth valuation of a positive bid list by brute-force assignment of
/// unit bids to goods. Returns nullopt for minus infinity. Intended for
/// sum of weights <= 8 and n <= 3. Throws NegativeWeight on negative bids.
std::optional<Rat> valuation_positive(const BidList &bids, const Bundle &x);

}  // namespace ssbid
