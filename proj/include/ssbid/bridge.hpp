#pragma once

#include <functional>
#include <optional>

#include "ssbid/demand.hpp"

namespace ssbid {

/// Counting wrapper around a valuation v: Bundle -> Rational, with nullopt
/// standing for minus infinity. The effective domain is finite,
/// componentwise non-negative, and bounded by ||x||_1 <= supply.
class ValuationOracle {
  public:
    using Fn = std::function<std::optional<Rat>(const Bundle &)>;

    ValuationOracle(int n, Int supply, Fn evaluator)
        : n_(n), supply_(std::move(supply)), evaluator_(std::move(evaluator)) {}

    /// Ground-truth valuation of a positive bid list; supply is the sum of
    /// the weights.
    static ValuationOracle from_positive_bids(const BidList &bids);

    std::optional<Rat> value(const Bundle &x) {
        ++queries_;
        return evaluator_(x);
    }

    int goods() const { return n_; }
    const Int &supply() const { return supply_; }
    long long queries() const { return queries_; }
    void reset_counter() { queries_ = 0; }

  private:
    int n_;
    Int supply_;
    Fn evaluator_;
    long long queries_ = 0;
};

/// Quasi-linear utility u(x; p) = v(x) - p.x; one valuation query.
std::optional<Rat> utility(ValuationOracle &vo, const Bundle &x, const RationalPoint &p);

/// The M-concave lift of the valuation: v(x) when x0 = -sum(x), minus
/// infinity otherwise. Test object for the lift identity only.
std::optional<Rat> lifted_value(ValuationOracle &vo, const Int &x0, const Bundle &x);

/// A utility maximizer at p, by steepest ascent from x = 0 over the
/// neighborhood {x - e^i + e^j : i, j in [n]_0}. Local optimality over this
/// neighborhood is global for M-natural-concave valuations. Valuations are
/// memoized per bundle, keeping the counter within (n+1)^2 (supply+1).
/// Throws DomainError if v(0) is minus infinity.
Bundle demand_from_valuation(ValuationOracle &vo, const RationalPoint &p);

}  // namespace ssbid
