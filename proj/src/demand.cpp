#include "ssbid/demand.hpp"

#include <algorithm>
#include <numeric>

namespace ssbid {

std::vector<int> bid_demanded_goods(const Bid &b, const RationalPoint &p) {
    if (b.vector.size() != p.size())
        throw DimensionMismatch("bid and price dimension differ");
    // Surplus of the reject good is 0.
    Rat best = 0;
    std::vector<int> argmax{0};
    for (size_t i = 0; i < p.size(); ++i) {
        Rat surplus = Rat(b.vector[i]) - p[i];
        if (surplus > best) {
            best = surplus;
            argmax.assign(1, static_cast<int>(i) + 1);
        } else if (surplus == best) {
            argmax.push_back(static_cast<int>(i) + 1);
        }
    }
    return argmax;
}

bool is_marginal(const BidList &bids, const RationalPoint &p) {
    for (const auto &b : bids.bids)
        if (bid_demanded_goods(b, p).size() > 1) return true;
    return false;
}

Bundle demand_nonmarginal(const BidList &bids, const RationalPoint &p) {
    Bundle out(bids.n, Int(0));
    for (const auto &b : bids.bids) {
        auto goods = bid_demanded_goods(b, p);
        if (goods.size() > 1) throw MarginalPrice("price is marginal");
        if (goods[0] > 0) out[goods[0] - 1] += b.weight;
    }
    return out;
}

Bundle directional_demand(const BidList &bids, const RationalPoint &p, const RationalPoint &dir) {
    Bundle out(bids.n, Int(0));
    for (const auto &b : bids.bids) {
        auto goods = bid_demanded_goods(b, p);
        int chosen = goods[0];
        for (size_t k = 1; k < goods.size(); ++k) {
            const Rat &cur = chosen == 0 ? Rat(0) : dir[chosen - 1];
            const Rat &alt = goods[k] == 0 ? Rat(0) : dir[goods[k] - 1];
            if (alt < cur) chosen = goods[k];
        }
        if (chosen > 0) out[chosen - 1] += b.weight;
    }
    return out;
}

namespace {

// Unique solution of A * lambda = rhs if the columns of A are linearly
// independent and the system is consistent.
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> rhs) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivot_row(cols);
    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) return std::nullopt;  // dependent columns
        std::swap(a[sel], a[r]);
        std::swap(rhs[sel], rhs[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> sol(cols);
    for (size_t c = 0; c < cols; ++c) sol[c] = rhs[pivot_row[c]] / a[pivot_row[c]][c];
    return sol;
}

bool in_convex_hull(const Bundle &z, const std::vector<Bundle> &pts) {
    const size_t n = z.size();
    for (const auto &x : pts)
        if (x == z) return true;
    // Caratheodory: z is in the hull iff some affinely independent subset of
    // at most n+1 points contains it.
    const size_t maxk = std::min(pts.size(), n + 1);
    std::vector<size_t> idx;
    for (size_t k = 2; k <= maxk; ++k) {
        idx.assign(k, 0);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(k));
            std::vector<Rat> rhs(n + 1);
            for (size_t col = 0; col < k; ++col) {
                for (size_t row = 0; row < n; ++row) a[row][col] = Rat(pts[idx[col]][row]);
                a[n][col] = 1;
            }
            for (size_t row = 0; row < n; ++row) rhs[row] = Rat(z[row]);
            rhs[n] = 1;
            if (auto sol = solve_unique(std::move(a), std::move(rhs))) {
                bool ok = true;
                for (const auto &l : *sol)
                    if (l < 0) ok = false;
                if (ok) return true;
            }
            // next k-combination
            size_t i = k;
            while (i > 0 && idx[i - 1] == pts.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace

std::set<Bundle> discrete_convex_hull(const std::set<Bundle> &bundles) {
    if (bundles.size() <= 1) return bundles;
    std::vector<Bundle> pts(bundles.begin(), bundles.end());
    const size_t n = pts[0].size();
    Bundle lo = pts[0], hi = pts[0];
    for (const auto &x : pts)
        for (size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], x[i]);
            hi[i] = std::max(hi[i], x[i]);
        }
    std::set<Bundle> out;
    Bundle z = lo;
    while (true) {
        if (in_convex_hull(z, pts)) out.insert(z);
        size_t i = 0;
        while (i < n && z[i] == hi[i]) {
            z[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++z[i];
    }
    return out;
}

std::set<Bundle> demand_set(const BidList &bids, const RationalPoint &p) {
    if (!is_marginal(bids, p)) return {demand_nonmarginal(bids, p)};
    const int n = bids.n;
    const Rat eps(1, 4LL * n * (n + 1));
    std::set<Bundle> corners;
    std::vector<int> perm(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::iota(perm.begin(), perm.end(), 1);
        do {
            RationalPoint dir(n);
            for (int k = 0; k < n; ++k) {
                int good = perm[k];
                Rat mag = Rat(1, 2) + Rat(k + 1) * eps;
                dir[good - 1] = (mask >> (good - 1)) & 1 ? mag : -mag;
            }
            corners.insert(directional_demand(bids, p, dir));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return discrete_convex_hull(corners);
}

Bundle demand_nonmarginal_scaled(const BidList &bids, const std::vector<long long> &t,
                                 long long s) {
    Bundle out(bids.n, Int(0));
    for (const auto &b : bids.bids) {
        long long best = 0;  // scaled surplus of the reject good
        int arg = 0;
        bool tied = false;
        for (int i = 0; i < bids.n; ++i) {
            long long surplus = b.vector[i] * s - t[i];
            if (surplus > best) {
                best = surplus;
                arg = i + 1;
                tied = false;
            } else if (surplus == best) {
                tied = true;
            }
        }
        if (tied) throw MarginalPrice("scaled price is marginal");
        if (arg > 0) out[arg - 1] += b.weight;
    }
    return out;
}

std::string category_name(QueryCategory c) {
    switch (c) {
        case QueryCategory::Delta: return "delta";
        case QueryCategory::Existence: return "existence";
        case QueryCategory::Super: return "super";
        case QueryCategory::Search: return "search";
        case QueryCategory::Other: return "other";
    }
    return "other";
}

DemandOracle::DemandOracle(Instance instance, std::vector<int> priority)
    : instance_(std::move(instance)) {
    const int n = instance_.bidlist.n;
    if (priority.empty()) {
        priority.resize(n + 1);
        std::iota(priority.begin(), priority.end(), 0);  // reject first
    }
    if (static_cast<int>(priority.size()) != n + 1)
        throw DimensionMismatch("priority must be a permutation of [n]_0");
    priority_ = std::move(priority);
    std::vector<int> rank(n + 1, -1);
    for (size_t k = 0; k < priority_.size(); ++k) {
        if (priority_[k] < 0 || priority_[k] > n || rank[priority_[k]] != -1)
            throw DimensionMismatch("priority must be a permutation of [n]_0");
        rank[priority_[k]] = static_cast<int>(k);
    }
    // Direction with dir[0] = 0 whose componentwise order realizes the
    // priority, so tie-breaking matches demand at p + eps * dir.
    tie_dir_.resize(n);
    for (int i = 1; i <= n; ++i) tie_dir_[i - 1] = Rat(rank[i] - rank[0]);
}

Bundle DemandOracle::query(const RationalPoint &p, QueryCategory category) {
    ledger_.add(category);
    return directional_demand(instance_.bidlist, p, tie_dir_);
}

namespace {

bool demand_empty_at_diagonal(DemandSource &oracle, Coord m) {
    const int n = oracle.goods();
    RationalPoint p(n, Rat(2 * m + 1, 2));
    Bundle x = oracle.query(p, QueryCategory::Search);
    for (const auto &c : x)
        if (c != 0) return false;
    return true;
}

}  // namespace

Coord find_magnitude(DemandSource &oracle, Coord upper) {
    if (demand_empty_at_diagonal(oracle, 0)) return 0;
    Coord lo = 0, hi = -1, cur = 1;
    while (true) {
        Coord c = std::min(cur, upper);
        if (c <= lo)
            throw UpperBoundTooSmall("demand still nonempty at the stated upper bound");
        if (demand_empty_at_diagonal(oracle, c)) {
            hi = c;
            break;
        }
        if (c == upper)
            throw UpperBoundTooSmall("demand still nonempty at the stated upper bound");
        lo = c;
        cur *= 2;
    }
    while (hi - lo > 1) {
        Coord mid = lo + (hi - lo) / 2;
        if (demand_empty_at_diagonal(oracle, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

namespace {

std::optional<Int> best_assignment(const std::vector<const Bid *> &units, size_t u,
                                   std::vector<Int> &remaining, Int left_to_place) {
    if (left_to_place == 0) return Int(0);  // rest of the units are rejected
    if (Int(units.size() - u) < left_to_place) return std::nullopt;
    if (u == units.size()) return std::nullopt;
    std::optional<Int> best = best_assignment(units, u + 1, remaining, left_to_place);
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] == 0) continue;
        --remaining[i];
        auto sub = best_assignment(units, u + 1, remaining, left_to_place - 1);
        ++remaining[i];
        if (sub) {
            Int v = *sub + units[u]->vector[i];
            if (!best || v > *best) best = v;
        }
    }
    return best;
}

}  // namespace

std::optional<Rat> valuation_positive(const BidList &bids, const Bundle &x) {
    std::vector<const Bid *> units;
    for (const auto &b : bids.bids) {
        if (b.weight < 0) throw NegativeWeight("valuation requires a positive bid list");
        for (Weight k = 0; k < b.weight; ++k) units.push_back(&b);
    }
    Int total = 0;
    for (const auto &c : x) {
        if (c < 0) return std::nullopt;
        total += c;
    }
    if (total > Int(units.size())) return std::nullopt;
    std::vector<Int> remaining(x.begin(), x.end());
    auto best = best_assignment(units, 0, remaining, total);
    if (!best) return std::nullopt;
    return Rat(*best);
}

}  // namespace ssbid
