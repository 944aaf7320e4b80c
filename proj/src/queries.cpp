#include "ssbid/queries.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ssbid {

std::pair<RationalPoint, RationalPoint> generalized_delta_points(const std::vector<Coord> &q,
                                                                 std::uint32_t s_mask) {
    const int n = static_cast<int>(q.size());
    RationalPoint base(n);
    base[0] = Rat(q[0]);
    for (int i = 2; i <= n; ++i) {
        Rat off(1, 2LL * (n - i + 1));
        base[i - 1] = (s_mask >> (i - 2)) & 1 ? Rat(q[i - 1]) - off : Rat(q[i - 1]) + off;
    }
    Rat split(1, 2LL * n);
    RationalPoint minus = base, plus = base;
    minus[0] -= split;
    plus[0] += split;
    return {minus, plus};
}

std::pair<RationalPoint, RationalPoint> delta_points(const std::vector<Coord> &q) {
    return generalized_delta_points(q, 0);
}

Weight generalized_delta_query(DemandSource &oracle, const std::vector<Coord> &q,
                               std::uint32_t s_mask) {
    auto [minus, plus] = generalized_delta_points(q, s_mask);
    Bundle xm = oracle.query(minus, QueryCategory::Delta);
    Bundle xp = oracle.query(plus, QueryCategory::Delta);
    return (xm[0] - xp[0]).convert_to<Weight>();
}

Weight delta_query(DemandSource &oracle, const std::vector<Coord> &q) {
    return generalized_delta_query(oracle, q, 0);
}

namespace {

int popcount(std::uint32_t x) {
    int c = 0;
    for (; x; x >>= 1) c += x & 1;
    return c;
}

Weight combine_existence(const std::vector<Weight> &delta_by_mask, int n) {
    // w(B') - w(B'') with w(B'') by inclusion-exclusion over nonempty S.
    Weight w = delta_by_mask[0];
    for (std::uint32_t s = 1; s < (1u << (n - 1 > 0 ? n - 1 : 0)); ++s) {
        Weight term = delta_by_mask[s];
        w -= popcount(s) % 2 == 1 ? term : -term;
    }
    return w;
}

}  // namespace

Weight existence_query(DemandSource &oracle, const std::vector<Coord> &p) {
    const int n = static_cast<int>(p.size());
    const std::uint32_t subsets = n >= 2 ? 1u << (n - 1) : 1u;
    std::vector<Weight> delta_by_mask(subsets);
    for (std::uint32_t s = 0; s < subsets; ++s)
        delta_by_mask[s] = generalized_delta_query(oracle, p, s);
    // A delta query for n = 1 already isolates the bid at p.
    if (n == 1) {
        // pay the full 2^n = 2 queries contract: a single delta query did.
        return delta_by_mask[0];
    }
    return combine_existence(delta_by_mask, n);
}

std::vector<SuperCell> super_query_points(const std::vector<Coord> &p) {
    const int n = static_cast<int>(p.size());
    const Rat eps(1, 4LL * n * (n + 1));
    std::vector<SuperCell> cells;
    std::vector<int> perm(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::iota(perm.begin(), perm.end(), 1);
        do {
            SuperCell cell;
            cell.orthant = mask;
            cell.perm = perm;
            cell.point.resize(n);
            // Cells are ordered by the Freudenthal coordinates t_i measured
            // from the lower corner of the orthant cube (t_i = x_i on the
            // positive side, x_i + 1 on the negative side). Facet crossings
            // inside the cube are exactly the surfaces t_i = t_j, so demand
            // is constant on every cell interior.
            for (int k = 0; k < n; ++k) {
                int good = perm[k];
                Rat t = Rat(1, 2) + Rat(k + 1) * eps;
                Rat off = (mask >> (good - 1)) & 1 ? t : t - 1;
                cell.point[good - 1] = Rat(p[good - 1]) + off;
            }
            cells.push_back(std::move(cell));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return cells;
}

SuperQueryRecord super_query(DemandSource &oracle, const std::vector<Coord> &p) {
    SuperQueryRecord rec;
    rec.n = static_cast<int>(p.size());
    rec.center = p;
    rec.cells = super_query_points(p);
    rec.bundles.reserve(rec.cells.size());
    for (const auto &cell : rec.cells)
        rec.bundles.push_back(oracle.query(cell.point, QueryCategory::Super));
    return rec;
}

namespace {

// Signed offsets from the record's center, one per good.
RationalPoint offsets_from_center(const SuperQueryRecord &rec, const RationalPoint &p) {
    RationalPoint x(rec.n);
    for (int i = 0; i < rec.n; ++i) {
        x[i] = p[i] - Rat(rec.center[i]);
        Rat mag = x[i] < 0 ? -x[i] : x[i];
        if (mag >= 1) throw OutOfRange("price is not within the record's unit ball");
    }
    return x;
}

bool closure_contains(const SuperCell &cell, const RationalPoint &x) {
    const int n = static_cast<int>(x.size());
    RationalPoint t(n);
    for (int i = 0; i < n; ++i) {
        if ((cell.orthant >> i) & 1) {
            if (x[i] < 0) return false;
            t[i] = x[i];
        } else {
            if (x[i] > 0) return false;
            t[i] = x[i] + 1;
        }
    }
    for (int k = 0; k + 1 < n; ++k)
        if (t[cell.perm[k] - 1] > t[cell.perm[k + 1] - 1]) return false;
    return true;
}

}  // namespace

std::set<Bundle> local_demand(const SuperQueryRecord &rec, const RationalPoint &p) {
    RationalPoint x = offsets_from_center(rec, p);
    std::set<Bundle> touched;
    for (size_t c = 0; c < rec.cells.size(); ++c)
        if (closure_contains(rec.cells[c], x)) touched.insert(rec.bundles[c]);
    return discrete_convex_hull(touched);
}

namespace {

using CellKey = std::pair<std::uint32_t, std::vector<int>>;

std::map<CellKey, size_t> cell_index(const SuperQueryRecord &rec) {
    std::map<CellKey, size_t> idx;
    for (size_t c = 0; c < rec.cells.size(); ++c)
        idx[{rec.cells[c].orthant, rec.cells[c].perm}] = c;
    return idx;
}

}  // namespace

std::set<Hyperplane> local_facets(const SuperQueryRecord &rec) {
    const int n = rec.n;
    auto idx = cell_index(rec);
    std::set<Hyperplane> facets;
    for (size_t c = 0; c < rec.cells.size(); ++c) {
        const SuperCell &cell = rec.cells[c];
        // Axis facet p_i = center_i: the positive-side cell touches x_i = 0
        // at t_i = 0 (rank 1), the negative-side cell at t_i = 1 (rank n).
        // The two cells share an (n-1)-face inside the hyperplane, so a
        // bundle difference certifies a facet in it.
        int first = cell.perm[0];
        if ((cell.orthant >> (first - 1)) & 1) {
            std::vector<int> rotated(cell.perm.begin() + 1, cell.perm.end());
            rotated.push_back(first);
            size_t partner = idx.at({cell.orthant ^ (1u << (first - 1)), rotated});
            if (rec.bundles[c] != rec.bundles[partner])
                facets.insert(Hyperplane::make_axis(first, rec.center[first - 1]));
        }
        // Difference facets p_i - p_j = center_i - center_j: swap two
        // rank-adjacent coordinates with equal sign (t_i = t_j crossings in
        // mixed-sign orthants belong to offset +-1 facets, which do not pass
        // through the center).
        for (int k = 0; k + 1 < n; ++k) {
            int i = cell.perm[k], j = cell.perm[k + 1];
            bool ai = (cell.orthant >> (i - 1)) & 1, aj = (cell.orthant >> (j - 1)) & 1;
            if (ai != aj) continue;
            std::vector<int> swapped = cell.perm;
            std::swap(swapped[k], swapped[k + 1]);
            size_t other = idx.at({cell.orthant, swapped});
            if (rec.bundles[c] != rec.bundles[other])
                facets.insert(Hyperplane::make_diff(i, j, rec.center[i - 1] - rec.center[j - 1]));
        }
    }
    return facets;
}

Weight existence_from_record(const SuperQueryRecord &rec) {
    const int n = rec.n;
    const std::uint32_t subsets = n >= 2 ? 1u << (n - 1) : 1u;
    std::vector<Weight> delta_by_mask(subsets);
    for (std::uint32_t s = 0; s < subsets; ++s) {
        auto [minus, plus] = generalized_delta_points(rec.center, s);
        auto dm = local_demand(rec, minus);
        auto dp = local_demand(rec, plus);
        // The generalized delta points are non-marginal, so both sets are
        // singletons.
        delta_by_mask[s] = (dm.begin()->at(0) - dp.begin()->at(0)).convert_to<Weight>();
    }
    if (n == 1) return delta_by_mask[0];
    return combine_existence(delta_by_mask, n);
}

}  // namespace ssbid
