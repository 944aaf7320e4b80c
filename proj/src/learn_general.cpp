#include "ssbid/learn_general.hpp"

#include <random>

namespace ssbid {

namespace {

Rat linf_distance(const RationalPoint &a, const RationalPoint &b) {
    Rat best = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        Rat d = a[i] - b[i];
        if (d < 0) d = -d;
        if (d > best) best = d;
    }
    return best;
}

RationalPoint midpoint(const RationalPoint &a, const RationalPoint &b) {
    RationalPoint m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = (a[i] + b[i]) / 2;
    return m;
}

}  // namespace

RefinedWitnesses binary_search_refine(DemandSource &oracle, const RationalPoint &q,
                                      const RationalPoint &q_prime) {
    RefinedWitnesses w{q, q_prime, oracle.query(q, QueryCategory::Search),
                       oracle.query(q_prime, QueryCategory::Search)};
    const Rat quarter(1, 4);
    while (linf_distance(w.s, w.s_prime) >= quarter) {
        RationalPoint mid = midpoint(w.s, w.s_prime);
        Bundle bm = oracle.query(mid, QueryCategory::Search);
        if (bm != w.b) {
            w.s_prime = mid;
            w.b_prime = bm;
        } else {
            w.s = mid;
            w.b = bm;
        }
    }
    return w;
}

namespace {

Rat coord_or_zero(const RationalPoint &p, int i) { return i == 0 ? Rat(0) : p[i - 1]; }

}  // namespace

std::optional<RationalPoint> intersection_lambda(const RationalPoint &s,
                                                 const RationalPoint &s_prime, int i, int j) {
    Rat a = coord_or_zero(s, i) - coord_or_zero(s, j);
    Rat b = coord_or_zero(s_prime, i) - coord_or_zero(s_prime, j);
    if (a == b) return is_integral(a) ? std::optional<RationalPoint>(s) : std::nullopt;
    Rat lo = a < b ? a : b, hi = a < b ? b : a;
    Rat c(rat_ceil(lo));
    if (c > hi) return std::nullopt;
    Rat lambda = (c - b) / (a - b);  // p = lambda*s + (1-lambda)*s'
    RationalPoint p(s.size());
    for (size_t t = 0; t < s.size(); ++t) p[t] = lambda * s[t] + (1 - lambda) * s_prime[t];
    return p;
}

namespace {

bool known_contains(const std::vector<Hyperplane> &known, const Hyperplane &h) {
    for (const auto &k : known)
        if (k == h) return true;
    return false;
}

const SuperQueryRecord &record_at(DemandSource &oracle, const std::vector<Coord> &center,
                                  RecordCache *cache, RecordCache &local) {
    RecordCache &store = cache ? *cache : local;
    auto it = store.find(center);
    if (it == store.end()) it = store.emplace(center, super_query(oracle, center)).first;
    return it->second;
}

}  // namespace

Hyperplane find_separating_hyperplane(DemandSource &oracle, const RationalPoint &q,
                                      const RationalPoint &q_prime,
                                      const std::vector<Hyperplane> &known, RecordCache *cache) {
    const int n = oracle.goods();
    RefinedWitnesses w = binary_search_refine(oracle, q, q_prime);
    RecordCache local;

    std::vector<std::pair<int, int>> candidates;
    for (int i = 1; i <= n; ++i) candidates.emplace_back(i, 0);  // axis normals first
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) candidates.emplace_back(i, j);

    for (auto [i, j] : candidates) {
        auto p = intersection_lambda(w.s, w.s_prime, i, j);
        if (!p) continue;
        Rat offset = coord_or_zero(*p, i) - coord_or_zero(*p, j);
        Coord c = rat_floor(offset).convert_to<Coord>();  // integral by construction
        Hyperplane through = j == 0 ? Hyperplane::make_axis(i, c) : Hyperplane::make_diff(i, j, c);
        // The facet actually separating the witness cells is never in
        // `known`, so skipping saves its super query without risk.
        if (known_contains(known, through)) continue;
        std::vector<Coord> center(n);
        for (int t = 0; t < n; ++t) center[t] = rat_ceil((*p)[t]).convert_to<Coord>();
        const SuperQueryRecord &rec = record_at(oracle, center, cache, local);
        for (const Hyperplane &h : local_facets(rec)) {
            if (known_contains(known, h)) continue;
            int sa = side(h, w.s), sb = side(h, w.s_prime);
            if (sa * sb <= 0 && !(sa == 0 && sb == 0)) return h;
        }
    }
    throw NoFacetFound("no facet hyperplane separates the witnesses");
}

BidList learn_general_bids(DemandSource &oracle, const LearnLimits &limits, LearnStats *stats) {
    const int n = oracle.goods();
    Coord M = find_magnitude(oracle, limits.magnitude_upper);
    Arrangement arr(n, M);
    RecordCache cache;

    auto attach = [&](const std::vector<Coord> &v) {
        if (arr.records().count(v)) return;
        arr.attach_record(record_at(oracle, v, &cache, cache));
    };
    for (const auto &v : arr.vertices()) attach(v);

    while (auto witnesses = arr.find_witnesses()) {
        Hyperplane h = find_separating_hyperplane(oracle, witnesses->first.price,
                                                  witnesses->second.price, arr.hyperplanes(),
                                                  &cache);
        auto fresh = arr.add_hyperplane(h);
        if (arr.hyperplanes().size() > limits.max_hyperplanes)
            throw LimitExceeded("hyperplane limit exceeded");
        if (arr.vertices().size() > limits.max_vertices)
            throw LimitExceeded("vertex limit exceeded");
        for (const auto &v : fresh) attach(v);
    }

    if (stats) {
        stats->hyperplanes = arr.hyperplanes().size();
        stats->vertices = arr.vertices().size();
        stats->magnitude = M;
    }

    std::vector<Bid> found;
    for (const auto &[v, rec] : arr.records()) {
        if (!arr.vertices().count(v)) continue;
        Weight weight = existence_from_record(rec);
        if (weight != 0) found.push_back(Bid{v, weight});
    }
    return normalize(n, found);
}

bool verify_learned(DemandSource &oracle, const BidList &learnt, int trials,
                    std::uint64_t seed) {
    const int n = oracle.goods();
    Coord M = 1;
    for (const auto &b : learnt.bids)
        for (Coord c : b.vector) M = std::max(M, c);
    const long long D = 2310;  // non-integrality is checked mod D
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-D, (M + 1) * D);
    for (int t = 0; t < trials; ++t) {
        std::vector<long long> num(n);
        bool ok = false;
        while (!ok) {
            ok = true;
            for (auto &a : num) a = dist(rng);
            // reject points on any integral-offset hyperplane
            for (int i = 0; i < n && ok; ++i) {
                if (num[i] % D == 0) ok = false;
                for (int j = i + 1; j < n && ok; ++j)
                    if ((num[i] - num[j]) % D == 0) ok = false;
            }
        }
        RationalPoint p(n);
        for (int i = 0; i < n; ++i) p[i] = Rat(num[i], D);
        if (oracle.query(p, QueryCategory::Other) != demand_nonmarginal(learnt, p)) return false;
    }
    return true;
}

}  // namespace ssbid
