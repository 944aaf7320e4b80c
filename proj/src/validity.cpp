#include "ssbid/validity.hpp"

#include "ssbid/demand.hpp"

namespace ssbid {

std::pair<BidList, Weight> indifference_support(const BidList &bids, const RationalPoint &p,
                                                int i, int j) {
    BidList support;
    support.n = bids.n;
    Weight sum = 0;
    for (const auto &b : bids.bids) {
        auto goods = bid_demanded_goods(b, p);
        bool has_i = false, has_j = false;
        for (int g : goods) {
            has_i |= g == i;
            has_j |= g == j;
        }
        if (has_i && has_j) {
            support.bids.push_back(b);
            sum += b.weight;
        }
    }
    return {support, sum};
}

namespace {

// Argmax of b_k - t_k/s over [n]_0 as a bitmask (bit g = good g demanded).
std::uint32_t demanded_mask_scaled(const Bid &b, const std::vector<long long> &t, long long s) {
    long long best = 0;
    std::uint32_t mask = 1;  // reject good
    for (size_t k = 0; k < t.size(); ++k) {
        long long surplus = b.vector[k] * s - t[k];
        if (surplus > best) {
            best = surplus;
            mask = 1u << (k + 1);
        } else if (surplus == best) {
            mask |= 1u << (k + 1);
        }
    }
    return mask;
}

}  // namespace

std::optional<ViolationWitness> is_valid(const BidList &bids) {
    const int n = bids.n;
    const long long s = n + 1;
    Coord M = 0;
    for (const auto &b : bids.bids)
        for (Coord c : b.vector) M = std::max(M, c);

    std::vector<long long> t(n, -s);
    const long long hi = (M + 1) * s;
    std::vector<std::pair<std::uint32_t, Weight>> marginal;
    while (true) {
        marginal.clear();
        for (const auto &b : bids.bids) {
            std::uint32_t mask = demanded_mask_scaled(b, t, s);
            if (mask & (mask - 1)) marginal.emplace_back(mask, b.weight);
        }
        if (!marginal.empty()) {
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    std::uint32_t need = (1u << i) | (1u << j);
                    Weight sum = 0;
                    for (auto [mask, w] : marginal)
                        if ((mask & need) == need) sum += w;
                    if (sum < 0) {
                        RationalPoint p(n);
                        for (int k = 0; k < n; ++k) p[k] = Rat(t[k], s);
                        return ViolationWitness{p, i, j, sum};
                    }
                }
        }
        int k = n - 1;
        while (k >= 0 && t[k] == hi) {
            t[k] = -s;
            --k;
        }
        if (k < 0) break;
        ++t[k];
    }
    return std::nullopt;
}

std::set<Hyperplane> candidate_hyperplanes(const BidList &bids) {
    std::set<Hyperplane> out;
    for (const auto &b : bids.bids) {
        for (int i = 1; i <= bids.n; ++i) {
            out.insert(Hyperplane::make_axis(i, b.vector[i - 1]));
            for (int j = i + 1; j <= bids.n; ++j)
                out.insert(Hyperplane::make_diff(i, j, b.vector[i - 1] - b.vector[j - 1]));
        }
    }
    return out;
}

}  // namespace ssbid
