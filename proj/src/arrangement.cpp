#include "ssbid/arrangement.hpp"

#include <algorithm>

#include "ssbid/errors.hpp"

namespace ssbid {

Arrangement::Arrangement(int n, Coord box_hi) : n_(n), box_hi_(box_hi) {
    for (int i = 1; i <= n; ++i) add_hyperplane(Hyperplane::make_axis(i, 0));
    if (box_hi > 0)
        for (int i = 1; i <= n; ++i) add_hyperplane(Hyperplane::make_axis(i, box_hi));
}

bool Arrangement::contains(const Hyperplane &h) const {
    return std::find(hyperplanes_.begin(), hyperplanes_.end(), h) != hyperplanes_.end();
}

std::vector<std::vector<Coord>> Arrangement::add_hyperplane(const Hyperplane &h) {
    if (contains(h)) throw DuplicateHyperplane("hyperplane already in arrangement: " + describe(h));
    std::vector<std::vector<Coord>> fresh;
    const size_t m = hyperplanes_.size();
    const size_t k = static_cast<size_t>(n_) - 1;
    std::vector<size_t> idx(k);
    bool any = k == 0 || k <= m;
    if (any) {
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<Hyperplane> sys{h};
            for (size_t i : idx) sys.push_back(hyperplanes_[i]);
            if (auto v = solve_intersection(n_, sys)) {
                bool inside = true;
                for (Coord c : *v)
                    if (c < 0 || c > box_hi_) inside = false;
                if (inside && vertices_.insert(*v).second) fresh.push_back(*v);
            }
            if (k == 0) break;
            size_t i = k;
            while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    hyperplanes_.push_back(h);
    for (auto &pt : points_) {
        int s = side(h, pt.price);
        if (s == 0) throw OnHyperplane("query point lies on a new hyperplane");
        pt.signature.push_back(static_cast<std::int8_t>(s));
    }
    return fresh;
}

std::vector<std::int8_t> Arrangement::signature(const RationalPoint &p) const {
    std::vector<std::int8_t> sig;
    sig.reserve(hyperplanes_.size());
    for (const auto &h : hyperplanes_) {
        int s = side(h, p);
        if (s == 0) throw OnHyperplane("point lies on hyperplane " + describe(h));
        sig.push_back(static_cast<std::int8_t>(s));
    }
    return sig;
}

void Arrangement::attach_record(SuperQueryRecord rec) {
    for (size_t c = 0; c < rec.cells.size(); ++c)
        points_.push_back(StoredPoint{rec.cells[c].point, rec.bundles[c],
                                      signature(rec.cells[c].point)});
    records_[rec.center] = std::move(rec);
}

std::optional<std::pair<StoredPoint, StoredPoint>> Arrangement::find_witnesses() const {
    std::map<std::vector<std::int8_t>, size_t> first_in_cell;
    for (size_t i = 0; i < points_.size(); ++i) {
        auto [it, inserted] = first_in_cell.try_emplace(points_[i].signature, i);
        if (!inserted && points_[it->second].bundle != points_[i].bundle)
            return std::make_pair(points_[it->second], points_[i]);
    }
    return std::nullopt;
}

}  // namespace ssbid
