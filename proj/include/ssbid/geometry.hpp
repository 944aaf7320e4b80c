#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ssbid/bids.hpp"

namespace ssbid {

/// A hyperplane with a strong-substitutes normal: p_i = c (axis) or
/// p_i - p_j = c with i < j (difference), offset c integral. Goods are
/// 1-based; j == 0 marks an axis hyperplane.
struct Hyperplane {
    int i = 0;
    int j = 0;  // 0 for axis kind
    Coord c = 0;

    bool axis() const { return j == 0; }
    friend auto operator<=>(const Hyperplane &, const Hyperplane &) = default;

    static Hyperplane make_axis(int i, Coord c) { return Hyperplane{i, 0, c}; }
    static Hyperplane make_diff(int i, int j, Coord c) {
        if (i > j) {
            std::swap(i, j);
            c = -c;
        }
        return Hyperplane{i, j, c};
    }
};

/// Signed side of p relative to h: -1, 0 or +1.
inline int side(const Hyperplane &h, const RationalPoint &p) {
    Rat v = h.axis() ? p[h.i - 1] - Rat(h.c) : p[h.i - 1] - p[h.j - 1] - Rat(h.c);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

std::string describe(const Hyperplane &h);

/// Unique integral solution of n hyperplane constraints, or nullopt when the
/// normals are dependent or the system is inconsistent. The constraints form
/// a unimodular difference system, solved by propagation over the constraint
/// graph anchored at axis constraints.
std::optional<std::vector<Coord>> solve_intersection(int n, const std::vector<Hyperplane> &hs);

}  // namespace ssbid
