#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ssbid/geometry.hpp"
#include "ssbid/queries.hpp"

namespace ssbid {

/// A queried price together with its recorded bundle and its strict sign
/// vector relative to the arrangement's hyperplanes (extended lazily as
/// hyperplanes arrive).
struct StoredPoint {
    RationalPoint price;
    Bundle bundle;
    std::vector<std::int8_t> signature;
};

/// Bookkeeping for the hyperplane-learning loop: hyperplanes with
/// strong-substitutes normals, their in-box intersection vertices, the
/// super-query record at each vertex, and cell signatures of all query
/// points.
class Arrangement {
  public:
    Arrangement(int n, Coord box_hi);

    int goods() const { return n_; }
    Coord box_hi() const { return box_hi_; }
    const std::vector<Hyperplane> &hyperplanes() const { return hyperplanes_; }
    const std::set<std::vector<Coord>> &vertices() const { return vertices_; }
    const std::map<std::vector<Coord>, SuperQueryRecord> &records() const { return records_; }
    const std::vector<StoredPoint> &points() const { return points_; }

    bool contains(const Hyperplane &h) const;

    /// Adds h, returning the new in-box integral vertices it creates.
    /// Throws DuplicateHyperplane if h is already present.
    std::vector<std::vector<Coord>> add_hyperplane(const Hyperplane &h);

    /// Strict per-hyperplane side vector. Throws OnHyperplane if p lies on
    /// any hyperplane of the arrangement.
    std::vector<std::int8_t> signature(const RationalPoint &p) const;

    /// Registers a vertex's super-query record; its representative points
    /// join the witness pool.
    void attach_record(SuperQueryRecord rec);

    /// A pair of stored points with equal signatures but different bundles,
    /// or nullopt once every cell is demand-constant.
    std::optional<std::pair<StoredPoint, StoredPoint>> find_witnesses() const;

  private:
    int n_;
    Coord box_hi_;
    std::vector<Hyperplane> hyperplanes_;
    std::set<std::vector<Coord>> vertices_;
    std::map<std::vector<Coord>, SuperQueryRecord> records_;
    std::vector<StoredPoint> points_;
};

}  // namespace ssbid
