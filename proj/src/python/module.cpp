#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssbid/bridge.hpp"
#include "ssbid/demand.hpp"
#include "ssbid/gadgets.hpp"
#include "ssbid/io.hpp"
#include "ssbid/learn_general.hpp"
#include "ssbid/learn_positive.hpp"
#include "ssbid/queries.hpp"
#include "ssbid/validity.hpp"

namespace py = pybind11;

namespace {

using namespace ssbid;

using PyBids = std::vector<std::pair<std::vector<Coord>, Weight>>;

BidList to_bidlist(int n, const PyBids &bids) {
    std::vector<Bid> converted;
    for (const auto &[vec, w] : bids) converted.push_back(Bid{vec, w});
    return normalize(n, converted);
}

PyBids from_bidlist(const BidList &bids) {
    PyBids out;
    for (const auto &b : bids.bids) out.emplace_back(b.vector, b.weight);
    return out;
}

// Prices cross the boundary as strings ("5/2") to keep arithmetic exact.
RationalPoint to_point_strs(const std::vector<std::string> &coords) {
    RationalPoint p;
    for (const auto &c : coords) p.push_back(parse_rational(c));
    return p;
}

std::vector<std::string> bundle_to_py(const Bundle &x) {
    std::vector<std::string> out;
    for (const auto &c : x) out.push_back(c.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_ssbid, m) {
    m.doc() = "Strong-substitutes bid lists: exact demand evaluation and query learning";

    m.def("normalize_bids", [](int n, const PyBids &bids) {
        return from_bidlist(to_bidlist(n, bids));
    });

    m.def("demand", [](int n, const PyBids &bids, const std::vector<std::string> &price) {
        DemandOracle oracle(Instance::from(to_bidlist(n, bids)));
        return bundle_to_py(oracle.query(to_point_strs(price), QueryCategory::Other));
    });

    m.def("delta_query", [](int n, const PyBids &bids, const std::vector<Coord> &q) {
        DemandOracle oracle(Instance::from(to_bidlist(n, bids)));
        return delta_query(oracle, q);
    });

    m.def("existence_query", [](int n, const PyBids &bids, const std::vector<Coord> &p) {
        DemandOracle oracle(Instance::from(to_bidlist(n, bids)));
        return existence_query(oracle, p);
    });

    m.def("find_magnitude", [](int n, const PyBids &bids, Coord upper) {
        DemandOracle oracle(Instance::from(to_bidlist(n, bids)));
        return find_magnitude(oracle, upper);
    });

    m.def("learn_positive", [](int n, const PyBids &bids) {
        DemandOracle oracle(Instance::from(to_bidlist(n, bids)));
        auto learnt = learn_positive_bids(oracle);
        return py::make_tuple(from_bidlist(learnt), oracle.ledger().total);
    });

    m.def("learn_general", [](int n, const PyBids &bids) {
        DemandOracle oracle(Instance::from(to_bidlist(n, bids)));
        auto learnt = learn_general_bids(oracle);
        return py::make_tuple(from_bidlist(learnt), oracle.ledger().total);
    });

    m.def("is_valid", [](int n, const PyBids &bids) -> py::object {
        auto witness = is_valid(to_bidlist(n, bids));
        if (!witness) return py::none();
        py::dict out;
        std::vector<std::string> coords;
        for (const auto &c : witness->p) coords.push_back(to_string(c));
        out["p"] = coords;
        out["i"] = witness->i;
        out["j"] = witness->j;
        out["sum"] = witness->sum;
        return out;
    });

    m.def("island_gadget", [](const std::vector<Coord> &x, int n) {
        return from_bidlist(island_gadget(x, n));
    });

    m.def("boundary_bids", [](int n, Coord M) { return from_bidlist(boundary_bids(n, M)); });

    m.def("adversarial_instance", [](int n, int k, const std::vector<Coord> &cell) {
        return from_bidlist(adversarial_instance(n, k, cell));
    });

    m.def("demand_from_valuation", [](int n, const PyBids &bids,
                                      const std::vector<std::string> &price) {
        ValuationOracle vo = ValuationOracle::from_positive_bids(to_bidlist(n, bids));
        Bundle x = demand_from_valuation(vo, to_point_strs(price));
        return py::make_tuple(bundle_to_py(x), vo.queries());
    });

    m.def("bidlist_to_json", [](int n, const PyBids &bids) {
        return bidlist_to_json(to_bidlist(n, bids));
    });

    m.def("bidlist_from_json", [](const std::string &text) {
        BidList bids = bidlist_from_json(text);
        return py::make_tuple(bids.n, from_bidlist(bids));
    });
}
