#include "ssbid/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ssbid {

std::string bidlist_to_json(const BidList &bids) {
    BidList canon = normalize(bids);
    nlohmann::ordered_json doc;
    doc["n"] = canon.n;
    doc["bids"] = nlohmann::ordered_json::array();
    for (const auto &b : canon.bids) {
        nlohmann::ordered_json entry;
        entry["vector"] = b.vector;
        entry["weight"] = b.weight;
        doc["bids"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

BidList bidlist_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed bid-list document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("bids") ||
        !doc["n"].is_number_integer() || !doc["bids"].is_array())
        throw ParseError("bid-list document must hold integer 'n' and array 'bids'");
    const int n = doc["n"].get<int>();
    if (n < 1) throw ParseError("good count must be at least 1");
    std::vector<Bid> bids;
    for (const auto &entry : doc["bids"]) {
        if (!entry.is_object() || !entry.contains("vector") || !entry.contains("weight") ||
            !entry["vector"].is_array() || !entry["weight"].is_number_integer())
            throw ParseError("each bid needs an integer array 'vector' and integer 'weight'");
        Bid b;
        b.weight = entry["weight"].get<Weight>();
        if (b.weight == 0) throw ParseError("bid weights must be nonzero");
        for (const auto &c : entry["vector"]) {
            if (!c.is_number_integer()) throw ParseError("bid vectors must be integral");
            Coord v = c.get<Coord>();
            if (v < 0) throw ParseError("bid vector entries must be non-negative");
            b.vector.push_back(v);
        }
        if (static_cast<int>(b.vector.size()) != n)
            throw ParseError("bid vector dimension does not match n");
        bids.push_back(std::move(b));
    }
    return normalize(n, bids);
}

BidList read_bidlist(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open bid-list file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return bidlist_from_json(buf.str());
}

void write_bidlist(const std::string &path, const BidList &bids) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write bid-list file: " + path);
    out << bidlist_to_json(bids);
}

RationalPoint parse_price(const std::string &text, int n) {
    RationalPoint p;
    std::string token;
    std::stringstream stream(text);
    while (std::getline(stream, token, ',')) {
        auto a = token.find_first_not_of(" \t");
        auto b = token.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty price coordinate");
        p.push_back(parse_rational(token.substr(a, b - a + 1)));
    }
    if (static_cast<int>(p.size()) != n)
        throw ParseError("price has " + std::to_string(p.size()) + " coordinates, expected " +
                         std::to_string(n));
    return p;
}

std::string bundle_to_string(const Bundle &x) {
    std::string out;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += x[i].str();
    }
    return out;
}

std::string point_to_string(const RationalPoint &p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += to_string(p[i]);
    }
    return out;
}

}  // namespace ssbid
