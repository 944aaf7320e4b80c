#pragma once

#include <string>

#include "ssbid/bids.hpp"

namespace ssbid {

/// Canonical serialization: {"n": ..., "bids": [{"vector": [...],
/// "weight": ...}]}, normalized and sorted, so equal lists are
/// byte-identical on disk.
std::string bidlist_to_json(const BidList &bids);

/// Throws ParseError on malformed documents, zero weights, negative vector
/// entries, or dimension mismatches.
BidList bidlist_from_json(const std::string &text);

BidList read_bidlist(const std::string &path);
void write_bidlist(const std::string &path, const BidList &bids);

/// Comma-separated exact rationals, e.g. "3,5/2". Decimals are rejected.
RationalPoint parse_price(const std::string &text, int n);

std::string bundle_to_string(const Bundle &x);
std::string point_to_string(const RationalPoint &p);

}  // namespace ssbid
