#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jps4/geometry.hpp"

namespace jps4 {

// One benchmark problem. declared_length is the optimal length published
// with the problem set; it is octile (8-connected) and therefore only
// informational here — the 4-connected optimum is always recomputed.
struct Scenario {
    std::string map_name;
    int width = 0;
    int height = 0;
    Coord start;
    Coord goal;
    double declared_length = 0.0;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Reads the MovingAI .scen layout: an optional `version` line, then one
// problem per line with whitespace-separated fields
//   bucket map-file width height start-x start-y goal-x goal-y length
// Malformed rows and coordinates outside the declared dimensions are
// reported with their line number.
std::vector<Scenario> parse_scen(std::istream& in);
std::vector<Scenario> parse_scen_file(const std::string& path);

void write_scen(std::ostream& out, const std::vector<Scenario>& scenarios);
void write_scen_file(const std::string& path, const std::vector<Scenario>& scenarios);

// Problem set for an empty side x side map: `per_length` start/goal pairs
// at exact Manhattan distance L for every L in 1..max_length. Pairs are
// drawn seed-deterministically; when a length admits fewer distinct pairs
// than requested, the collected pairs repeat. On an empty map the
// Manhattan distance is the true 4-connected optimum, so declared_length
// is exact.
std::vector<Scenario> generate_empty_problems(int side, int per_length, int max_length,
                                              std::uint64_t seed);

}  // namespace jps4
