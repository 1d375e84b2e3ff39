#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "jps4/geometry.hpp"
#include "jps4/grid_map.hpp"

namespace jps4 {

// An ordered node sequence. A well-formed path on a map steps between
// 4-adjacent traversable cells and never revisits a cell; its length is
// the number of unit moves (a single-node path has length 0).
struct Path {
    std::vector<Coord> nodes;

    std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }

    friend bool operator==(const Path&, const Path&) = default;
};

inline bool is_valid_path(const GridMap& map, const Path& path) {
    if (path.nodes.empty()) return false;
    std::unordered_set<Coord> seen;
    seen.reserve(path.nodes.size());
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        const Coord c = path.nodes[i];
        if (!map.passable(c)) return false;
        if (!seen.insert(c).second) return false;
        if (i > 0 && !are_adjacent(path.nodes[i - 1], c)) return false;
    }
    return true;
}

}  // namespace jps4
