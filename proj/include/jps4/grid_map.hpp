#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jps4/geometry.hpp"

namespace jps4 {

// Occupancy grid. Cells are passable or blocked; every query outside the
// grid reports blocked, so scan loops never need separate bounds checks.
// Immutable once built (the generators and the parser are the builders),
// hence safe to share across concurrent searches.
class GridMap {
public:
    GridMap(int width, int height, bool passable = true)
        : width_(width),
          height_(height),
          cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                 passable) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("GridMap: dimensions must be at least 1x1");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t cell_count() const { return cells_.size(); }

    bool in_bounds(Coord c) const {
        return static_cast<unsigned>(c.x) < static_cast<unsigned>(width_) &&
               static_cast<unsigned>(c.y) < static_cast<unsigned>(height_);
    }

    bool passable(Coord c) const { return in_bounds(c) && cells_[index(c)]; }

    void set_passable(Coord c, bool value) {
        if (!in_bounds(c)) throw std::out_of_range("GridMap::set_passable: out of bounds");
        cells_[index(c)] = value;
    }

    std::size_t index(Coord c) const {
        return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(c.x);
    }

    friend bool operator==(const GridMap&, const GridMap&) = default;

private:
    int width_;
    int height_;
    std::vector<bool> cells_;
};

// All in-bounds traversable cells at unit distance from x, in the fixed
// direction order up, down, left, right. Querying a blocked or
// out-of-bounds cell is a contract violation and is rejected.
inline std::vector<Coord> neighbors(const GridMap& map, Coord x) {
    if (!map.passable(x))
        throw std::invalid_argument("neighbors: query cell is blocked or out of bounds");
    std::vector<Coord> out;
    out.reserve(4);
    for (Direction d : kDirections) {
        const Coord n = step(x, d);
        if (map.passable(n)) out.push_back(n);
    }
    return out;
}

}  // namespace jps4
