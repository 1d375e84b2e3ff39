#pragma once

#include <cstddef>
#include <vector>

#include "jps4/geometry.hpp"
#include "jps4/grid_map.hpp"
#include "jps4/path.hpp"

namespace jps4 {

// An interior path node where the move direction changes. On a
// 4-connected cycle-free path every change is horizontal <-> vertical.
struct TurningPoint {
    std::size_t index;  // position of the node within the path, 0 < index < length
    enum class Kind { HorizontalToVertical, VerticalToHorizontal } kind;

    friend bool operator==(const TurningPoint&, const TurningPoint&) = default;
};

// All turning points of a path, in order. Paths with fewer than 3 nodes
// have none. A reversal (the move direction flipping to its opposite)
// would revisit a cell and is rejected as an invalid path.
std::vector<TurningPoint> turning_points(const Path& path);

// True iff no vertical-then-horizontal corner of the path can be swapped
// into a horizontal-then-vertical corner through a traversable cell. Such
// a swap always preserves endpoints and length, so availability reduces
// to the shifted corner cell being traversable.
bool is_horizontal_first(const GridMap& map, const Path& path);

// Applies the corner swap wherever available, scanning left to right and
// restarting after each rewrite, until no swap applies. Every swap moves
// a horizontal move one position earlier in the move sequence, so the
// rewrite terminates. Endpoints and length are preserved and the result
// satisfies is_horizontal_first.
Path to_horizontal_first(const GridMap& map, const Path& path);

}  // namespace jps4
