#pragma once

#include <cstdint>

#include "jps4/grid_map.hpp"

namespace jps4 {

// Fully traversable grid.
GridMap generate_empty(int width, int height);

// Lattice of square rooms with `room_size` traversable cells per side,
// separated by 1-cell walls, with walls on the outer border. Every wall
// shared by two adjacent rooms gets exactly one traversable door cell at
// a seed-deterministic position, so the map is a single connected
// component. Cells beyond the last full room column/row are padded as
// walls. Throws if even one room does not fit.
GridMap generate_rooms(int width, int height, int room_size, std::uint64_t seed);

}  // namespace jps4
