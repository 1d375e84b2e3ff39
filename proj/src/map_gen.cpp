#include "jps4/map_gen.hpp"

#include <random>
#include <stdexcept>

namespace jps4 {
namespace {

// Deterministic across standard libraries, unlike uniform_int_distribution.
int bounded(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

}  // namespace

GridMap generate_empty(int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("generate_empty: dimensions must be at least 1x1");
    return GridMap(width, height, true);
}

GridMap generate_rooms(int width, int height, int room_size, std::uint64_t seed) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("generate_rooms: dimensions must be at least 1x1");
    if (room_size != 8 && room_size != 16 && room_size != 32 && room_size != 64)
        throw std::invalid_argument("generate_rooms: room_size must be 8, 16, 32 or 64");

    const int period = room_size + 1;  // one room plus its leading wall
    const int cols = (width - 1) / period;
    const int rows = (height - 1) / period;
    if (cols < 1 || rows < 1)
        throw std::invalid_argument("generate_rooms: room_size larger than the grid");

    GridMap map(width, height, false);

    // Carve room interiors; everything else (wall lattice plus far-edge
    // padding) stays blocked.
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            for (int y = r * period + 1; y <= r * period + room_size; ++y)
                for (int x = c * period + 1; x <= c * period + room_size; ++x)
                    map.set_passable({x, y}, true);
        }
    }

    // One door per shared wall, in a fixed room order so a seed fully
    // determines the map.
    std::mt19937_64 rng(seed);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {  // wall shared with the room to the right
                const int wall_x = (c + 1) * period;
                const int door_y = r * period + 1 + bounded(rng, room_size);
                map.set_passable({wall_x, door_y}, true);
            }
            if (r + 1 < rows) {  // wall shared with the room below
                const int wall_y = (r + 1) * period;
                const int door_x = c * period + 1 + bounded(rng, room_size);
                map.set_passable({door_x, wall_y}, true);
            }
        }
    }
    return map;
}

}  // namespace jps4
