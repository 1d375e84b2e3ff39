#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace jps4 {

// Grid coordinate. x grows rightward, y grows downward (row 0 of a map
// file is y = 0).
struct Coord {
    int x = 0;
    int y = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Coord& c) {
    return os << '(' << c.x << ',' << c.y << ')';
}

// The four cardinal moves. All edges cost 1; there are no diagonals.
enum class Direction : std::uint8_t { Up, Down, Left, Right };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::Up, Direction::Down, Direction::Left, Direction::Right};

constexpr int dx(Direction d) {
    switch (d) {
        case Direction::Left: return -1;
        case Direction::Right: return 1;
        default: return 0;
    }
}

constexpr int dy(Direction d) {
    switch (d) {
        case Direction::Up: return -1;
        case Direction::Down: return 1;
        default: return 0;
    }
}

constexpr bool is_horizontal(Direction d) {
    return d == Direction::Left || d == Direction::Right;
}

constexpr bool is_vertical(Direction d) { return !is_horizontal(d); }

constexpr Direction opposite(Direction d) {
    switch (d) {
        case Direction::Up: return Direction::Down;
        case Direction::Down: return Direction::Up;
        case Direction::Left: return Direction::Right;
        case Direction::Right: return Direction::Left;
    }
    return Direction::Up;  // unreachable
}

constexpr Coord step(Coord c, Direction d) { return {c.x + dx(d), c.y + dy(d)}; }

constexpr Coord step_back(Coord c, Direction d) { return step(c, opposite(d)); }

constexpr const char* to_string(Direction d) {
    switch (d) {
        case Direction::Up: return "up";
        case Direction::Down: return "down";
        case Direction::Left: return "left";
        case Direction::Right: return "right";
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, Direction d) {
    return os << to_string(d);
}

// Direction of the unit move from one cell to a 4-adjacent cell. Rejects
// identical, diagonal, and non-adjacent pairs.
inline Direction direction_between(Coord from, Coord to) {
    const int ddx = to.x - from.x;
    const int ddy = to.y - from.y;
    if (ddx == 0 && ddy == -1) return Direction::Up;
    if (ddx == 0 && ddy == 1) return Direction::Down;
    if (ddx == -1 && ddy == 0) return Direction::Left;
    if (ddx == 1 && ddy == 0) return Direction::Right;
    throw std::invalid_argument("direction_between: cells are not 4-adjacent");
}

inline bool are_adjacent(Coord a, Coord b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

inline int manhattan(Coord a, Coord b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

}  // namespace jps4

template <>
struct std::hash<jps4::Coord> {
    std::size_t operator()(const jps4::Coord& c) const noexcept {
        return (static_cast<std::size_t>(static_cast<std::uint32_t>(c.y)) << 32) |
               static_cast<std::uint32_t>(c.x);
    }
};
