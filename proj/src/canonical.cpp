#include "jps4/canonical.hpp"

#include <stdexcept>

namespace jps4 {

std::vector<TurningPoint> turning_points(const Path& path) {
    std::vector<TurningPoint> out;
    if (path.nodes.size() < 3) return out;
    for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i) {
        const Direction in = direction_between(path.nodes[i - 1], path.nodes[i]);
        const Direction outd = direction_between(path.nodes[i], path.nodes[i + 1]);
        if (in == outd) continue;
        if (outd == opposite(in))
            throw std::invalid_argument("turning_points: path reverses onto itself");
        out.push_back({i, is_horizontal(in)
                              ? TurningPoint::Kind::HorizontalToVertical
                              : TurningPoint::Kind::VerticalToHorizontal});
    }
    return out;
}

namespace {

// Index of the first vertical-then-horizontal corner whose shifted node
// (one step horizontally from the corner's predecessor) is traversable,
// or npos.
std::size_t first_swappable_corner(const GridMap& map, const Path& path) {
    for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i) {
        const Coord prev = path.nodes[i - 1];
        const Coord cur = path.nodes[i];
        const Coord next = path.nodes[i + 1];
        const Direction in = direction_between(prev, cur);
        const Direction out = direction_between(cur, next);
        if (!is_vertical(in) || !is_horizontal(out)) continue;
        const Coord shifted = step(prev, out);
        if (map.passable(shifted)) return i;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

bool is_horizontal_first(const GridMap& map, const Path& path) {
    return first_swappable_corner(map, path) == static_cast<std::size_t>(-1);
}

Path to_horizontal_first(const GridMap& map, const Path& path) {
    Path result = path;
    for (;;) {
        const std::size_t i = first_swappable_corner(map, result);
        if (i == static_cast<std::size_t>(-1)) return result;
        const Direction out = direction_between(result.nodes[i], result.nodes[i + 1]);
        result.nodes[i] = step(result.nodes[i - 1], out);
    }
}

}  // namespace jps4
