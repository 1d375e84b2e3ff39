#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "jps4/geometry.hpp"
#include "jps4/grid_map.hpp"

namespace jps4 {

// Anything that can answer "is this cell traversable" (out of bounds
// counts as blocked). Search engines wrap a GridMap in a probe-counting
// view that satisfies the same concept.
template <class G>
concept GridView = requires(const G& g, Coord c) {
    { g.passable(c) } -> std::convertible_to<bool>;
};

// Where the search came from when it reached `node`. At the start node
// there is no parent and no arrival direction, and nothing is pruned.
// `parent` may be a distant waypoint; pruning only depends on the final
// unit step, i.e. on the effective parent one cell behind `node` along
// `arrival`.
struct MoveContext {
    Coord node;
    std::optional<Coord> parent;
    std::optional<Direction> arrival;

    static MoveContext start(Coord node) { return {node, std::nullopt, std::nullopt}; }

    static MoveContext arriving(Coord node, Coord parent, Direction arrival) {
        return {node, parent, arrival};
    }

    // The cell one unit step behind `node` along the arrival axis.
    std::optional<Coord> effective_parent() const {
        if (!arrival) return std::nullopt;
        return step_back(node, *arrival);
    }
};

// At most 4 cells ever survive pruning; a fixed-capacity list keeps the
// hot path allocation free.
class NeighborList {
public:
    void push_back(Coord c) { items_[size_++] = c; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const Coord* begin() const { return items_.data(); }
    const Coord* end() const { return items_.data() + size_; }
    Coord operator[](std::size_t i) const { return items_[i]; }

    bool contains(Coord c) const {
        for (std::size_t i = 0; i < size_; ++i)
            if (items_[i] == c) return true;
        return false;
    }

private:
    std::array<Coord, 4> items_{};
    std::size_t size_ = 0;
};

// Neighbors that survive the canonical-ordering pruning rules. Horizontal
// arrivals keep everything except the effective parent; vertical arrivals
// keep only the straight-ahead cell; the start node keeps all traversable
// neighbors.
template <GridView G>
NeighborList natural_neighbors(const G& grid, const MoveContext& ctx) {
    NeighborList out;
    if (!ctx.arrival) {
        for (Direction d : kDirections) {
            const Coord n = step(ctx.node, d);
            if (grid.passable(n)) out.push_back(n);
        }
        return out;
    }
    if (is_horizontal(*ctx.arrival)) {
        const Coord behind = step_back(ctx.node, *ctx.arrival);
        for (Direction d : kDirections) {
            const Coord n = step(ctx.node, d);
            if (n != behind && grid.passable(n)) out.push_back(n);
        }
        return out;
    }
    const Coord ahead = step(ctx.node, *ctx.arrival);
    if (grid.passable(ahead)) out.push_back(ahead);
    return out;
}

// A side neighbor is forced exactly when the matching cell beside the
// effective parent is blocked: the two-step detour around `node` is gone,
// so any path to that neighbor avoiding `node` is strictly longer.
// Horizontal arrivals never force anything.
template <GridView G>
NeighborList forced_neighbors(const G& grid, const MoveContext& ctx) {
    if (!ctx.arrival)
        throw std::invalid_argument("forced_neighbors: context has no arrival direction");
    NeighborList out;
    const Direction d = *ctx.arrival;
    if (is_horizontal(d)) return out;
    const Coord behind = step_back(ctx.node, d);
    for (Direction side : {Direction::Left, Direction::Right}) {
        const Coord candidate = step(ctx.node, side);
        if (!grid.passable(step(behind, side)) && grid.passable(candidate))
            out.push_back(candidate);
    }
    return out;
}

template <GridView G>
bool has_forced_neighbor(const G& grid, Coord node, Direction arrival) {
    if (is_horizontal(arrival)) return false;
    const Coord behind = step_back(node, arrival);
    for (Direction side : {Direction::Left, Direction::Right}) {
        if (!grid.passable(step(behind, side)) && grid.passable(step(node, side)))
            return true;
    }
    return false;
}

// Natural plus forced neighbors; the two sets are disjoint by
// construction.
template <GridView G>
NeighborList prune(const G& grid, const MoveContext& ctx) {
    NeighborList out = natural_neighbors(grid, ctx);
    if (!ctx.arrival) return out;
    for (Coord c : forced_neighbors(grid, ctx)) out.push_back(c);
    return out;
}

// Walks the ray origin + kd for k = 1, 2, ... and returns the first cell
// that qualifies as a jump point: any horizontal move, a cell with a
// forced neighbor, or the goal. Returns nothing once the ray hits a
// blocked or out-of-bounds cell. Horizontal rays therefore always stop at
// k = 1.
template <GridView G>
std::optional<Coord> jump(const G& grid, Coord origin, Direction d, Coord goal) {
    Coord cur = origin;
    for (;;) {
        cur = step(cur, d);
        if (!grid.passable(cur)) return std::nullopt;
        if (is_horizontal(d)) return cur;
        if (has_forced_neighbor(grid, cur, d)) return cur;
        if (cur == goal) return cur;
    }
}

// Jump-point successors of an expanded node: one jump per pruned
// neighbor, with the ray starting at the node itself so the pruned
// neighbor is the first cell tested.
template <GridView G>
NeighborList identify_successors(const G& grid, const MoveContext& ctx, Coord goal) {
    NeighborList out;
    for (Coord n : prune(grid, ctx)) {
        const Direction d = direction_between(ctx.node, n);
        if (const auto jp = jump(grid, ctx.node, d, goal)) out.push_back(*jp);
    }
    return out;
}

}  // namespace jps4
