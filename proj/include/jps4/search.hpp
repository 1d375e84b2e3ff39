#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "jps4/geometry.hpp"
#include "jps4/grid_map.hpp"
#include "jps4/path.hpp"

namespace jps4 {

struct SearchProblem {
    const GridMap* map = nullptr;
    Coord start;
    Coord goal;
};

// Instrumentation gathered by every engine under one shared convention:
//   open_pushes  heap insertions, the initial push of the start included
//   open_pops    heap removals, stale (superseded) entries included
//   expanded     non-stale pops, i.e. nodes actually settled; the final
//                pop of the goal counts
//   max_open     peak number of entries held by the open list
//   visited      distinct in-bounds cells whose traversability was probed,
//                cells scanned inside jump rays included
struct SearchMetrics {
    std::uint64_t expanded = 0;
    std::uint64_t open_pushes = 0;
    std::uint64_t open_pops = 0;
    std::uint64_t max_open = 0;
    std::uint64_t visited = 0;
    std::chrono::nanoseconds wall_time{0};
};

// `path` is empty when the goal is unreachable; that is a normal outcome,
// not an error. Malformed input (blocked or out-of-bounds endpoints) is
// rejected with std::invalid_argument before any search work happens.
struct SearchResult {
    std::optional<Path> path;
    SearchMetrics metrics;

    bool found() const { return path.has_value(); }
};

// Expansion log for post-hoc checks: which nodes were settled, and along
// which arrival direction (empty for the start node).
struct SearchTrace {
    std::vector<std::pair<Coord, std::optional<Direction>>> expanded;
};

// A* with the Manhattan heuristic. Open list ordered by f = g + h; ties
// broken toward larger g, remaining ties by a fixed-seed pseudorandom
// draw taken at push time (then insertion order), so runs are exactly
// repeatable. Duplicates are handled by lazy deletion: a node is
// re-pushed when its g improves and stale entries are discarded, counted
// as pops but not expansions.
SearchResult astar(const SearchProblem& problem);

// Best-first search over jump points. Edge costs between a node and its
// jump-point successor equal their Manhattan distance (the segment is
// co-linear and obstacle free). The returned path is expanded to unit
// steps. Same open-list conventions as astar.
SearchResult jps4_search(const SearchProblem& problem, SearchTrace* trace = nullptr);

// Breadth-first search; exact shortest length on unit-cost grids. Ground
// truth for the other two engines.
SearchResult bfs_oracle(const SearchProblem& problem);

// Expands a waypoint chain into unit steps. Consecutive waypoints must be
// distinct and co-linear; the segments are concatenated in order.
Path reconstruct_path(const std::vector<Coord>& waypoints);

}  // namespace jps4
