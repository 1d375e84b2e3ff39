#include "jps4/search.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

#include "jps4/pruning.hpp"

namespace jps4 {
namespace {

constexpr std::int32_t kInfCost = std::numeric_limits<std::int32_t>::max();

// Counts distinct in-bounds cells probed for traversability.
// Out-of-bounds probes report blocked and are not counted.
class ProbeCountingGrid {
public:
    explicit ProbeCountingGrid(const GridMap& map)
        : map_(map), seen_(map.cell_count(), 0) {}

    bool passable(Coord c) const {
        if (!map_.in_bounds(c)) return false;
        const std::size_t i = map_.index(c);
        if (!seen_[i]) {
            seen_[i] = 1;
            ++probed_;
        }
        return map_.passable(c);
    }

    std::uint64_t probed() const { return probed_; }

private:
    const GridMap& map_;
    mutable std::vector<std::uint8_t> seen_;
    mutable std::uint64_t probed_ = 0;
};

struct OpenEntry {
    std::int32_t f;
    std::int32_t g;
    std::uint64_t tie;
    std::uint32_t seq;
    std::uint32_t node;
};

// Min on f, then max on g, then a pseudorandom draw assigned at push
// time, then insertion order. The draw comes from a fixed-seed generator,
// so the order is total and every run of the same search produces
// identical operation counts. Randomizing the residual ties keeps the
// frontier from degenerating into an edge-hugging march across the
// equal-f plateaus of obstacle-free regions.
struct WorseThan {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g < b.g;
        if (a.tie != b.tie) return a.tie > b.tie;
        return a.seq > b.seq;
    }
};

constexpr std::uint64_t kTieBreakSeed = 0x9E3779B97F4A7C15ull;

class OpenList {
public:
    OpenList() : tie_rng_(kTieBreakSeed) {}

    void push(std::int32_t f, std::int32_t g, std::uint32_t node, SearchMetrics& m) {
        heap_.push(OpenEntry{f, g, tie_rng_(), next_seq_++, node});
        ++m.open_pushes;
        m.max_open = std::max<std::uint64_t>(m.max_open, heap_.size());
    }

    OpenEntry pop(SearchMetrics& m) {
        OpenEntry top = heap_.top();
        heap_.pop();
        ++m.open_pops;
        return top;
    }

    bool empty() const { return heap_.empty(); }

private:
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseThan> heap_;
    std::mt19937_64 tie_rng_;
    std::uint32_t next_seq_ = 0;
};

void validate_problem(const SearchProblem& problem) {
    if (problem.map == nullptr)
        throw std::invalid_argument("search: problem has no map");
    if (!problem.map->passable(problem.start))
        throw std::invalid_argument("search: start is blocked or out of bounds");
    if (!problem.map->passable(problem.goal))
        throw std::invalid_argument("search: goal is blocked or out of bounds");
}

Path unit_step_path(const GridMap& map, const std::vector<std::int32_t>& parent,
                    Coord goal) {
    Path path;
    std::int32_t at = static_cast<std::int32_t>(map.index(goal));
    while (at >= 0) {
        path.nodes.push_back(Coord{at % map.width(), at / map.width()});
        at = parent[static_cast<std::size_t>(at)];
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
}

}  // namespace

SearchResult astar(const SearchProblem& problem) {
    validate_problem(problem);
    const auto t0 = std::chrono::steady_clock::now();

    const GridMap& map = *problem.map;
    const ProbeCountingGrid grid(map);
    SearchMetrics metrics;

    std::vector<std::int32_t> g(map.cell_count(), kInfCost);
    std::vector<std::int32_t> parent(map.cell_count(), -1);
    std::vector<std::uint8_t> closed(map.cell_count(), 0);
    OpenList open;

    const auto start_idx = static_cast<std::uint32_t>(map.index(problem.start));
    const auto goal_idx = static_cast<std::uint32_t>(map.index(problem.goal));
    g[start_idx] = 0;
    open.push(manhattan(problem.start, problem.goal), 0, start_idx, metrics);

    SearchResult result;
    while (!open.empty()) {
        const OpenEntry cur = open.pop(metrics);
        if (closed[cur.node] || cur.g != g[cur.node]) continue;  // stale
        ++metrics.expanded;
        if (cur.node == goal_idx) {
            result.path = unit_step_path(map, parent, problem.goal);
            break;
        }
        closed[cur.node] = 1;

        const Coord node{static_cast<int>(cur.node) % map.width(),
                         static_cast<int>(cur.node) / map.width()};
        for (Direction d : kDirections) {
            const Coord next = step(node, d);
            if (!grid.passable(next)) continue;
            const auto next_idx = static_cast<std::uint32_t>(map.index(next));
            if (closed[next_idx]) continue;
            const std::int32_t ng = cur.g + 1;
            if (ng < g[next_idx]) {
                g[next_idx] = ng;
                parent[next_idx] = static_cast<std::int32_t>(cur.node);
                open.push(ng + manhattan(next, problem.goal), ng, next_idx, metrics);
            }
        }
    }

    metrics.visited = grid.probed();
    metrics.wall_time = std::chrono::steady_clock::now() - t0;
    result.metrics = metrics;
    return result;
}

SearchResult jps4_search(const SearchProblem& problem, SearchTrace* trace) {
    validate_problem(problem);
    const auto t0 = std::chrono::steady_clock::now();

    const GridMap& map = *problem.map;
    const ProbeCountingGrid grid(map);
    SearchMetrics metrics;

    std::vector<std::int32_t> g(map.cell_count(), kInfCost);
    std::vector<std::int32_t> parent(map.cell_count(), -1);
    std::vector<std::uint8_t> closed(map.cell_count(), 0);
    OpenList open;

    const auto start_idx = static_cast<std::uint32_t>(map.index(problem.start));
    const auto goal_idx = static_cast<std::uint32_t>(map.index(problem.goal));
    g[start_idx] = 0;
    open.push(manhattan(problem.start, problem.goal), 0, start_idx, metrics);

    SearchResult result;
    while (!open.empty()) {
        const OpenEntry cur = open.pop(metrics);
        if (closed[cur.node] || cur.g != g[cur.node]) continue;  // stale
        ++metrics.expanded;

        const Coord node{static_cast<int>(cur.node) % map.width(),
                         static_cast<int>(cur.node) / map.width()};

        MoveContext ctx = MoveContext::start(node);
        if (parent[cur.node] >= 0) {
            const std::int32_t p = parent[cur.node];
            const Coord from{p % map.width(), p / map.width()};
            // The last unit step into a jump point runs along the ray from
            // its parent waypoint; the sign of the offset recovers it.
            const Direction arrival =
                node.x != from.x
                    ? (node.x > from.x ? Direction::Right : Direction::Left)
                    : (node.y > from.y ? Direction::Down : Direction::Up);
            ctx = MoveContext::arriving(node, from, arrival);
        }
        if (trace) trace->expanded.emplace_back(node, ctx.arrival);

        if (cur.node == goal_idx) {
            std::vector<Coord> waypoints;
            std::int32_t at = static_cast<std::int32_t>(cur.node);
            while (at >= 0) {
                waypoints.push_back(Coord{at % map.width(), at / map.width()});
                at = parent[static_cast<std::size_t>(at)];
            }
            std::reverse(waypoints.begin(), waypoints.end());
            result.path = reconstruct_path(waypoints);
            break;
        }
        closed[cur.node] = 1;

        for (Coord succ : identify_successors(grid, ctx, problem.goal)) {
            const auto succ_idx = static_cast<std::uint32_t>(map.index(succ));
            if (closed[succ_idx]) continue;
            const std::int32_t ng = cur.g + manhattan(node, succ);
            if (ng < g[succ_idx]) {
                g[succ_idx] = ng;
                parent[succ_idx] = static_cast<std::int32_t>(cur.node);
                open.push(ng + manhattan(succ, problem.goal), ng, succ_idx, metrics);
            }
        }
    }

    metrics.visited = grid.probed();
    metrics.wall_time = std::chrono::steady_clock::now() - t0;
    result.metrics = metrics;
    return result;
}

SearchResult bfs_oracle(const SearchProblem& problem) {
    validate_problem(problem);
    const auto t0 = std::chrono::steady_clock::now();

    const GridMap& map = *problem.map;
    const ProbeCountingGrid grid(map);
    SearchMetrics metrics;

    std::vector<std::int32_t> dist(map.cell_count(), -1);
    std::vector<std::int32_t> parent(map.cell_count(), -1);
    std::deque<std::uint32_t> queue;

    const auto start_idx = static_cast<std::uint32_t>(map.index(problem.start));
    const auto goal_idx = static_cast<std::uint32_t>(map.index(problem.goal));
    dist[start_idx] = 0;
    queue.push_back(start_idx);
    ++metrics.open_pushes;
    metrics.max_open = 1;

    SearchResult result;
    while (!queue.empty()) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        ++metrics.open_pops;
        ++metrics.expanded;
        if (cur == goal_idx) {
            result.path = unit_step_path(map, parent, problem.goal);
            break;
        }
        const Coord node{static_cast<int>(cur) % map.width(),
                         static_cast<int>(cur) / map.width()};
        for (Direction d : kDirections) {
            const Coord next = step(node, d);
            if (!grid.passable(next)) continue;
            const auto next_idx = static_cast<std::uint32_t>(map.index(next));
            if (dist[next_idx] >= 0) continue;
            dist[next_idx] = dist[cur] + 1;
            parent[next_idx] = static_cast<std::int32_t>(cur);
            queue.push_back(next_idx);
            ++metrics.open_pushes;
            metrics.max_open = std::max<std::uint64_t>(metrics.max_open, queue.size());
        }
    }

    metrics.visited = grid.probed();
    metrics.wall_time = std::chrono::steady_clock::now() - t0;
    result.metrics = metrics;
    return result;
}

Path reconstruct_path(const std::vector<Coord>& waypoints) {
    if (waypoints.empty())
        throw std::invalid_argument("reconstruct_path: empty waypoint sequence");
    Path path;
    path.nodes.push_back(waypoints.front());
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        const Coord a = waypoints[i - 1];
        const Coord b = waypoints[i];
        if ((a.x != b.x) == (a.y != b.y))
            throw std::invalid_argument(
                "reconstruct_path: consecutive waypoints must be distinct and co-linear");
        const Direction d = a.x != b.x
                                ? (b.x > a.x ? Direction::Right : Direction::Left)
                                : (b.y > a.y ? Direction::Down : Direction::Up);
        for (Coord c = step(a, d);; c = step(c, d)) {
            path.nodes.push_back(c);
            if (c == b) break;
        }
    }
    return path;
}

}  // namespace jps4
