#include <doctest.h>

#include <algorithm>
#include <random>

#include "jps4/canonical.hpp"
#include "jps4/map_gen.hpp"
#include "jps4/pruning.hpp"
#include "jps4/search.hpp"
#include "oracles.hpp"

using namespace jps4;
using test::make_map;
using Kind = TurningPoint::Kind;

TEST_CASE("turning points are direction changes at interior nodes") {
    CHECK(turning_points(Path{{{0, 0}, {1, 0}, {2, 0}}}).empty());
    CHECK(turning_points(Path{{{0, 0}, {1, 0}}}).empty());

    const auto single = turning_points(Path{{{0, 0}, {1, 0}, {1, 1}}});
    CHECK(single == std::vector<TurningPoint>{{1, Kind::HorizontalToVertical}});

    const auto both =
        turning_points(Path{{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}});
    CHECK(both == std::vector<TurningPoint>{{1, Kind::VerticalToHorizontal},
                                            {3, Kind::HorizontalToVertical}});

    CHECK_THROWS_AS(turning_points(Path{{{0, 0}, {1, 0}, {0, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("horizontal-first check") {
    const GridMap free3 = generate_empty(3, 3);

    CHECK(is_horizontal_first(free3, Path{{{0, 0}, {1, 0}, {1, 1}}}));

    // The vertical-then-horizontal corner can swap through (1,0).
    CHECK_FALSE(is_horizontal_first(free3, Path{{{0, 0}, {0, 1}, {1, 1}}}));

    // With the swap cell blocked the same path is locked in place.
    GridMap blocked = free3;
    blocked.set_passable({1, 0}, false);
    CHECK(is_horizontal_first(blocked, Path{{{0, 0}, {0, 1}, {1, 1}}}));
}

TEST_CASE("corner swap rewrites vertical-first corners") {
    const GridMap free3 = generate_empty(3, 3);

    CHECK(to_horizontal_first(free3, Path{{{0, 0}, {0, 1}, {1, 1}}}).nodes ==
          std::vector<Coord>{{0, 0}, {1, 0}, {1, 1}});

    const Path already{{{0, 0}, {1, 0}, {1, 1}}};
    CHECK(to_horizontal_first(free3, already) == already);
}

TEST_CASE("staircase flattens into the unique horizontal-first path") {
    const GridMap free3 = generate_empty(3, 3);
    const Path staircase{{{0, 2}, {0, 1}, {1, 1}, {1, 0}, {2, 0}}};
    const Path expected{{{0, 2}, {1, 2}, {2, 2}, {2, 1}, {2, 0}}};

    const Path result = to_horizontal_first(free3, staircase);
    CHECK(result == expected);

    // Brute force over all monotone length-4 paths from (0,2) to (2,0):
    // exactly one is horizontal-first, and it is the one above.
    std::vector<Path> hf;
    std::vector<int> moves{0, 0, 1, 1};  // 0 = right, 1 = up
    std::sort(moves.begin(), moves.end());
    do {
        Path p{{{0, 2}}};
        for (int m : moves)
            p.nodes.push_back(m == 0 ? step(p.nodes.back(), Direction::Right)
                                     : step(p.nodes.back(), Direction::Up));
        REQUIRE(p.nodes.back() == Coord{2, 0});
        if (is_horizontal_first(free3, p)) hf.push_back(p);
    } while (std::next_permutation(moves.begin(), moves.end()));
    REQUIRE(hf.size() == 1);
    CHECK(hf.front() == expected);
}

TEST_CASE("transform preserves path structure and reaches a fixpoint") {
    std::mt19937_64 rng(53);
    int transformed = 0;
    for (int round = 0; round < 300; ++round) {
        const GridMap map = test::random_map(rng, 12, 12, test::bounded(rng, 35));
        const auto start = test::random_traversable(rng, map);
        const auto goal = test::random_traversable(rng, map);
        if (!start || !goal) continue;
        const auto oracle = bfs_oracle({&map, *start, *goal});
        if (!oracle.found() || oracle.path->length() < 2) continue;
        ++transformed;

        const Path& original = *oracle.path;
        const Path flat = to_horizontal_first(map, original);
        CHECK(flat.nodes.front() == original.nodes.front());
        CHECK(flat.nodes.back() == original.nodes.back());
        CHECK(flat.length() == original.length());
        CHECK(is_valid_path(map, flat));
        CHECK(is_horizontal_first(map, flat));
        CHECK(to_horizontal_first(map, flat) == flat);  // idempotent
    }
    CHECK(transformed > 100);
}

TEST_CASE("turning points of optimal horizontal-first paths are jump points") {
    std::mt19937_64 rng(59);
    int paths_checked = 0;
    for (int round = 0; round < 300; ++round) {
        const GridMap map = test::random_map(rng, 12, 12, 25);
        const auto start = test::random_traversable(rng, map);
        const auto goal = test::random_traversable(rng, map);
        if (!start || !goal) continue;
        const auto oracle = bfs_oracle({&map, *start, *goal});
        if (!oracle.found() || oracle.path->length() < 2) continue;
        ++paths_checked;

        const Path flat = to_horizontal_first(map, *oracle.path);
        for (const TurningPoint& tp : turning_points(flat)) {
            const Coord node = flat.nodes[tp.index];
            const Direction arrival =
                direction_between(flat.nodes[tp.index - 1], node);
            const bool qualifies =
                is_horizontal(arrival) || has_forced_neighbor(map, node, arrival);
            CHECK(qualifies);
        }
    }
    CHECK(paths_checked > 100);
}
