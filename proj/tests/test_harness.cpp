#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "jps4/bench.hpp"
#include "jps4/map_gen.hpp"
#include "jps4/map_io.hpp"
#include "jps4/scenario.hpp"
#include "oracles.hpp"

using namespace jps4;
using test::make_map;

TEST_CASE("scenario rows parse field for field") {
    std::istringstream in(
        "version 1\n"
        "0\tmaps/arena.map\t49\t49\t1\t11\t1\t12\t1\n"
        "5 maps/arena.map 49 49 3 4 40 44 77.38477\n");
    const auto scenarios = parse_scen(in);
    REQUIRE(scenarios.size() == 2);
    CHECK(scenarios[0].map_name == "maps/arena.map");
    CHECK(scenarios[0].width == 49);
    CHECK(scenarios[0].height == 49);
    CHECK(scenarios[0].start == Coord{1, 11});
    CHECK(scenarios[0].goal == Coord{1, 12});
    CHECK(scenarios[0].declared_length == 1.0);
    CHECK(scenarios[1].start == Coord{3, 4});
    CHECK(scenarios[1].goal == Coord{40, 44});
}

TEST_CASE("scenario parser reports the offending line") {
    std::istringstream eight_cols("version 1\n0 a.map 10 10 1 2 3 4\n");
    try {
        parse_scen(eight_cols);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream bad_number("0 a.map 10 10 1 x 3 4 5\n");
    CHECK_THROWS_AS(parse_scen(bad_number), std::runtime_error);

    std::istringstream out_of_dims("0 a.map 10 10 1 2 3 10 5\n");
    CHECK_THROWS_AS(parse_scen(out_of_dims), std::runtime_error);

    std::istringstream degenerate("0 a.map 10 10 2 2 2 2 5\n");
    CHECK_THROWS_AS(parse_scen(degenerate), std::runtime_error);

    std::istringstream trivial("0 a.map 10 10 2 2 2 2 0\n");
    CHECK(parse_scen(trivial).size() == 1);

    std::istringstream no_version("0 a.map 10 10 1 2 3 4 5\n");
    CHECK(parse_scen(no_version).size() == 1);
}

TEST_CASE("scenario writer round-trips") {
    const auto scenarios = generate_empty_problems(20, 3, 10, 77);
    std::stringstream buffer;
    write_scen(buffer, scenarios);
    CHECK(parse_scen(buffer) == scenarios);
}

TEST_CASE("empty-map problem generation") {
    const auto tiny = generate_empty_problems(3, 4, 1, 5);
    REQUIRE(tiny.size() == 4);
    for (const auto& s : tiny) {
        CHECK(manhattan(s.start, s.goal) == 1);
        CHECK(s.width == 3);
    }

    const auto batch = generate_empty_problems(500, 5, 40, 123);
    CHECK(batch.size() == 5u * 40u);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const int expected_length = static_cast<int>(i / 5) + 1;
        CHECK(manhattan(batch[i].start, batch[i].goal) == expected_length);
        CHECK(batch[i].declared_length == expected_length);
    }

    CHECK(generate_empty_problems(500, 5, 40, 123) == batch);  // determinism
    CHECK(generate_empty_problems(500, 5, 40, 124) != batch);

    // A 2x2 map admits only 4 ordered pairs at distance 2; the rest of the
    // quota is filled by repetition.
    const auto repeated = generate_empty_problems(2, 10, 2, 9);
    int at_two = 0;
    for (const auto& s : repeated)
        if (manhattan(s.start, s.goal) == 2) ++at_two;
    CHECK(at_two == 10);

    CHECK_THROWS_AS(generate_empty_problems(3, 1, 100, 1), std::invalid_argument);
}

TEST_CASE("benchmark runs every scenario, algorithm and repetition") {
    MapStore store;
    store.add("free.map", generate_empty(8, 8));
    const std::vector<Scenario> scenarios{{"free.map", 8, 8, {0, 0}, {7, 7}, 14.0}};
    const std::vector<AlgorithmSpec> algos{algorithm_by_name("astar"),
                                           algorithm_by_name("jps4")};

    const auto records = run_benchmark(scenarios, store, algos, {.repetitions = 3});
    REQUIRE(records.size() == 6);
    for (const auto& r : records) CHECK(r.length == 14);

    // Counters agree across the repetitions of each algorithm.
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(records[i].metrics.expanded == records[0].metrics.expanded);
        CHECK(records[3 + i].metrics.expanded == records[3].metrics.expanded);
    }
}

TEST_CASE("parallel benchmark yields the same records in the same order") {
    MapStore store;
    store.add("rooms.map", generate_rooms(64, 64, 8, 5));
    std::vector<Scenario> scenarios;
    for (int i = 0; i < 12; ++i)  // goals inside the second room diagonal-wise
        scenarios.push_back(Scenario{"rooms.map", 64, 64, {1, 1},
                                     {10 + i % 8, 10 + (i * 3) % 8}, 0.0});

    const std::vector<AlgorithmSpec> algos{algorithm_by_name("astar"),
                                           algorithm_by_name("jps4")};
    const auto serial = run_benchmark(scenarios, store, algos, {.jobs = 1});
    const auto parallel = run_benchmark(scenarios, store, algos, {.jobs = 4});
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].scenario_id == parallel[i].scenario_id);
        CHECK(serial[i].algorithm == parallel[i].algorithm);
        CHECK(serial[i].length == parallel[i].length);
        CHECK(serial[i].metrics.expanded == parallel[i].metrics.expanded);
        CHECK(serial[i].metrics.open_pushes == parallel[i].metrics.open_pushes);
        CHECK(serial[i].metrics.visited == parallel[i].metrics.visited);
    }
}

TEST_CASE("benchmark records unreachable outcomes") {
    MapStore store;
    store.add("sealed.map", make_map({
                                ".#.",
                                ".#.",
                                ".#.",
                            }));
    const std::vector<Scenario> scenarios{{"sealed.map", 3, 3, {0, 1}, {2, 1}, 0.0}};
    const auto records = run_benchmark(scenarios, store,
                                       {algorithm_by_name("astar"),
                                        algorithm_by_name("jps4"),
                                        algorithm_by_name("bfs")},
                                       {});
    REQUIRE(records.size() == 3);
    for (const auto& r : records) CHECK(r.length == -1);
}

TEST_CASE("benchmark aborts when an algorithm loses optimality") {
    MapStore store;
    store.add("free.map", generate_empty(6, 6));
    const std::vector<Scenario> scenarios{{"free.map", 6, 6, {0, 0}, {5, 5}, 10.0}};

    const AlgorithmSpec faulty{
        "faulty", [](const SearchProblem& p) {
            SearchResult r = astar(p);
            if (r.found()) r.path->nodes.push_back(r.path->nodes.back());  // length + 1
            return r;
        }};
    CHECK_THROWS_AS(
        run_benchmark(scenarios, store, {algorithm_by_name("astar"), faulty}, {}),
        optimality_violation);
}

TEST_CASE("benchmark loads maps from a directory") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "jps4_mapstore_test";
    fs::create_directories(dir);
    write_map_file((dir / "tiny.map").string(), generate_empty(4, 4));

    MapStore store(dir.string());
    const std::vector<Scenario> scenarios{{"tiny.map", 4, 4, {0, 0}, {3, 3}, 6.0}};
    const auto records =
        run_benchmark(scenarios, store, {algorithm_by_name("bfs")}, {});
    REQUIRE(records.size() == 1);
    CHECK(records[0].length == 6);

    MapStore empty_store;
    CHECK_THROWS(run_benchmark(scenarios, empty_store, {algorithm_by_name("bfs")}, {}));
    fs::remove_all(dir);
}

namespace {

RunRecord fake_record(int scenario, const std::string& algo, std::int64_t length,
                      std::int64_t time_ns) {
    RunRecord r;
    r.scenario_id = scenario;
    r.map_name = "m.map";
    r.algorithm = algo;
    r.length = length;
    r.metrics.wall_time = std::chrono::nanoseconds(time_ns);
    r.metrics.expanded = 10;
    r.metrics.open_pushes = 12;
    r.metrics.open_pops = 11;
    r.metrics.max_open = 4;
    r.metrics.visited = 40;
    return r;
}

}  // namespace

TEST_CASE("speedup report aggregates ratios by path length") {
    const std::vector<RunRecord> one{fake_record(0, "astar", 8, 2'000'000),
                                     fake_record(0, "jps4", 8, 1'000'000)};
    const auto single = speedup_report(one);
    REQUIRE(single.size() == 1);
    CHECK(single[0].path_length == 8);
    CHECK(single[0].mean_speedup == doctest::Approx(2.0));
    CHECK(single[0].problem_count == 1);

    std::vector<RunRecord> two{
        fake_record(0, "astar", 8, 1'000'000), fake_record(0, "jps4", 8, 1'000'000),
        fake_record(1, "astar", 8, 3'000'000), fake_record(1, "jps4", 8, 1'000'000)};
    const auto merged = speedup_report(two);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].mean_speedup == doctest::Approx(2.0));
    CHECK(merged[0].problem_count == 2);

    // Reordering the records changes nothing, bit for bit.
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(two.begin(), two.end(), rng);
        CHECK(speedup_report(two) == merged);
    }

    // Unreachable scenarios are excluded from the rows.
    std::vector<RunRecord> with_unreachable = two;
    with_unreachable.push_back(fake_record(2, "astar", -1, 500));
    with_unreachable.push_back(fake_record(2, "jps4", -1, 500));
    CHECK(speedup_report(with_unreachable) == merged);

    CHECK_THROWS_AS(speedup_report({}), std::invalid_argument);
}

TEST_CASE("record CSV round-trips every field") {
    std::vector<RunRecord> records{fake_record(0, "astar", 14, 123456),
                                   fake_record(0, "jps4", 14, 65432),
                                   fake_record(1, "astar", -1, 999)};
    records[2].metrics.visited = 77;

    std::stringstream buffer;
    emit_records_csv(buffer, records);
    const std::string text = buffer.str();
    CHECK(text.find("scenario_id,map,algorithm,length,time_ns") == 0);
    CHECK(text.find("1,m.map,astar,-1,999") != std::string::npos);

    const auto reparsed = parse_records_csv(buffer);
    REQUIRE(reparsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(reparsed[i].scenario_id == records[i].scenario_id);
        CHECK(reparsed[i].map_name == records[i].map_name);
        CHECK(reparsed[i].algorithm == records[i].algorithm);
        CHECK(reparsed[i].length == records[i].length);
        CHECK(reparsed[i].metrics.wall_time == records[i].metrics.wall_time);
        CHECK(reparsed[i].metrics.expanded == records[i].metrics.expanded);
        CHECK(reparsed[i].metrics.visited == records[i].metrics.visited);
    }
}

TEST_CASE("speedup CSV round-trips exactly") {
    const std::vector<SpeedupRow> rows{{8, 2.0, 2}, {13, 0.3333333333333333, 7}};
    std::stringstream buffer;
    emit_speedup_csv(buffer, rows);
    CHECK(buffer.str() ==
          "path_length,mean_speedup,problem_count\n"
          "8,2.0,2\n"
          "13,0.3333333333333333,7\n");
    CHECK(parse_speedup_csv(buffer) == rows);

    std::stringstream empty;
    CHECK_THROWS_AS(emit_speedup_csv(empty, {}), std::invalid_argument);
}
