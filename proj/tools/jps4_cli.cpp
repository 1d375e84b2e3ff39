// Command-line frontend: single searches, map/problem generation,
// benchmark runs, report aggregation, and randomized cross-checking of
// the three engines.
//
// Exit codes: 0 success, 1 input error, 2 optimality violation or
// verification failure.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "jps4/bench.hpp"
#include "jps4/map_gen.hpp"
#include "jps4/map_io.hpp"
#include "jps4/scenario.hpp"
#include "jps4/search.hpp"

namespace {

using namespace jps4;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerificationFailure = 2;

Coord parse_coord(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected coordinate as X,Y, got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("expected coordinate as X,Y, got '" + text + "'");
    }
}

void print_metrics(const SearchMetrics& m) {
    std::cout << "expanded:    " << m.expanded << '\n'
              << "open_pushes: " << m.open_pushes << '\n'
              << "open_pops:   " << m.open_pops << '\n'
              << "max_open:    " << m.max_open << '\n'
              << "visited:     " << m.visited << '\n'
              << "time_ns:     " << m.wall_time.count() << '\n';
}

int run_solve(const std::string& map_file, const std::string& start_text,
              const std::string& goal_text, const std::string& algo,
              bool print_path) {
    const GridMap map = parse_map_file(map_file);
    const SearchProblem problem{&map, parse_coord(start_text), parse_coord(goal_text)};
    const SearchResult result = algorithm_by_name(algo).run(problem);

    if (result.found()) {
        std::cout << "length:      " << result.path->length() << '\n';
    } else {
        std::cout << "length:      unreachable\n";
    }
    print_metrics(result.metrics);
    if (print_path && result.found()) {
        for (const Coord c : result.path->nodes)
            std::cout << c.x << ',' << c.y << '\n';
    }
    return kExitOk;
}

int run_bench(const std::string& scen_file, const std::string& map_dir,
              const std::string& algos_text, int reps, int jobs,
              const std::string& out_file) {
    std::vector<AlgorithmSpec> algorithms;
    std::stringstream ss(algos_text);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty()) algorithms.push_back(algorithm_by_name(name));
    if (algorithms.empty()) throw std::invalid_argument("bench: no algorithms given");

    const auto scenarios = parse_scen_file(scen_file);
    if (scenarios.empty()) throw std::invalid_argument("bench: scenario file is empty");
    MapStore maps(map_dir);

    const auto records =
        run_benchmark(scenarios, maps, algorithms, {.repetitions = reps, .jobs = jobs});

    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("bench: cannot open '" + out_file + "'");
    emit_records_csv(out, records);
    out.flush();
    if (!out) throw std::runtime_error("bench: write to '" + out_file + "' failed");
    std::cout << records.size() << " records -> " << out_file << '\n';
    return kExitOk;
}

int run_report(const std::string& in_file, const std::string& out_file) {
    const auto records = parse_records_csv_file(in_file);
    const auto rows = speedup_report(records);
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("report: cannot open '" + out_file + "'");
    emit_speedup_csv(out, rows);
    out.flush();
    if (!out) throw std::runtime_error("report: write to '" + out_file + "' failed");
    std::cout << rows.size() << " rows -> " << out_file << '\n';
    return kExitOk;
}

int run_verify(const std::string& map_file, int trials, std::uint64_t seed) {
    const GridMap map = parse_map_file(map_file);
    std::vector<Coord> open_cells;
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x)
            if (map.passable({x, y})) open_cells.push_back({x, y});
    if (open_cells.empty())
        throw std::invalid_argument("verify: map has no traversable cells");

    std::mt19937_64 rng(seed);
    const auto pick = [&] { return open_cells[rng() % open_cells.size()]; };

    int disagreements = 0;
    for (int t = 0; t < trials; ++t) {
        const SearchProblem problem{&map, pick(), pick()};
        const auto a = astar(problem);
        const auto j = jps4_search(problem);
        const auto b = bfs_oracle(problem);

        const auto len = [](const SearchResult& r) {
            return r.found() ? static_cast<std::int64_t>(r.path->length()) : -1;
        };
        const auto path_ok = [&](const SearchResult& r) {
            return !r.found() ||
                   (is_valid_path(map, *r.path) &&
                    r.path->nodes.front() == problem.start &&
                    r.path->nodes.back() == problem.goal);
        };
        if (len(a) != len(b) || len(j) != len(b) || !path_ok(a) || !path_ok(j)) {
            ++disagreements;
            std::cerr << "disagreement: start " << problem.start << " goal "
                      << problem.goal << ": astar=" << len(a) << " jps4=" << len(j)
                      << " bfs=" << len(b) << '\n';
        }
    }
    if (disagreements > 0) {
        std::cerr << disagreements << " of " << trials << " trials disagreed\n";
        return kExitVerificationFailure;
    }
    std::cout << trials << " trials, all three engines agree\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"JPS4 pathfinding on 4-connected grids"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run one search on a map");
    std::string solve_map, solve_start, solve_goal, solve_algo = "jps4";
    bool solve_print_path = false;
    solve->add_option("--map", solve_map, "MovingAI .map file")->required();
    solve->add_option("--start", solve_start, "Start cell as X,Y")->required();
    solve->add_option("--goal", solve_goal, "Goal cell as X,Y")->required();
    solve->add_option("--algo", solve_algo, "astar, jps4 or bfs");
    solve->add_flag("--print-path", solve_print_path, "Print every path cell");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a scenario set and write a CSV");
    std::string bench_scen, bench_map_dir, bench_algos = "astar,jps4", bench_out;
    int bench_reps = 1, bench_jobs = 1;
    bench->add_option("--scen", bench_scen, "MovingAI .scen file")->required();
    bench->add_option("--map-dir", bench_map_dir, "Directory with the referenced maps")
        ->required();
    bench->add_option("--algos", bench_algos, "Comma-separated algorithm list");
    bench->add_option("--reps", bench_reps, "Timed repetitions per run");
    bench->add_option("--jobs", bench_jobs,
                      "Parallel scenario workers; leave at 1 when wall times matter");
    bench->add_option("--out", bench_out, "Output CSV")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate maps and problem sets");
    gen->require_subcommand(1);
    auto* gen_empty = gen->add_subcommand("empty", "Fully traversable map");
    int ge_width = 0, ge_height = 0;
    std::string ge_out;
    gen_empty->add_option("--width", ge_width)->required();
    gen_empty->add_option("--height", ge_height)->required();
    gen_empty->add_option("--out", ge_out)->required();

    auto* gen_rooms = gen->add_subcommand("rooms", "Room lattice with doors");
    int gr_width = 0, gr_height = 0, gr_room = 16;
    std::uint64_t gr_seed = 1;
    std::string gr_out;
    gen_rooms->add_option("--width", gr_width)->required();
    gen_rooms->add_option("--height", gr_height)->required();
    gen_rooms->add_option("--room-size", gr_room, "8, 16, 32 or 64");
    gen_rooms->add_option("--seed", gr_seed);
    gen_rooms->add_option("--out", gr_out)->required();

    auto* gen_problems =
        gen->add_subcommand("problems", "Scenario set for an empty square map");
    int gp_side = 0, gp_per_length = 0, gp_max_length = 0;
    std::uint64_t gp_seed = 1;
    std::string gp_out;
    gen_problems->add_option("--side", gp_side, "Side of the empty map")->required();
    gen_problems->add_option("--per-length", gp_per_length)->required();
    gen_problems->add_option("--max-length", gp_max_length)->required();
    gen_problems->add_option("--seed", gp_seed);
    gen_problems->add_option("--out", gp_out, "Output .scen file")->required();

    // verify
    auto* verify =
        app.add_subcommand("verify", "Randomized three-way engine cross-check");
    std::string verify_map;
    int verify_trials = 100;
    std::uint64_t verify_seed = 1;
    verify->add_option("--map", verify_map, "MovingAI .map file")->required();
    verify->add_option("--trials", verify_trials);
    verify->add_option("--seed", verify_seed);

    // report
    auto* report = app.add_subcommand("report", "Aggregate a results CSV into speedups");
    std::string report_in, report_out;
    report->add_option("--in", report_in, "results CSV from bench")->required();
    report->add_option("--out", report_out, "speedup CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed())
            return run_solve(solve_map, solve_start, solve_goal, solve_algo,
                             solve_print_path);
        if (bench->parsed())
            return run_bench(bench_scen, bench_map_dir, bench_algos, bench_reps,
                             bench_jobs, bench_out);
        if (gen->parsed()) {
            if (gen_empty->parsed()) {
                write_map_file(ge_out, generate_empty(ge_width, ge_height));
                std::cout << "wrote " << ge_out << '\n';
            } else if (gen_rooms->parsed()) {
                write_map_file(gr_out,
                               generate_rooms(gr_width, gr_height, gr_room, gr_seed));
                std::cout << "wrote " << gr_out << '\n';
            } else {
                write_scen_file(gp_out, generate_empty_problems(gp_side, gp_per_length,
                                                                gp_max_length, gp_seed));
                std::cout << "wrote " << gp_out << '\n';
            }
            return kExitOk;
        }
        if (verify->parsed()) return run_verify(verify_map, verify_trials, verify_seed);
        if (report->parsed()) return run_report(report_in, report_out);
    } catch (const optimality_violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
