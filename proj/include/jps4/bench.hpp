#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "jps4/grid_map.hpp"
#include "jps4/scenario.hpp"
#include "jps4/search.hpp"

namespace jps4 {

// Raised when two algorithms disagree on a scenario's optimal length.
// Any such disagreement aborts the whole run: it means one of the
// searches is broken, so the remaining measurements would be meaningless.
struct optimality_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One timed run of one algorithm on one scenario. length is the optimal
// 4-connected path length, or -1 when the goal is unreachable.
struct RunRecord {
    int scenario_id = 0;
    std::string map_name;
    std::string algorithm;
    std::int64_t length = -1;
    SearchMetrics metrics;
};

// Mean A*-over-JPS4 wall-time ratio across all problems that share one
// optimal path length. problem_count makes sparsely populated lengths
// visible, since a single noisy problem can dominate its row.
struct SpeedupRow {
    std::int64_t path_length = 0;
    double mean_speedup = 0.0;
    std::int64_t problem_count = 0;

    friend bool operator==(const SpeedupRow&, const SpeedupRow&) = default;
};

// Loads .map files by scenario map name, caching them. Maps can also be
// registered directly for in-memory runs. get() is safe to call from
// parallel benchmark workers.
class MapStore {
public:
    MapStore() = default;
    explicit MapStore(std::string map_dir) : dir_(std::move(map_dir)) {}

    void add(const std::string& name, GridMap map);
    const GridMap& get(const std::string& name);

private:
    std::string dir_;
    std::unordered_map<std::string, GridMap> cache_;
    std::mutex mutex_;
};

using SearchFunction = std::function<SearchResult(const SearchProblem&)>;

struct AlgorithmSpec {
    std::string name;
    SearchFunction run;
};

// The built-in engines: "astar", "jps4", "bfs".
AlgorithmSpec algorithm_by_name(const std::string& name);

struct BenchmarkOptions {
    int repetitions = 1;
    // Scenarios per worker thread; 1 keeps every timed region alone on
    // the process, which is the configuration wall times are trusted in.
    int jobs = 1;
};

// Runs every (scenario, algorithm) pair `repetitions` times after one
// discarded warm-up run. Counter metrics must match across repetitions
// (they are deterministic; a mismatch is an implementation bug) and all
// algorithms must agree on each scenario's outcome.
std::vector<RunRecord> run_benchmark(const std::vector<Scenario>& scenarios,
                                     MapStore& maps,
                                     const std::vector<AlgorithmSpec>& algorithms,
                                     const BenchmarkOptions& options = {});

// Per-scenario speedup = mean astar wall time / mean jps4 wall time, then
// the arithmetic mean over scenarios sharing an optimal length.
// Unreachable scenarios are excluded. Rows come out sorted by length.
std::vector<SpeedupRow> speedup_report(const std::vector<RunRecord>& records);

// CSV with header scenario_id,map,algorithm,length,time_ns,expanded,
// open_pushes,open_pops,max_open,visited. Plain numeric columns, ready
// for gnuplot.
void emit_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_records_csv(std::istream& in);
std::vector<RunRecord> parse_records_csv_file(const std::string& path);

// CSV with header path_length,mean_speedup,problem_count. Doubles are
// written with round-trip precision.
void emit_speedup_csv(std::ostream& out, const std::vector<SpeedupRow>& rows);
std::vector<SpeedupRow> parse_speedup_csv(std::istream& in);

}  // namespace jps4
