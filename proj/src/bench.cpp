#include "jps4/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "jps4/map_io.hpp"
#include "number_format.hpp"

namespace jps4 {
namespace {

std::string format_double(double v) {
    std::string s = detail::shortest_double(v);
    // Keep a decimal point so the column stays recognizably floating.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

template <class T>
T parse_number(const std::string& s, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("csv: line " + std::to_string(line_no) +
                                 ": bad numeric field '" + s + "'");
    return value;
}

bool counters_equal(const SearchMetrics& a, const SearchMetrics& b) {
    return a.expanded == b.expanded && a.open_pushes == b.open_pushes &&
           a.open_pops == b.open_pops && a.max_open == b.max_open &&
           a.visited == b.visited;
}

std::int64_t outcome_length(const SearchResult& r) {
    return r.found() ? static_cast<std::int64_t>(r.path->length()) : -1;
}

}  // namespace

void MapStore::add(const std::string& name, GridMap map) {
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.insert_or_assign(name, std::move(map));
}

const GridMap& MapStore::get(const std::string& name) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (const auto it = cache_.find(name); it != cache_.end()) return it->second;
    if (dir_.empty())
        throw std::runtime_error("maps: '" + name + "' is not registered");
    namespace fs = std::filesystem;
    fs::path candidate = fs::path(dir_) / name;
    if (!fs::exists(candidate))
        candidate = fs::path(dir_) / fs::path(name).filename();
    if (!fs::exists(candidate))
        throw std::runtime_error("maps: cannot find '" + name + "' under '" + dir_ + "'");
    const auto [it, inserted] = cache_.emplace(name, parse_map_file(candidate.string()));
    return it->second;
}

AlgorithmSpec algorithm_by_name(const std::string& name) {
    if (name == "astar") return {"astar", [](const SearchProblem& p) { return astar(p); }};
    if (name == "jps4")
        return {"jps4", [](const SearchProblem& p) { return jps4_search(p); }};
    if (name == "bfs")
        return {"bfs", [](const SearchProblem& p) { return bfs_oracle(p); }};
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (expected astar, jps4 or bfs)");
}

std::vector<RunRecord> run_benchmark(const std::vector<Scenario>& scenarios,
                                     MapStore& maps,
                                     const std::vector<AlgorithmSpec>& algorithms,
                                     const BenchmarkOptions& options) {
    if (algorithms.empty())
        throw std::invalid_argument("run_benchmark: no algorithms given");
    if (options.repetitions < 1)
        throw std::invalid_argument("run_benchmark: repetitions must be at least 1");

    std::vector<std::vector<RunRecord>> per_scenario(scenarios.size());

    const auto run_one = [&](std::size_t idx) {
        const Scenario& scenario = scenarios[idx];
        const GridMap& map = maps.get(scenario.map_name);
        const SearchProblem problem{&map, scenario.start, scenario.goal};

        std::vector<RunRecord>& records = per_scenario[idx];
        records.reserve(algorithms.size() * static_cast<std::size_t>(options.repetitions));

        bool have_reference = false;
        std::int64_t reference_length = -1;
        std::string reference_algorithm;
        for (const auto& algo : algorithms) {
            const SearchResult warmup = algo.run(problem);
            const std::int64_t length = outcome_length(warmup);

            for (int rep = 0; rep < options.repetitions; ++rep) {
                SearchResult r = algo.run(problem);
                if (outcome_length(r) != length || !counters_equal(r.metrics, warmup.metrics))
                    throw std::runtime_error(
                        "run_benchmark: nondeterministic counters for algorithm '" +
                        algo.name + "' on scenario " + std::to_string(idx));
                records.push_back(RunRecord{static_cast<int>(idx), scenario.map_name,
                                            algo.name, length, r.metrics});
            }

            if (!have_reference) {
                have_reference = true;
                reference_length = length;
                reference_algorithm = algo.name;
            } else if (length != reference_length) {
                std::ostringstream msg;
                msg << "optimality violation on scenario " << idx << " (map "
                    << scenario.map_name << ", start " << scenario.start << ", goal "
                    << scenario.goal << "): " << reference_algorithm << " found "
                    << reference_length << ", " << algo.name << " found " << length;
                throw optimality_violation(msg.str());
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || scenarios.size() < 2) {
        for (std::size_t i = 0; i < scenarios.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        const int worker_count =
            std::min<int>(jobs, static_cast<int>(scenarios.size()));
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= scenarios.size()) return;
                    {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (error) return;
                    }
                    try {
                        run_one(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<RunRecord> records;
    for (auto& block : per_scenario)
        for (auto& r : block) records.push_back(std::move(r));
    return records;
}

std::vector<SpeedupRow> speedup_report(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("speedup_report: no records");

    struct ScenarioTimes {
        std::int64_t length = -1;
        std::int64_t astar_total_ns = 0;
        std::int64_t astar_runs = 0;
        std::int64_t jps_total_ns = 0;
        std::int64_t jps_runs = 0;
    };
    std::map<int, ScenarioTimes> by_scenario;
    for (const auto& r : records) {
        auto& s = by_scenario[r.scenario_id];
        s.length = r.length;
        if (r.algorithm == "astar") {
            s.astar_total_ns += r.metrics.wall_time.count();
            ++s.astar_runs;
        } else if (r.algorithm == "jps4") {
            s.jps_total_ns += r.metrics.wall_time.count();
            ++s.jps_runs;
        }
    }

    // scenario_id order is canonical, so accumulation below does not
    // depend on the order records arrived in.
    std::map<std::int64_t, std::pair<double, std::int64_t>> by_length;
    for (const auto& [id, s] : by_scenario) {
        if (s.length < 0) continue;  // unreachable: speedup undefined
        if (s.astar_runs == 0 || s.jps_runs == 0)
            throw std::invalid_argument(
                "speedup_report: scenario " + std::to_string(id) +
                " lacks astar or jps4 records");
        const double astar_mean =
            static_cast<double>(s.astar_total_ns) / static_cast<double>(s.astar_runs);
        const double jps_mean =
            static_cast<double>(s.jps_total_ns) / static_cast<double>(s.jps_runs);
        auto& [sum, count] = by_length[s.length];
        sum += astar_mean / jps_mean;
        ++count;
    }

    std::vector<SpeedupRow> rows;
    rows.reserve(by_length.size());
    for (const auto& [length, agg] : by_length)
        rows.push_back(SpeedupRow{length, agg.first / static_cast<double>(agg.second),
                                  agg.second});
    return rows;
}

namespace {
constexpr const char* kRecordsHeader =
    "scenario_id,map,algorithm,length,time_ns,expanded,open_pushes,open_pops,max_open,"
    "visited";
constexpr const char* kSpeedupHeader = "path_length,mean_speedup,problem_count";
}  // namespace

void emit_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("emit_records_csv: no records");
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        out << r.scenario_id << ',' << r.map_name << ',' << r.algorithm << ','
            << r.length << ',' << r.metrics.wall_time.count() << ','
            << r.metrics.expanded << ',' << r.metrics.open_pushes << ','
            << r.metrics.open_pops << ',' << r.metrics.max_open << ','
            << r.metrics.visited << '\n';
    }
}

std::vector<RunRecord> parse_records_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kRecordsHeader)
        throw std::runtime_error("csv: unexpected header '" + line + "'");

    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 10)
            throw std::runtime_error("csv: line " + std::to_string(line_no) +
                                     ": expected 10 fields, got " +
                                     std::to_string(f.size()));
        RunRecord r;
        r.scenario_id = parse_number<int>(f[0], line_no);
        r.map_name = f[1];
        r.algorithm = f[2];
        r.length = parse_number<std::int64_t>(f[3], line_no);
        r.metrics.wall_time =
            std::chrono::nanoseconds(parse_number<std::int64_t>(f[4], line_no));
        r.metrics.expanded = parse_number<std::uint64_t>(f[5], line_no);
        r.metrics.open_pushes = parse_number<std::uint64_t>(f[6], line_no);
        r.metrics.open_pops = parse_number<std::uint64_t>(f[7], line_no);
        r.metrics.max_open = parse_number<std::uint64_t>(f[8], line_no);
        r.metrics.visited = parse_number<std::uint64_t>(f[9], line_no);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<RunRecord> parse_records_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
    return parse_records_csv(in);
}

void emit_speedup_csv(std::ostream& out, const std::vector<SpeedupRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("emit_speedup_csv: no rows");
    out << kSpeedupHeader << '\n';
    for (const auto& r : rows)
        out << r.path_length << ',' << format_double(r.mean_speedup) << ','
            << r.problem_count << '\n';
}

std::vector<SpeedupRow> parse_speedup_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSpeedupHeader)
        throw std::runtime_error("csv: unexpected header '" + line + "'");

    std::vector<SpeedupRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 3)
            throw std::runtime_error("csv: line " + std::to_string(line_no) +
                                     ": expected 3 fields, got " +
                                     std::to_string(f.size()));
        SpeedupRow r;
        r.path_length = parse_number<std::int64_t>(f[0], line_no);
        r.mean_speedup = parse_number<double>(f[1], line_no);
        r.problem_count = parse_number<std::int64_t>(f[2], line_no);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace jps4
