#include "jps4/scenario.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "number_format.hpp"

namespace jps4 {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string f;
    while (ss >> f) fields.push_back(std::move(f));
    return fields;
}

[[noreturn]] void row_error(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("scen: line " + std::to_string(line_no) + ": " + what);
}

int parse_int_field(const std::string& s, std::size_t line_no, const char* name) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        row_error(line_no, std::string("field '") + name + "' is not an integer: '" + s +
                               "'");
    return value;
}

double parse_double_field(const std::string& s, std::size_t line_no, const char* name) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        row_error(line_no, std::string("field '") + name + "' is not a number: '" + s +
                               "'");
    }
}

int bounded(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

}  // namespace

std::vector<Scenario> parse_scen(std::istream& in) {
    std::vector<Scenario> out;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (first_content_line && fields[0] == "version") {
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if (fields.size() != 9)
            row_error(line_no, "expected 9 fields, got " + std::to_string(fields.size()));

        Scenario s;
        // fields[0] is the bucket; it carries no information we use.
        s.map_name = fields[1];
        s.width = parse_int_field(fields[2], line_no, "width");
        s.height = parse_int_field(fields[3], line_no, "height");
        s.start = {parse_int_field(fields[4], line_no, "start-x"),
                   parse_int_field(fields[5], line_no, "start-y")};
        s.goal = {parse_int_field(fields[6], line_no, "goal-x"),
                  parse_int_field(fields[7], line_no, "goal-y")};
        s.declared_length = parse_double_field(fields[8], line_no, "length");

        const auto in_dims = [&](Coord c) {
            return c.x >= 0 && c.x < s.width && c.y >= 0 && c.y < s.height;
        };
        if (!in_dims(s.start) || !in_dims(s.goal))
            row_error(line_no, "coordinates outside declared dimensions");
        if (s.start == s.goal && s.declared_length != 0.0)
            row_error(line_no, "start equals goal but declared length is nonzero");
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Scenario> parse_scen_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scen: cannot open '" + path + "'");
    return parse_scen(in);
}

void write_scen(std::ostream& out, const std::vector<Scenario>& scenarios) {
    out << "version 1\n";
    for (const auto& s : scenarios) {
        out << 0 << '\t' << s.map_name << '\t' << s.width << '\t' << s.height << '\t'
            << s.start.x << '\t' << s.start.y << '\t' << s.goal.x << '\t' << s.goal.y
            << '\t' << detail::shortest_double(s.declared_length) << '\n';
    }
}

void write_scen_file(const std::string& path, const std::vector<Scenario>& scenarios) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("scen: cannot open '" + path + "' for writing");
    write_scen(out, scenarios);
    if (!out) throw std::runtime_error("scen: write to '" + path + "' failed");
}

std::vector<Scenario> generate_empty_problems(int side, int per_length, int max_length,
                                              std::uint64_t seed) {
    if (side < 2) throw std::invalid_argument("generate_empty_problems: side too small");
    if (per_length < 1 || max_length < 1)
        throw std::invalid_argument("generate_empty_problems: counts must be positive");
    if (max_length > 2 * (side - 1))
        throw std::invalid_argument(
            "generate_empty_problems: max_length does not fit on the map");

    std::mt19937_64 rng(seed);
    std::vector<Scenario> out;
    out.reserve(static_cast<std::size_t>(per_length) * static_cast<std::size_t>(max_length));

    for (int length = 1; length <= max_length; ++length) {
        std::vector<std::pair<Coord, Coord>> distinct;
        // Rejection-sample distinct pairs at the exact distance; repeat
        // collected pairs once the sampler stops finding new ones.
        const int max_tries = 200 * per_length;
        int tries = 0;
        while (static_cast<int>(distinct.size()) < per_length && tries < max_tries) {
            ++tries;
            const Coord start{bounded(rng, side), bounded(rng, side)};
            const int adx = bounded(rng, length + 1);
            const int ady = length - adx;
            const int sx = bounded(rng, 2) == 0 ? 1 : -1;
            const int sy = bounded(rng, 2) == 0 ? 1 : -1;
            const Coord goal{start.x + sx * adx, start.y + sy * ady};
            if (goal.x < 0 || goal.x >= side || goal.y < 0 || goal.y >= side) continue;
            const auto pair = std::make_pair(start, goal);
            bool dup = false;
            for (const auto& p : distinct)
                if (p == pair) { dup = true; break; }
            if (!dup) distinct.push_back(pair);
        }
        if (distinct.empty())
            throw std::runtime_error("generate_empty_problems: no pair found for length " +
                                     std::to_string(length));
        for (int i = 0; i < per_length; ++i) {
            const auto& [start, goal] = distinct[static_cast<std::size_t>(i) % distinct.size()];
            out.push_back(Scenario{"empty.map", side, side, start, goal,
                                   static_cast<double>(length)});
        }
    }
    return out;
}

}  // namespace jps4
