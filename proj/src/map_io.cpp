#include "jps4/map_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jps4 {
namespace {

std::string next_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("map: unexpected end of input in header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

// Parses `key value`, insisting on the expected key.
long header_number(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k;
    long value = 0;
    if (!(ss >> k >> value) || k != key)
        throw std::runtime_error("map: expected header field '" + key + "', got '" +
                                 line + "'");
    return value;
}

}  // namespace

GridMap parse_map(std::istream& in) {
    const std::string type_line = next_line(in);
    if (type_line.rfind("type", 0) != 0)
        throw std::runtime_error("map: missing 'type' header field");

    // height and width may appear in either order.
    long height = -1, width = -1;
    for (int i = 0; i < 2; ++i) {
        const std::string line = next_line(in);
        if (line.rfind("height", 0) == 0)
            height = header_number(line, "height");
        else if (line.rfind("width", 0) == 0)
            width = header_number(line, "width");
        else
            throw std::runtime_error("map: expected 'height' or 'width', got '" + line +
                                     "'");
    }
    if (height < 1 || width < 1)
        throw std::runtime_error("map: dimensions must be positive");

    if (next_line(in) != "map")
        throw std::runtime_error("map: missing 'map' separator line");

    GridMap map(static_cast<int>(width), static_cast<int>(height), false);
    for (long y = 0; y < height; ++y) {
        std::string row;
        if (!std::getline(in, row))
            throw std::runtime_error("map: body has " + std::to_string(y) +
                                     " rows, header declares " + std::to_string(height));
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (static_cast<long>(row.size()) != width)
            throw std::runtime_error("map: row " + std::to_string(y) + " has " +
                                     std::to_string(row.size()) +
                                     " cells, header declares " + std::to_string(width));
        for (long x = 0; x < width; ++x) {
            const char c = row[static_cast<std::size_t>(x)];
            if (c == '.' || c == 'G')
                map.set_passable({static_cast<int>(x), static_cast<int>(y)}, true);
        }
    }
    return map;
}

GridMap parse_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("map: cannot open '" + path + "'");
    return parse_map(in);
}

void write_map(std::ostream& out, const GridMap& map) {
    out << "type octile\n";
    out << "height " << map.height() << '\n';
    out << "width " << map.width() << '\n';
    out << "map\n";
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x)
            out << (map.passable({x, y}) ? '.' : '@');
        out << '\n';
    }
}

void write_map_file(const std::string& path, const GridMap& map) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("map: cannot open '" + path + "' for writing");
    write_map(out, map);
    if (!out) throw std::runtime_error("map: write to '" + path + "' failed");
}

}  // namespace jps4
