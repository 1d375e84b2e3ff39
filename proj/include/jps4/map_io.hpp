#pragma once

#include <iosfwd>
#include <string>

#include "jps4/grid_map.hpp"

namespace jps4 {

// Reads the MovingAI .map layout: a header of `type`, `height H`,
// `width W` lines followed by a literal `map` line and H rows of W
// terrain characters. `.` and `G` are passable; every other code (`@`,
// `O`, `T`, `S`, `W`, ...) is blocked. Throws std::runtime_error on
// missing header fields, dimension mismatches, or an empty body.
GridMap parse_map(std::istream& in);
GridMap parse_map_file(const std::string& path);

// Inverse writer: emits a header plus `.`/`@` rows. parse_map(write_map(m))
// reproduces the traversability matrix exactly.
void write_map(std::ostream& out, const GridMap& map);
void write_map_file(const std::string& path, const GridMap& map);

}  // namespace jps4
