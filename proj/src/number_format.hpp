// Internal helper shared by the text writers.
#pragma once

#include <charconv>
#include <string>

namespace jps4::detail {

// Shortest decimal form that parses back to exactly the same double.
inline std::string shortest_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace jps4::detail
