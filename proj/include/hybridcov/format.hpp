#pragma once

#include <charconv>
#include <string>

namespace hybridcov {

/// Shortest round-trip decimal representation; locale independent.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace hybridcov
