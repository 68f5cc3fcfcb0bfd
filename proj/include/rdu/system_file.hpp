#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdu/polynomial.hpp"

namespace rdu {

// Format:
//   parameters: u1 u2      (optional)
//   variables: x1 x2       (ascending order)
//   <one polynomial per line>
// Blank lines and text after '#' are ignored.
struct SystemFile {
    ContextPtr ctx;
    std::vector<Polynomial> polys;
};

// Throws ParseError with line/column.
SystemFile parse_system(std::string_view text);
// Throws std::runtime_error when the file cannot be read.
SystemFile read_system_file(const std::string& path);

std::string format_system(const SystemFile& s);

}  // namespace rdu
