#pragma once

#include <string>
#include <vector>

#include "edgeorbit/enumerate.hpp"

namespace edgeorbit {

// One mask per line, lowercase hexadecimal without prefix, ascending,
// newline-terminated.
void write_representatives(const EnumerationResult& result, const std::string& path);

std::vector<EdgeMask> read_representatives(const std::string& path);

// Header "edges,count", then one row per nonzero popcount, ascending, LF.
void write_histogram_csv(const EnumerationResult& result, const std::string& path);

// Wavefront OBJ: one "v" line per solid vertex (floats, 9 decimal places)
// and one "l" line per selected edge (1-based vertex indices).
void write_wireframe(const Solid& solid, EdgeMask mask, const std::string& path);

}  // namespace edgeorbit
