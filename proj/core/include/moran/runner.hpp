#pragma once

#include <iosfwd>

#include "moran/config.hpp"

namespace moran {

/// Executes a validated configuration, writing human-readable output to
/// `out` and any requested files atomically. Returns the process exit code:
/// decide maps its verdict to 0/1/3, guard violations return 1 with the
/// witness printed, I/O failures return 4, oracle failures return 1.
int run(const RunConfig& config, std::ostream& out);

}  // namespace moran
