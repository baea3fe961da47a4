#pragma once

#include <string>

#include "moran/spectrality.hpp"

namespace moran {

/// Renders a verdict as a stable, line-oriented report: status, deciding
/// rule, and whichever witness data the decision produced.
std::string format_verdict(const Verdict& v);

/// Exit code convention: 0 spectral, 1 not spectral, 3 unknown.
int exit_code(SpectralStatus status);

}  // namespace moran
