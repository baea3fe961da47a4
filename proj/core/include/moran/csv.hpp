#pragma once

#include <string>
#include <vector>

#include "moran/measure.hpp"
#include "moran/rational.hpp"
#include "moran/spectra.hpp"

namespace moran {

/// Writes content to path atomically (temp file in the same directory,
/// then rename). Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

/// Doubles rendered with round-trip precision.
std::string format_double(double v);

/// "position_num,position_den,weight_num,weight_den" rows; exact integers.
std::string measure_to_csv(const DiscreteMeasure& m);

/// "num,den" rows of the realized set.
std::string spectrum_to_csv(const SpectrumCandidate& s);

/// Level structure as stable text (scales and frequency sets per level).
std::string spectrum_manifest(const SpectrumCandidate& s);

/// Reads a spectrum CSV produced by spectrum_to_csv (flat candidate).
SpectrumCandidate read_spectrum_csv(const std::string& path);

}  // namespace moran
