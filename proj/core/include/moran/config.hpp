#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "moran/params.hpp"

namespace moran {

enum class Command { Decide, Transform, Measure, Spectrum, QCheck, Oracle };

enum class MeasureMode { Level, Convolution, Mu, Nu };

struct GridSpec {
    double t_min = -2.0;
    double t_max = 2.0;
    std::size_t count = 101;
};

/// A fully validated run description. Defaults: grid [-2, 2] x 101,
/// truncation 24, tolerance 1e-9.
struct RunConfig {
    RunConfig(ParamSeq p, Command c) : params(std::move(p)), command(c) {}

    ParamSeq params;
    Command command;
    GridSpec grid;
    int truncation = 24;
    double tolerance = 1e-9;
    std::string output_path;
    MeasureMode measure_mode = MeasureMode::Convolution;
    std::string spectrum_file;
    std::size_t level = 1;
    bool include_nu = false;
};

/// Parse failure with the offending line (0 when not line-specific).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses key = value text. Keys: b_prefix, b_period, p_prefix, p_period,
/// command, grid, truncation, tolerance, output_path, measure_mode,
/// spectrum_file, level, include_nu. Arrays use [a, b, c]; # starts a
/// comment. Unknown keys and violated parameter invariants are errors.
RunConfig parse_config(const std::string& text);

}  // namespace moran
