#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moran/config.hpp"
#include "moran/runner.hpp"

namespace {

std::string key_of(const std::string& line) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) return {};
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    const auto end = key.find_last_not_of(" \t");
    if (end == std::string::npos) return {};
    return key.substr(0, end + 1);
}

// Config file lines, with overridden keys dropped and overrides appended.
std::string merge_config(const std::string& file_text,
                         const std::map<std::string, std::string>& overrides) {
    std::ostringstream merged;
    std::stringstream ss(file_text);
    std::string line;
    while (std::getline(ss, line)) {
        const std::string key = key_of(line);
        if (!key.empty() && overrides.count(key)) continue;
        merged << line << "\n";
    }
    for (const auto& [key, value] : overrides) merged << key << " = " << value << "\n";
    return merged.str();
}

std::string as_array(const std::string& csv) { return "[" + csv + "]"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moran-type spectral measure toolkit"};
    app.get_formatter()->column_width(34);

    std::string config_path;
    app.add_option("config", config_path, "Config file (key = value lines)")
        ->check(CLI::ExistingFile);

    std::string command, b_prefix, b_period, p_prefix, p_period, grid, output_path,
        measure_mode, spectrum_file;
    long truncation = 0, level = 0;
    double tolerance = 0.0;
    bool include_nu = false;

    app.add_option("--command", command, "decide|transform|measure|spectrum|qcheck|oracle");
    app.add_option("--b-prefix", b_prefix, "comma-separated b prefix");
    app.add_option("--b-period", b_period, "comma-separated b period");
    app.add_option("--p-prefix", p_prefix, "comma-separated p prefix");
    app.add_option("--p-period", p_period, "comma-separated p period");
    app.add_option("--grid", grid, "t_min,t_max,count");
    auto* trunc_opt = app.add_option("--truncation", truncation, "product truncation level");
    auto* tol_opt = app.add_option("--tolerance", tolerance, "certified-bound target");
    app.add_option("--output", output_path, "output file path");
    app.add_option("--measure-mode", measure_mode, "level|convolution|mu|nu");
    app.add_option("--spectrum-file", spectrum_file, "spectrum CSV for qcheck");
    auto* level_opt = app.add_option("--level", level, "start level for measure");
    auto* nu_flag = app.add_flag("--include-nu", include_nu, "add nu columns to transform");

    CLI11_PARSE(app, argc, argv);

    std::string file_text;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read " << config_path << "\n";
            return 4;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        file_text = buf.str();
    }

    std::map<std::string, std::string> overrides;
    if (!command.empty()) overrides["command"] = command;
    if (!b_prefix.empty()) overrides["b_prefix"] = as_array(b_prefix);
    if (!b_period.empty()) overrides["b_period"] = as_array(b_period);
    if (!p_prefix.empty()) overrides["p_prefix"] = as_array(p_prefix);
    if (!p_period.empty()) overrides["p_period"] = as_array(p_period);
    if (!grid.empty()) overrides["grid"] = as_array(grid);
    if (trunc_opt->count()) overrides["truncation"] = std::to_string(truncation);
    if (tol_opt->count()) {
        std::ostringstream os;
        os << tolerance;
        overrides["tolerance"] = os.str();
    }
    if (!output_path.empty()) overrides["output_path"] = output_path;
    if (!measure_mode.empty()) overrides["measure_mode"] = measure_mode;
    if (!spectrum_file.empty()) overrides["spectrum_file"] = spectrum_file;
    if (level_opt->count()) overrides["level"] = std::to_string(level);
    if (nu_flag->count()) overrides["include_nu"] = include_nu ? "true" : "false";

    try {
        const moran::RunConfig cfg = moran::parse_config(merge_config(file_text, overrides));
        return moran::run(cfg, std::cout);
    } catch (const moran::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
