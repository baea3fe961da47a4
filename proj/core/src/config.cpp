#include "moran/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace moran {

namespace {

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

long parse_long(const std::string& s, std::size_t line) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError(line, "expected integer, got '" + s + "'");
    return value;
}

double parse_real(const std::string& s, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(line, "expected number, got '" + s + "'");
    }
}

std::vector<std::string> split_array(const std::string& s, std::size_t line) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ConfigError(line, "expected [a, b, ...], got '" + s + "'");
    std::vector<std::string> items;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    if (trim(body).empty()) items.clear();
    return items;
}

std::vector<long> parse_long_array(const std::string& s, std::size_t line) {
    std::vector<long> out;
    for (const auto& item : split_array(s, line)) out.push_back(parse_long(item, line));
    return out;
}

Command parse_command(const std::string& s, std::size_t line) {
    if (s == "decide") return Command::Decide;
    if (s == "transform") return Command::Transform;
    if (s == "measure") return Command::Measure;
    if (s == "spectrum") return Command::Spectrum;
    if (s == "qcheck") return Command::QCheck;
    if (s == "oracle") return Command::Oracle;
    throw ConfigError(line, "unknown command '" + s + "'");
}

MeasureMode parse_mode(const std::string& s, std::size_t line) {
    if (s == "level") return MeasureMode::Level;
    if (s == "convolution") return MeasureMode::Convolution;
    if (s == "mu") return MeasureMode::Mu;
    if (s == "nu") return MeasureMode::Nu;
    throw ConfigError(line, "unknown measure_mode '" + s + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::pair<std::string, std::size_t>> entries;
    {
        std::stringstream ss(text);
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(ss, raw)) {
            ++lineno;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            raw = trim(raw);
            if (raw.empty()) continue;
            const auto eq = raw.find('=');
            if (eq == std::string::npos)
                throw ConfigError(lineno, "expected key = value, got '" + raw + "'");
            const std::string key = trim(raw.substr(0, eq));
            const std::string value = trim(raw.substr(eq + 1));
            if (key.empty() || value.empty())
                throw ConfigError(lineno, "empty key or value");
            if (!entries.emplace(key, std::make_pair(value, lineno)).second)
                throw ConfigError(lineno, "duplicate key '" + key + "'");
        }
    }

    auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, std::size_t>> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        auto out = it->second;
        entries.erase(it);
        return out;
    };
    auto require = [&](const std::string& key) {
        auto v = take(key);
        if (!v) throw ConfigError(0, "missing required key '" + key + "'");
        return *v;
    };

    const auto command_entry = require("command");
    const Command command = parse_command(command_entry.first, command_entry.second);

    std::vector<long> b_prefix, p_prefix;
    if (auto v = take("b_prefix")) b_prefix = parse_long_array(v->first, v->second);
    if (auto v = take("p_prefix")) p_prefix = parse_long_array(v->first, v->second);
    const auto b_period_entry = require("b_period");
    const auto p_period_entry = require("p_period");
    std::vector<long> b_period = parse_long_array(b_period_entry.first, b_period_entry.second);
    std::vector<long> p_period = parse_long_array(p_period_entry.first, p_period_entry.second);
    if (b_period.empty()) throw ConfigError(b_period_entry.second, "b_period must be nonempty");
    if (p_period.empty()) throw ConfigError(p_period_entry.second, "p_period must be nonempty");

    std::optional<ParamSeq> params;
    try {
        params.emplace(std::move(b_prefix), std::move(b_period), std::move(p_prefix),
                       std::move(p_period));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(b_period_entry.second, e.what());
    }

    RunConfig cfg(std::move(*params), command);

    if (auto v = take("grid")) {
        const auto items = split_array(v->first, v->second);
        if (items.size() != 3)
            throw ConfigError(v->second, "grid must be [t_min, t_max, count]");
        cfg.grid.t_min = parse_real(items[0], v->second);
        cfg.grid.t_max = parse_real(items[1], v->second);
        const long count = parse_long(items[2], v->second);
        if (count < 1) throw ConfigError(v->second, "grid count must be >= 1");
        if (cfg.grid.t_max < cfg.grid.t_min)
            throw ConfigError(v->second, "grid t_max must be >= t_min");
        cfg.grid.count = static_cast<std::size_t>(count);
    }
    if (auto v = take("truncation")) {
        cfg.truncation = static_cast<int>(parse_long(v->first, v->second));
        if (cfg.truncation < 1) throw ConfigError(v->second, "truncation must be >= 1");
    }
    if (auto v = take("tolerance")) {
        cfg.tolerance = parse_real(v->first, v->second);
        if (!(cfg.tolerance > 0)) throw ConfigError(v->second, "tolerance must be positive");
    }
    if (auto v = take("output_path")) cfg.output_path = v->first;
    if (auto v = take("measure_mode")) cfg.measure_mode = parse_mode(v->first, v->second);
    if (auto v = take("spectrum_file")) cfg.spectrum_file = v->first;
    if (auto v = take("level")) {
        const long k = parse_long(v->first, v->second);
        if (k < 1) throw ConfigError(v->second, "level must be >= 1");
        cfg.level = static_cast<std::size_t>(k);
    }
    if (auto v = take("include_nu")) {
        if (v->first == "true") cfg.include_nu = true;
        else if (v->first == "false") cfg.include_nu = false;
        else throw ConfigError(v->second, "include_nu must be true or false");
    }

    if (!entries.empty()) {
        const auto& [key, value] = *entries.begin();
        throw ConfigError(value.second, "unknown key '" + key + "'");
    }

    if (command == Command::QCheck && cfg.spectrum_file.empty())
        throw ConfigError(0, "qcheck requires spectrum_file");
    const bool needs_output = command == Command::Transform || command == Command::Measure ||
                              command == Command::Spectrum || command == Command::QCheck;
    if (needs_output && cfg.output_path.empty())
        throw ConfigError(0, "command requires output_path");

    return cfg;
}

}  // namespace moran
