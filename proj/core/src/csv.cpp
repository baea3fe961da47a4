#include "moran/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace moran {

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("rename to " + target.string() + " failed: " + ec.message());
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string measure_to_csv(const DiscreteMeasure& m) {
    std::ostringstream os;
    os << "position_num,position_den,weight_num,weight_den\n";
    for (const auto& atom : m.atoms()) {
        os << atom.position.num() << "," << atom.position.den() << "," << atom.weight.num()
           << "," << atom.weight.den() << "\n";
    }
    return os.str();
}

std::string spectrum_to_csv(const SpectrumCandidate& s) {
    std::ostringstream os;
    os << "num,den\n";
    for (const auto& v : s.realized()) os << v.num() << "," << v.den() << "\n";
    return os.str();
}

std::string spectrum_manifest(const SpectrumCandidate& s) {
    std::ostringstream os;
    os << "levels: " << s.levels().size() << "\n";
    std::size_t idx = 0;
    for (const auto& lvl : s.levels()) {
        os << "level " << ++idx << ": scale=" << lvl.scale
           << " frequencies=" << lvl.frequencies << "\n";
    }
    os << "points: " << s.size() << "\n";
    return os.str();
}

SpectrumCandidate read_spectrum_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file " + path);
    std::string line;
    std::vector<Rational> values;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {  // header
            first = false;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed spectrum row: " + line);
        try {
            Integer num(line.substr(0, comma));
            Integer den(line.substr(comma + 1));
            values.emplace_back(num, den);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("malformed spectrum row: " + line);
        }
    }
    if (values.empty()) throw std::runtime_error("spectrum file " + path + " has no rows");
    return SpectrumCandidate::flat(std::move(values));
}

}  // namespace moran
