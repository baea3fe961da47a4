#include "moran/report.hpp"

#include <sstream>

namespace moran {

std::string format_verdict(const Verdict& v) {
    std::ostringstream os;
    os << "verdict: " << to_string(v.status) << "\n";
    os << "rule: " << to_string(v.rule) << "\n";
    if (!v.s_values.empty()) {
        os << "s-values:";
        for (const auto& s : v.s_values) os << " s_" << s.k << "=" << s.value;
        os << "\n";
    }
    if (v.s_collision)
        os << "collision: s_" << v.s_collision->first << " = s_" << v.s_collision->second
           << "\n";
    if (v.divisibility)
        os << "witness: " << v.divisibility->condition << "\n";
    for (const auto& u : v.unmet) os << "unmet: " << u << "\n";
    return os.str();
}

int exit_code(SpectralStatus status) {
    switch (status) {
        case SpectralStatus::Spectral: return 0;
        case SpectralStatus::NotSpectral: return 1;
        case SpectralStatus::Unknown: return 3;
    }
    return 3;
}

}  // namespace moran
