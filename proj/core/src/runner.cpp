#include "moran/runner.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "moran/convolution.hpp"
#include "moran/csv.hpp"
#include "moran/fourier.hpp"
#include "moran/moran_ifs.hpp"
#include "moran/report.hpp"
#include "moran/spectra.hpp"
#include "moran/spectrality.hpp"

namespace moran {

namespace {

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> pts;
    pts.reserve(g.count);
    if (g.count == 1) {
        pts.push_back(g.t_min);
        return pts;
    }
    const double step = (g.t_max - g.t_min) / static_cast<double>(g.count - 1);
    for (std::size_t i = 0; i < g.count; ++i)
        pts.push_back(g.t_min + step * static_cast<double>(i));
    return pts;
}

double mu_tail_bound(double t, int k) {
    return std::expm1((8.0 / 3.0) * std::pow(4.0, -k) * t * t);
}

double nu_tail_bound(double t, int k) {
    return std::expm1((2.0 / 3.0) * std::pow(4.0, -k) * t * t +
                      std::numbers::pi * std::abs(t) * std::pow(2.0, 1 - k));
}

// Raises the truncation until the certified bound at the grid's largest |t|
// clears the requested tolerance (the proven tail decays geometrically, so
// a bounded search suffices).
int effective_truncation(const RunConfig& cfg) {
    const double tmax = std::max(std::abs(cfg.grid.t_min), std::abs(cfg.grid.t_max));
    int k = cfg.truncation;
    for (; k < cfg.truncation + 64; ++k) {
        const double bound = cfg.include_nu
                                 ? std::max(mu_tail_bound(tmax, k), nu_tail_bound(tmax, k))
                                 : mu_tail_bound(tmax, k);
        if (bound <= cfg.tolerance) break;
    }
    return k;
}

// The K-factor truncation of the relabeled convolution; aligns with the K
// used by spectrum construction, so (spectrum(K), convolution(K)) is an
// exact spectral pair.
DiscreteMeasure relabeled_convolution(const ParamSeq& params, std::size_t K) {
    const RearrangedSeq seq = rearrange(params, std::max<std::size_t>(K, 2));
    return finite_convolution(seq, K);
}

// Convolution truncation capped so the exact atom count stays workable.
std::size_t capped_convolution_levels(const ParamSeq& params, std::size_t want,
                                      unsigned long atom_budget) {
    std::size_t levels = 0;
    unsigned long atoms = 1;
    while (levels < want) {
        atoms *= static_cast<unsigned long>(params.n(levels + 1));
        if (atoms > atom_budget) break;
        ++levels;
    }
    return std::max<std::size_t>(levels, 1);
}

int run_decide(const RunConfig& cfg, std::ostream& out) {
    const Verdict v = decide(cfg.params);
    const std::string report = format_verdict(v);
    out << report;
    if (!cfg.output_path.empty()) write_file_atomic(cfg.output_path, report);
    return exit_code(v.status);
}

int run_transform(const RunConfig& cfg, std::ostream& out) {
    const int k = effective_truncation(cfg);
    std::ostringstream csv;
    csv << "t,mu_re,mu_im,mu_bound";
    if (cfg.include_nu) csv << ",nu_re,nu_im,nu_bound";
    csv << "\n";
    for (double t : grid_points(cfg.grid)) {
        const BoundedValue mu = mu_hat(cfg.params, t, k);
        csv << format_double(t) << "," << format_double(mu.value.real()) << ","
            << format_double(mu.value.imag()) << "," << format_double(mu.error_bound);
        if (cfg.include_nu) {
            const BoundedValue nu = nu_hat(cfg.params, t, k);
            csv << "," << format_double(nu.value.real()) << ","
                << format_double(nu.value.imag()) << "," << format_double(nu.error_bound);
        }
        csv << "\n";
    }
    write_file_atomic(cfg.output_path, csv.str());
    out << "transform: " << cfg.grid.count << " points, truncation " << k << " -> "
        << cfg.output_path << "\n";
    return 0;
}

int run_measure(const RunConfig& cfg, std::ostream& out) {
    const std::size_t depth = static_cast<std::size_t>(cfg.truncation);
    DiscreteMeasure m = DiscreteMeasure::dirac(Rational(0));
    switch (cfg.measure_mode) {
        case MeasureMode::Level:
            m = level_measure(cfg.params, cfg.level, depth);
            break;
        case MeasureMode::Convolution:
            m = relabeled_convolution(cfg.params, depth);
            break;
        default:
            out << "measure: measure_mode must be level or convolution\n";
            return 2;
    }
    write_file_atomic(cfg.output_path, measure_to_csv(m));
    out << "measure: " << m.size() << " atoms -> " << cfg.output_path << "\n";
    return 0;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
    const SpectrumCandidate s =
        build_spectrum(cfg.params, static_cast<std::size_t>(cfg.truncation));
    write_file_atomic(cfg.output_path, spectrum_to_csv(s));
    write_file_atomic(cfg.output_path + ".manifest", spectrum_manifest(s));
    out << "spectrum: " << s.size() << " frequencies -> " << cfg.output_path << "\n";
    return 0;
}

int run_qcheck(const RunConfig& cfg, std::ostream& out) {
    const SpectrumCandidate cand = read_spectrum_csv(cfg.spectrum_file);
    const std::size_t depth = static_cast<std::size_t>(cfg.truncation);

    std::ostringstream csv;
    csv << "t,q,lower,upper\n";
    auto emit_exact = [&](const DiscreteMeasure& m) {
        for (double t : grid_points(cfg.grid)) {
            const double q = q_function(cand, m, t);
            csv << format_double(t) << "," << format_double(q) << "," << format_double(q)
                << "," << format_double(q) << "\n";
        }
    };
    switch (cfg.measure_mode) {
        case MeasureMode::Level:
            emit_exact(level_measure(cfg.params, cfg.level, depth));
            break;
        case MeasureMode::Convolution:
            emit_exact(relabeled_convolution(cfg.params, depth));
            break;
        case MeasureMode::Mu:
        case MeasureMode::Nu: {
            const bool use_mu = cfg.measure_mode == MeasureMode::Mu;
            auto transform = [&](double x) {
                return use_mu ? mu_hat(cfg.params, x, cfg.truncation)
                              : nu_hat(cfg.params, x, cfg.truncation);
            };
            for (double t : grid_points(cfg.grid)) {
                const QValue q = q_function(cand, transform, t);
                csv << format_double(t) << "," << format_double(q.value) << ","
                    << format_double(q.lower) << "," << format_double(q.upper) << "\n";
            }
            break;
        }
    }
    write_file_atomic(cfg.output_path, csv.str());
    out << "qcheck: " << cand.size() << " frequencies over " << cfg.grid.count
        << " points -> " << cfg.output_path << "\n";
    return 0;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out << (ok ? "[pass] " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) out << ": " << detail;
        out << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        std::string diff;
        for (std::size_t depth = 1; depth <= 3 && ok; ++depth)
            ok = refinement_check(cfg.params, 1, depth, &diff);
        if (ok) ok = refinement_check(cfg.params, 2, 2, &diff);
        record("refinement identity", ok, diff);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t levels = 2; levels <= 4 && ok; ++levels) {
            const auto original = original_factors(cfg.params, levels);
            const auto relabeled = rearrange(cfg.params, levels);
            const DiscreteMeasure a = finite_convolution(original, levels);
            const DiscreteMeasure b = finite_convolution(relabeled, relabeled.factors.size());
            ok = (a == b);
            if (!ok) detail = "mismatch at " + std::to_string(levels) + " levels";
        }
        record("relabeled convolution", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        const int k = std::max(cfg.truncation, 8);
        const BoundedValue phase = phase_constant(cfg.params, k);
        for (double t : grid_points({cfg.grid.t_min, cfg.grid.t_max, 21})) {
            const BoundedValue nu = nu_hat(cfg.params, t, k);
            const BoundedValue mu = mu_hat(cfg.params, t / 2.0, k);
            const double angle = std::numbers::pi * phase.value.real() * t;
            const std::complex<double> rhs =
                mu.value * std::complex<double>(std::cos(angle), std::sin(angle));
            const double combined = nu.error_bound + mu.error_bound +
                                    std::numbers::pi * std::abs(t) * phase.error_bound;
            if (std::abs(nu.value - rhs) > combined + cfg.tolerance) {
                ok = false;
                detail = "t = " + format_double(t);
                break;
            }
        }
        record("transform identity", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        const std::size_t levels = capped_convolution_levels(
            cfg.params, std::min<std::size_t>(static_cast<std::size_t>(cfg.truncation), 12),
            1u << 16);
        const DiscreteMeasure m =
            finite_convolution(original_factors(cfg.params, levels), levels);
        for (double t : grid_points({cfg.grid.t_min, cfg.grid.t_max, 21})) {
            const BoundedValue nu = nu_hat(cfg.params, t, static_cast<int>(levels));
            const std::complex<double> direct = empirical_cf(m, t);
            if (std::abs(nu.value - direct) > std::max(cfg.tolerance, 1e-10)) {
                ok = false;
                detail = "t = " + format_double(t);
                break;
            }
        }
        record("two-path transform", ok, detail);
    }

    return all_ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
    try {
        switch (config.command) {
            case Command::Decide: return run_decide(config, out);
            case Command::Transform: return run_transform(config, out);
            case Command::Measure: return run_measure(config, out);
            case Command::Spectrum: return run_spectrum(config, out);
            case Command::QCheck: return run_qcheck(config, out);
            case Command::Oracle: return run_oracle(config, out);
        }
        return 2;
    } catch (const DivisibilityError& e) {
        out << "guard violation: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        out << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace moran
