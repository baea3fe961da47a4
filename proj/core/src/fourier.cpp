#include "moran/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moran {

namespace {

constexpr double kPi = std::numbers::pi;

void require_truncation(int truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
}

}  // namespace

double transform_factor(const ParamSeq& params, std::size_t k, double t) {
    if (k < 1) throw std::invalid_argument("transform_factor: k must be >= 1");
    const long pk = params.p(k);
    const double inv_b_next = 1.0 / static_cast<double>(params.b(k + 1));
    double acc = 0.0;
    for (long j = 0; j < pk; ++j)
        acc += std::cos((4.0 * j + 1.0 - inv_b_next) * kPi * t);
    return acc / static_cast<double>(pk);
}

BoundedValue mu_hat(const ParamSeq& params, double t, int truncation) {
    require_truncation(truncation);
    double product = 1.0;
    double scale = 1.0;
    for (int k = 1; k <= truncation; ++k) {
        scale /= static_cast<double>(params.b(k));
        product *= transform_factor(params, k, scale * t);
    }
    const double phase = -kPi * t / static_cast<double>(params.b(1));
    const std::complex<double> value =
        product * std::complex<double>(std::cos(phase), std::sin(phase));

    const double tail = (8.0 / 3.0) * std::pow(4.0, -truncation) * t * t;
    return BoundedValue{value, std::expm1(tail), truncation};
}

BoundedValue nu_hat(const ParamSeq& params, double t, int truncation) {
    require_truncation(truncation);
    double modulus = 1.0;
    double phase = 0.0;
    double scale = 1.0;
    for (int k = 1; k <= truncation; ++k) {
        scale /= static_cast<double>(params.b(k));
        const double s = scale * t;
        const double pk = static_cast<double>(params.p(k));
        const double inv_b_next = 1.0 / static_cast<double>(params.b(k + 1));
        modulus *= transform_factor(params, k, s / 2.0);
        phase += (2.0 * pk - (3.0 + inv_b_next) / 2.0) * kPi * s;
    }
    const std::complex<double> value =
        modulus * std::complex<double>(std::cos(phase), std::sin(phase));

    // Omitted factor k differs from 1 by at most (1 - f_k(s/2)) + |theta_k|.
    const double tail = (2.0 / 3.0) * std::pow(4.0, -truncation) * t * t +
                        kPi * std::abs(t) * std::pow(2.0, 1 - truncation);
    return BoundedValue{value, std::expm1(tail), truncation};
}

BoundedValue phase_constant(const ParamSeq& params, int truncation) {
    require_truncation(truncation);
    double sum = 0.5 / static_cast<double>(params.b(1));
    double scale = 1.0;
    for (int k = 1; k <= truncation; ++k) {
        scale /= static_cast<double>(params.b(k));
        const double pk = static_cast<double>(params.p(k));
        const double inv_b_next = 1.0 / static_cast<double>(params.b(k + 1));
        sum += (2.0 * pk - (3.0 + inv_b_next) / 2.0) * scale;
    }
    // Summand k is below 2 p_k / (b_1...b_k) <= 2^{1-k}.
    return BoundedValue{{sum, 0.0}, std::pow(2.0, 1 - truncation), truncation};
}

std::complex<double> empirical_cf(const DiscreteMeasure& m, double t) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& atom : m.atoms()) {
        const double phase = 2.0 * kPi * t * atom.position.to_double();
        acc += atom.weight.to_double() *
               std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

}  // namespace moran
