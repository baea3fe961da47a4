#pragma once

#include <complex>

#include "moran/measure.hpp"
#include "moran/params.hpp"

namespace moran {

/// A computed complex value together with a certified absolute error bound
/// against the corresponding infinite-product limit. Raising the truncation
/// level never increases the bound for a fixed argument.
struct BoundedValue {
    std::complex<double> value;
    double error_bound = 0.0;
    int truncation_level = 0;

    /// A bound above 2 says nothing about a unimodular-factor product.
    bool vacuous() const { return error_bound > 2.0; }
};

/// The level-k product factor of the transform:
/// f_k(t) = (1/p_k) * sum_{j<p_k} cos((4j + 1 - 1/b_{k+1}) * pi * t).
/// f_k(0) = 1 and |f_k| <= 1.
double transform_factor(const ParamSeq& params, std::size_t k, double t);

/// Truncated transform of the Moran measure:
/// value = exp(-i*pi*t/b_1) * prod_{k<=K} f_k(t / (b_1...b_k)).
/// The omitted factors satisfy sum_{k>K} (1 - f_k) <= (8/3) * 4^{-K} * t^2,
/// giving the certified bound expm1 of that tail (factors lie in the unit
/// disc, so the product differs from its limit by at most e^S - 1).
BoundedValue mu_hat(const ParamSeq& params, double t, int truncation);

/// Truncated transform of the equivalent infinite convolution:
/// value = prod_{k<=K} m_k(t / (b_1...b_k)) where the level-k mask factors as
/// m_k(s) = f_k(s/2) * exp(i * (2p_k - (3 + 1/b_{k+1})/2) * pi * s).
/// The tail bound carries both the modulus part ((2/3) * 4^{-K} * t^2) and
/// the phase part (pi * |t| * 2^{1-K}) of the omitted factors.
BoundedValue nu_hat(const ParamSeq& params, double t, int truncation);

/// Partial sum of the phase constant linking the two transforms,
/// nu_hat(t) = mu_hat(t/2) * exp(i * pi * phase_constant * t):
/// value = (1/2)/b_1 + sum_{k<=K} (2p_k - (3 + 1/b_{k+1})/2) / (b_1...b_k),
/// with geometric tail bound 2^{1-K}. The value is real.
BoundedValue phase_constant(const ParamSeq& params, int truncation);

/// Characteristic function of a discrete measure: sum_j w_j exp(2*pi*i*t*x_j).
std::complex<double> empirical_cf(const DiscreteMeasure& m, double t);

}  // namespace moran
