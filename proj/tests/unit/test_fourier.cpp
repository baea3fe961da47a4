#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "moran/convolution.hpp"
#include "moran/fourier.hpp"
#include "moran/moran_ifs.hpp"
#include "test_util.hpp"

using moran::BoundedValue;
using moran::DiscreteMeasure;
using moran::ParamSeq;
using moran::Rational;
using moran::empirical_cf;
using moran::mu_hat;
using moran::nu_hat;
using moran::phase_constant;
using moran::transform_factor;

namespace {

constexpr double kPi = std::numbers::pi;

// Product form of the factor, valid away from half-integers; independent
// route used purely as a test oracle.
double factored_factor(const ParamSeq& params, std::size_t k, double t) {
    const double pk = static_cast<double>(params.p(k));
    const double inv_b = 1.0 / static_cast<double>(params.b(k + 1));
    return std::sin(2.0 * pk * kPi * t) / (pk * std::sin(2.0 * kPi * t)) *
           std::cos((2.0 * pk - 1.0 - inv_b) * kPi * t);
}

bool near_half_integer(double t) {
    const double twice = 2.0 * t;
    return std::abs(twice - std::round(twice)) < 1e-3;
}

}  // namespace

TEST_CASE("transform factor basics") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> t_dist(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        CHECK(transform_factor(params, 1, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        const double t = t_dist(rng);
        CHECK(std::abs(transform_factor(params, 2, t)) <= 1.0 + 1e-12);
    }

    // single-term instance: p_k = 1 collapses to one cosine
    const ParamSeq bernoulli({}, {8}, {}, {1});
    for (double t : {0.1, 0.7, -1.3}) {
        CHECK(transform_factor(bernoulli, 1, t) ==
              doctest::Approx(std::cos((1.0 - 1.0 / 8.0) * kPi * t)).epsilon(1e-14));
    }

    const ParamSeq p2b8({}, {8}, {}, {2});
    const double t = 1.0 / 3.0;
    CHECK(transform_factor(p2b8, 1, t) ==
          doctest::Approx(std::sin(4.0 * kPi * t) / (2.0 * std::sin(2.0 * kPi * t)) *
                          std::cos((3.0 - 1.0 / 8.0) * kPi * t))
              .epsilon(1e-13));
}

TEST_CASE("summed and factored factor forms agree off half-integers") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> t_dist(-4.0, 4.0);
    std::uniform_int_distribution<std::size_t> k_dist(1, 6);
    for (int trial = 0; trial < 5000; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        const double t = t_dist(rng);
        if (near_half_integer(t)) continue;
        const std::size_t k = k_dist(rng);
        CHECK(std::abs(transform_factor(params, k, t) - factored_factor(params, k, t)) <
              1e-12);
    }
}

TEST_CASE("truncated transform of the Moran measure") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> t_dist(-8.0, 8.0);
    for (int trial = 0; trial < 40; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        const BoundedValue at_zero = mu_hat(params, 0.0, 8);
        CHECK(std::abs(at_zero.value - std::complex<double>(1, 0)) < 1e-15);
        CHECK(at_zero.error_bound == 0.0);

        const double t = t_dist(rng);
        const BoundedValue v = mu_hat(params, t, 12);
        CHECK(std::abs(v.value) <= 1.0 + v.error_bound + 1e-12);
        // raising the truncation never loosens the certified bound
        CHECK(mu_hat(params, t, 17).error_bound <= v.error_bound);
    }
}

TEST_CASE("truncated transform tracks the exact level measure") {
    const ParamSeq params({}, {4}, {}, {1});
    const int depth = 20;
    const DiscreteMeasure approx = level_measure(params, 1, depth);
    for (double t : {-1.0, -0.61803, -0.25, 0.0, 0.17, 0.5, 0.75, 0.99, 1.0}) {
        const BoundedValue v = mu_hat(params, t, depth);
        const std::complex<double> direct = empirical_cf(approx, t);
        const double position_slack =
            2.0 * kPi * std::abs(t) * std::pow(2.0, 3 - depth);
        CHECK(std::abs(v.value - direct) <= v.error_bound + position_slack + 1e-12);
    }
}

TEST_CASE("convolution transform and its modulus identity") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> t_dist(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        CHECK(std::abs(nu_hat(params, 0.0, 10).value - std::complex<double>(1, 0)) < 1e-15);

        const double t = t_dist(rng);
        const BoundedValue nu = nu_hat(params, t, 14);
        const BoundedValue mu = mu_hat(params, t / 2.0, 14);
        CHECK(std::abs(std::abs(nu.value) - std::abs(mu.value)) <=
              nu.error_bound + mu.error_bound + 1e-13);
    }
}

TEST_CASE("two computation paths for the convolution transform agree") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const ParamSeq params = testutil::random_params(rng, {.p_max = 2, .max_prefix = 2});
        const std::size_t levels = 6;
        const DiscreteMeasure conv =
            finite_convolution(moran::original_factors(params, levels), levels);
        std::uniform_real_distribution<double> t_dist(-2.0, 2.0);
        for (int i = 0; i < 10; ++i) {
            const double t = t_dist(rng);
            const BoundedValue nu = nu_hat(params, t, static_cast<int>(levels));
            CHECK(std::abs(nu.value - empirical_cf(conv, t)) < 1e-10);
        }
    }
}

TEST_CASE("transform identity through the phase constant") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        const int k = 16;
        const BoundedValue phase = phase_constant(params, k);
        for (int i = 0; i <= 40; ++i) {
            const double t = -2.0 + i * 0.1;
            const BoundedValue nu = nu_hat(params, t, k);
            const BoundedValue mu = mu_hat(params, t / 2.0, k);
            const double angle = kPi * phase.value.real() * t;
            const std::complex<double> rhs =
                mu.value * std::complex<double>(std::cos(angle), std::sin(angle));
            const double combined =
                nu.error_bound + mu.error_bound + kPi * std::abs(t) * phase.error_bound;
            CHECK(std::abs(nu.value - rhs) <= combined + 1e-12);
            // matched truncations make the identity exact up to rounding
            CHECK(std::abs(nu.value - rhs) < 1e-9);
        }
    }
}

TEST_CASE("phase constant partial sums") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        double prev = 0.0;
        for (int k = 1; k <= 12; ++k) {
            const BoundedValue v = phase_constant(params, k);
            CHECK(v.value.real() > prev);  // every summand is positive
            prev = v.value.real();
        }
        const BoundedValue coarse = phase_constant(params, 20);
        const BoundedValue fine = phase_constant(params, 40);
        CHECK(std::abs(fine.value.real() - coarse.value.real()) <= coarse.error_bound);
    }
}

TEST_CASE("characteristic function of discrete measures") {
    const DiscreteMeasure dirac = DiscreteMeasure::dirac(Rational(0));
    CHECK(std::abs(empirical_cf(dirac, 0.83) - std::complex<double>(1, 0)) < 1e-15);

    const DiscreteMeasure two = DiscreteMeasure::from_atoms(
        {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
    CHECK(std::abs(empirical_cf(two, 1.0)) < 1e-15);

    std::mt19937 rng(79);
    std::uniform_real_distribution<double> t_dist(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        const DiscreteMeasure m = level_measure(params, 1, 2);
        CHECK(std::abs(empirical_cf(m, t_dist(rng))) <= 1.0 + 1e-12);
    }
}
