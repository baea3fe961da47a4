#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "moran/convolution.hpp"
#include "moran/spectra.hpp"
#include "moran/spectrality.hpp"
#include "test_util.hpp"

using moran::DecisionRule;
using moran::DistinctnessResult;
using moran::Integer;
using moran::ParamSeq;
using moran::Rational;
using moran::SpectralStatus;
using moran::SpectrumCandidate;
using moran::Verdict;
using moran::bernoulli_distinct;
using moran::bernoulli_s_value;
using moran::decide;
using moran::decompose_spectrum;
using moran::divisibility_extraction;
using moran::even_b_necessity;

namespace {

ParamSeq random_bernoulli(std::mt19937& rng) {
    return testutil::random_params(rng, {.p_min = 1, .p_max = 1, .b_slack = 8});
}

}  // namespace

TEST_CASE("two-point 2-adic exponents match the worked example") {
    const ParamSeq params({8, 8, 7}, {8}, {}, {1});
    CHECK(bernoulli_s_value(params, 1).value == 6);
    CHECK(bernoulli_s_value(params, 2).value == 5);
    CHECK(bernoulli_s_value(params, 3).value == 9);
    CHECK(bernoulli_s_value(params, 4).value == 12);
    const ParamSeq even({}, {8}, {}, {2});
    CHECK_THROWS_AS(bernoulli_s_value(even, 1), std::invalid_argument);
}

TEST_CASE("distinctness of the exponent sequence") {
    CHECK(bernoulli_distinct(ParamSeq({8, 8, 7}, {8}, {}, {1})).distinct);
    CHECK(bernoulli_distinct(ParamSeq({}, {8}, {}, {1})).distinct);
    for (long b : {4, 6, 8, 10})
        CHECK(bernoulli_distinct(ParamSeq({}, {b}, {}, {1})).distinct);

    // all-odd period: the period sum of v2 is 0 and values recur verbatim
    const DistinctnessResult odd = bernoulli_distinct(ParamSeq({}, {3}, {}, {1}));
    CHECK_FALSE(odd.distinct);
    REQUIRE(odd.collision.has_value());
    CHECK(odd.collision->first == 1);
    CHECK(odd.collision->second == 2);

    // colliding progressions with positive period sum
    const DistinctnessResult two_slots = bernoulli_distinct(ParamSeq({}, {8, 2}, {}, {1}));
    CHECK_FALSE(two_slots.distinct);

    // prefix value landing on a later slot's progression: s_1 = s_5 = 4 here
    const DistinctnessResult prefix_hit =
        bernoulli_distinct(ParamSeq({4, 4, 4}, {17, 4}, {}, {1}));
    REQUIRE_FALSE(prefix_hit.distinct);
    REQUIRE(prefix_hit.collision.has_value());
    const auto [pi, pj] = *prefix_hit.collision;
    CHECK(bernoulli_s_value(ParamSeq({4, 4, 4}, {17, 4}, {}, {1}), pi).value ==
          bernoulli_s_value(ParamSeq({4, 4, 4}, {17, 4}, {}, {1}), pj).value);
}

TEST_CASE("any reported collision is a genuine equality") {
    std::mt19937 rng(107);
    int collisions = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const ParamSeq params = random_bernoulli(rng);
        const DistinctnessResult r = bernoulli_distinct(params);
        if (r.distinct) continue;
        ++collisions;
        REQUIRE(r.collision.has_value());
        const auto [i, j] = *r.collision;
        CHECK(i < j);
        CHECK(bernoulli_s_value(params, i).value == bernoulli_s_value(params, j).value);
    }
    CHECK(collisions > 0);
}

TEST_CASE("distinctness is exhaustive on a brute-force window") {
    // no false positives: when declared distinct, a deep direct scan agrees
    std::mt19937 rng(109);
    for (int trial = 0; trial < 120; ++trial) {
        const ParamSeq params = random_bernoulli(rng);
        if (!bernoulli_distinct(params).distinct) continue;
        std::set<long> seen;
        for (std::size_t k = 1; k <= 60; ++k)
            CHECK(seen.insert(bernoulli_s_value(params, k).value).second);
    }
}

TEST_CASE("even-denominator necessity filter") {
    CHECK(even_b_necessity(ParamSeq({}, {8}, {}, {2})).ok);
    const auto bad = even_b_necessity(ParamSeq({8, 7}, {8}, {}, {2}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness_k == 2);
    CHECK_THROWS_AS(even_b_necessity(ParamSeq({}, {8}, {}, {1})), std::invalid_argument);
}

TEST_CASE("decision procedure on the three regimes") {
    // two-point regime decided by exponent distinctness
    const Verdict bernoulli = decide(ParamSeq({8, 8, 7}, {8}, {}, {1}));
    CHECK(bernoulli.status == SpectralStatus::Spectral);
    CHECK(bernoulli.rule == DecisionRule::BernoulliTwoAdic);
    REQUIRE(bernoulli.s_values.size() >= 10);
    CHECK(bernoulli.s_values[0].value == 6);
    CHECK(bernoulli.s_values[1].value == 5);
    for (std::size_t k = 3; k <= 10; ++k)
        CHECK(bernoulli.s_values[k - 1].value == 3 * static_cast<long>(k));

    // all-even regime is a biconditional
    CHECK(decide(ParamSeq({}, {8}, {}, {2})).status == SpectralStatus::Spectral);
    const Verdict not_spectral = decide(ParamSeq({8, 8, 6}, {8}, {}, {2}));
    CHECK(not_spectral.status == SpectralStatus::NotSpectral);
    CHECK(not_spectral.rule == DecisionRule::EvenPBiconditional);
    REQUIRE(not_spectral.divisibility.has_value());
    CHECK(not_spectral.divisibility->k == 3);

    const Verdict odd_b = decide(ParamSeq({8, 7}, {8}, {}, {2}));
    CHECK(odd_b.status == SpectralStatus::NotSpectral);
    CHECK(odd_b.rule == DecisionRule::EvenBNecessity);

    // mixed regime: sufficiency or an honest unknown
    const Verdict unknown = decide(ParamSeq({}, {9}, {}, {3}));
    CHECK(unknown.status == SpectralStatus::Unknown);
    CHECK_FALSE(unknown.unmet.empty());
    const Verdict sufficient = decide(ParamSeq({}, {12}, {}, {3, 1}));
    CHECK(sufficient.status == SpectralStatus::Spectral);
    CHECK(sufficient.rule == DecisionRule::DivisibilitySufficiency);
}

TEST_CASE("decision is stable under unrolling the period") {
    std::mt19937 rng(113);
    for (int trial = 0; trial < 200; ++trial) {
        const ParamSeq params = testutil::random_params(rng);
        const Verdict base = decide(params);

        // unroll the period once into the prefix
        std::vector<long> bpre = params.b_prefix();
        std::vector<long> ppre = params.p_prefix();
        const std::size_t lead = std::max(bpre.size(), ppre.size());
        const std::size_t cycle =
            std::lcm(params.b_period().size(), params.p_period().size());
        bpre.clear();
        ppre.clear();
        for (std::size_t k = 1; k <= lead + cycle; ++k) {
            bpre.push_back(params.b(k));
            ppre.push_back(params.p(k));
        }
        std::vector<long> bper, pper;
        for (std::size_t k = lead + cycle + 1; k <= lead + 2 * cycle; ++k) {
            bper.push_back(params.b(k));
            pper.push_back(params.p(k));
        }
        const Verdict unrolled = decide(ParamSeq(bpre, bper, ppre, pper));
        CHECK(base.status == unrolled.status);
        CHECK(base.rule == unrolled.rule);
    }
}

TEST_CASE("sufficient conditions imply the biconditional conditions") {
    // whenever both regimes' guards can be compared, the stronger set wins
    std::mt19937 rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        const ParamSeq params = testutil::random_params(rng, {.p_min = 1, .p_max = 4});
        if (!params.all_p_even()) continue;
        bool sufficient = params.b(2) % 2 == 0 && (2 * params.b(2)) % params.n(2) == 0;
        for (std::size_t k = 3; k <= params.horizon() && sufficient; ++k)
            sufficient = params.b(k) % params.n(k) == 0;
        if (sufficient) CHECK(decide(params).status == SpectralStatus::Spectral);
    }
}

TEST_CASE("divisibility consequences for rational-ratio convolutions") {
    // hypothesis fires: gamma_1 = 4 does not divide t_2 = 23
    {
        const std::vector<Rational> d{Rational(8), Rational(2, 23), Rational(92)};
        const std::vector<long> gamma{4, 4, 4};
        const auto implications = divisibility_extraction(d, gamma);
        REQUIRE(!implications.empty());
        CHECK(implications[0].index == 1);
        CHECK(implications[0].clause == 1);
        CHECK(implications[0].divisor == 4);
        CHECK(implications[0].dividend == 2);
        CHECK_FALSE(implications[0].holds);
    }
    // hypothesis fails: gamma_1 divides t_2, nothing emitted at i = 1
    {
        const std::vector<Rational> d{Rational(8), Rational(3, 4)};
        const std::vector<long> gamma{4, 2};
        CHECK(divisibility_extraction(d, gamma).empty());
    }
    // second clause: d_3 integral, t_2 | l_3 forces t_2 gamma_3 | l_3
    {
        const std::vector<Rational> d{Rational(8), Rational(2, 23), Rational(69)};
        const std::vector<long> gamma{2, 2, 2};
        const auto implications = divisibility_extraction(d, gamma);
        REQUIRE(implications.size() == 2);
        CHECK(implications[0].clause == 1);
        CHECK(implications[0].holds);  // 2 | 2
        CHECK(implications[1].clause == 2);
        CHECK(implications[1].divisor == 46);
        CHECK(implications[1].dividend == 69);
        CHECK_FALSE(implications[1].holds);

        const std::vector<Rational> ok{Rational(8), Rational(2, 23), Rational(92)};
        const auto satisfied = divisibility_extraction(ok, gamma);
        REQUIRE(satisfied.size() == 2);
        CHECK(satisfied[1].holds);  // 46 | 92
    }
    CHECK_THROWS_AS(
        divisibility_extraction(std::vector<Rational>{Rational(4)}, std::vector<long>{1}),
        std::invalid_argument);
}

TEST_CASE("violated implications certify the negative verdicts") {
    // in the all-even regime with even b, the biconditional's failures are
    // visible as violated divisibility consequences of the rewritten ratios
    std::mt19937 rng(131);
    int negatives = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<long> mult(1, 4);
        std::vector<long> bper;
        std::vector<long> pper;
        std::uniform_int_distribution<std::size_t> len(1, 3);
        const std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) {
            pper.push_back(2);
            bper.push_back(2 * mult(rng) + 4);  // even, >= 6, sometimes not 4-divisible
        }
        const ParamSeq params({8, 8}, bper, {2, 2}, pper);
        const Verdict verdict = decide(params);

        const moran::RearrangedSeq seq = double_index(params, 2 * params.horizon());
        std::vector<Rational> ratios;
        std::vector<long> sizes;
        for (std::size_t j = 1; j <= seq.factors.size(); ++j) {
            ratios.push_back(seq.step_ratio(j));
            sizes.push_back(static_cast<long>(seq.factors[j - 1].digits.size()));
        }
        const auto implications = divisibility_extraction(ratios, sizes);
        const bool violated = std::any_of(implications.begin(), implications.end(),
                                          [](const auto& im) { return !im.holds; });
        if (verdict.status == SpectralStatus::NotSpectral) {
            ++negatives;
            CHECK(violated);
        } else {
            CHECK_FALSE(violated);
        }
    }
    CHECK(negatives > 0);
}

TEST_CASE("residue-class decomposition of a frequency set") {
    // one-element set decomposes into its zero class
    const SpectrumCandidate trivial = SpectrumCandidate::flat({Rational(0)});
    const std::vector<long> zeros(4, 0);
    const auto children =
        decompose_spectrum(trivial, Rational(2), 3, Integer(12), zeros);
    REQUIRE(children.size() == 1);
    CHECK(children[0].realized() == std::vector<Rational>{Rational(0)});

    // c = gamma_1 leaves a single residue class selected purely by j
    const SpectrumCandidate small =
        SpectrumCandidate::flat({Rational(0), Rational(1, 3), Rational(1)});
    const std::vector<long> pick1{1};
    const auto selected =
        decompose_spectrum(small, Rational(1), 3, Integer(3), pick1);
    REQUIRE(selected.size() == 1);
    CHECK(selected[0].realized() == std::vector<Rational>{Rational(1, 3)});

    // containment violations are rejected
    const SpectrumCandidate bad = SpectrumCandidate::flat({Rational(0), Rational(1, 3)});
    const std::vector<long> pick0{0, 0};
    CHECK_THROWS_AS(decompose_spectrum(bad, Rational(1), 1, Integer(2), pick0),
                    std::invalid_argument);
    // 0 must belong to the set
    const SpectrumCandidate no_zero = SpectrumCandidate::flat({Rational(1)});
    CHECK_THROWS_AS(decompose_spectrum(no_zero, Rational(1), 1, Integer(2), pick0),
                    std::invalid_argument);
}

TEST_CASE("decomposition splits a built spectrum into tail frequency sets") {
    const ParamSeq params({}, {8}, {}, {2});
    const SpectrumCandidate lambda = moran::build_spectrum(params, 3);
    const moran::RearrangedSeq dseq = double_index(params, 3);

    const Rational d1 = dseq.step_ratio(1);
    CHECK(d1 == Rational(8));
    const long gamma1 = static_cast<long>(dseq.factors[0].digits.size());
    CHECK(gamma1 == 2);

    // common multiple of all digit sizes and ratio denominators in the cycle
    Integer c(1);
    for (std::size_t j = 1; j <= dseq.factors.size(); ++j) {
        mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), dseq.step_ratio(j).den().get_mpz_t());
        Integer g(static_cast<long>(dseq.factors[j - 1].digits.size()));
        mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    CHECK(c == 46);

    const std::size_t q1 = static_cast<std::size_t>(mpz_class(c / gamma1).get_ui());
    std::set<Rational> all_children;
    std::size_t covered = 0;
    for (long j = 0; j < gamma1; ++j) {
        const std::vector<long> choices(q1, j);
        const auto children = decompose_spectrum(lambda, d1, gamma1, c, choices);
        for (const auto& child : children) {
            for (const auto& x : child.realized()) {
                CHECK(all_children.insert(x).second);  // disjointness
                ++covered;
            }
        }
        // every child is orthogonal for the scaled tail of the convolution
        std::vector<Rational> gamma_set;
        for (const auto& child : children)
            gamma_set.insert(gamma_set.end(), child.realized().begin(),
                             child.realized().end());
        const SpectrumCandidate gamma_candidate = SpectrumCandidate::flat(gamma_set);
        // orthogonality via the remaining factors, rescaled past the cut
        std::vector<moran::ConvolutionFactor> tail_factors;
        for (std::size_t j2 = 2; j2 <= 3; ++j2) {
            tail_factors.push_back({dseq.factors[j2 - 1].scale / dseq.factors[0].scale,
                                    dseq.factors[j2 - 1].digits, j2,
                                    moran::ConvolutionFactor::Kind::Consecutive});
        }
        CHECK(moran::bizero_check(gamma_candidate, tail_factors, 2).ok);
    }
    // reassembly: the union over all class choices is exactly Lambda / d1
    CHECK(covered == lambda.size());
    for (const auto& el : lambda.realized()) CHECK(all_children.count(el / d1) == 1);
}
