#include "moran/convolution.hpp"

#include <stdexcept>
#include <string>

namespace moran {

namespace {

// The odd multiplier of the split-off pair at level k: b_{k+1} (2 p_k - 1) - 1.
long pair_multiplier(const ParamSeq& params, std::size_t k) {
    return params.b(k + 1) * (2 * params.p(k) - 1) - 1;
}

ConvolutionFactor consecutive_factor(const ParamSeq& params, std::size_t k,
                                     const Rational& scale) {
    return {scale, DigitSet::consecutive(static_cast<std::size_t>(params.p(k))), k,
            ConvolutionFactor::Kind::Consecutive};
}

ConvolutionFactor pair_factor(const ParamSeq& params, std::size_t k, const Rational& scale) {
    return {scale, DigitSet::consecutive(2).scaled(Rational(pair_multiplier(params, k))), k,
            ConvolutionFactor::Kind::ScaledPair};
}

// Checks the emitted sequence against the per-case relabeling rules.
void verify_relabeling(const ParamSeq& params, std::size_t levels, const RearrangedSeq& seq) {
    auto expect = [](bool ok, const std::string& what) {
        if (!ok) throw std::logic_error("rearrange: relabeling mismatch at " + what);
    };

    for (const auto& f : seq.factors)
        expect(f.digits.size() >= 2, "digit cardinality");

    const long p1 = params.p(1), p2 = params.p(2);
    const Rational b1(params.b(1)), b2(params.b(2));
    if (p1 == 1 && p2 == 1) {
        expect(seq.step_ratio(1) == Rational(2) * b1 * b2, "case first-levels");
    } else if (p1 == 1) {
        expect(seq.step_ratio(1) == b1 * b2, "case first-levels");
        expect(seq.step_ratio(2) == Rational(2), "case first-levels");
    } else if (p2 == 1) {
        expect(seq.step_ratio(1) == b1, "case first-levels");
        expect(seq.step_ratio(2) == Rational(2) * b2, "case first-levels");
    } else {
        expect(seq.step_ratio(1) == b1, "case first-levels");
        expect(seq.step_ratio(2) == b2, "case first-levels");
        expect(seq.step_ratio(3) == Rational(2), "case first-levels");
    }

    for (std::size_t k = 3; k <= levels; ++k) {
        const std::size_t mk = seq.m_index.at(k);
        if (params.p(k) != 1) {
            expect(seq.step_ratio(mk) == Rational(params.b(k), 2), "level " + std::to_string(k));
            expect(seq.factors[mk - 1].kind == ConvolutionFactor::Kind::Consecutive &&
                       seq.factors[mk - 1].level == k,
                   "level " + std::to_string(k));
            expect(seq.step_ratio(mk + 1) == Rational(2), "level " + std::to_string(k));
            expect(seq.factors[mk].kind == ConvolutionFactor::Kind::ScaledPair &&
                       seq.factors[mk].level == k - 1,
                   "level " + std::to_string(k));
        } else {
            expect(seq.step_ratio(mk) == Rational(params.b(k)), "level " + std::to_string(k));
            expect(seq.factors[mk - 1].kind == ConvolutionFactor::Kind::ScaledPair &&
                       seq.factors[mk - 1].level == k - 1,
                   "level " + std::to_string(k));
        }
    }
}

}  // namespace

Rational RearrangedSeq::step_ratio(std::size_t j) const {
    if (j < 1 || j > factors.size())
        throw std::invalid_argument("RearrangedSeq: factor index out of range");
    const Rational prev = (j == 1) ? Rational(1) : factors[j - 2].scale;
    return prev / factors[j - 1].scale;
}

DigitSet convolution_digits(const ParamSeq& params, std::size_t k) {
    const long pk = params.p(k);
    const Rational offset =
        Rational(pk) - (Rational(1) + Rational(1, params.b(k + 1))) / Rational(2);
    const DigitSet base = DigitSet::consecutive(static_cast<std::size_t>(pk));
    const DigitSet pair = DigitSet::consecutive(2).scaled(offset);
    // The offset has an even denominator, so the sum never collides.
    DigitSet out = base.direct_sum(pair);
    if (out.size() != static_cast<std::size_t>(2 * pk))
        throw std::logic_error("convolution_digits: collision in direct sum");
    return out;
}

DigitSet bernoulli_digits(const ParamSeq& params, std::size_t k) {
    if (!params.all_p_one())
        throw std::invalid_argument("bernoulli_digits: requires p == 1 at every level");
    return convolution_digits(params, k).scaled(Rational(2 * params.b(k + 1)));
}

std::vector<ConvolutionFactor> original_factors(const ParamSeq& params, std::size_t levels) {
    std::vector<ConvolutionFactor> out;
    out.reserve(levels);
    Rational scale(1);
    for (std::size_t k = 1; k <= levels; ++k) {
        scale /= Rational(params.b(k));
        out.push_back({scale, convolution_digits(params, k), k,
                       ConvolutionFactor::Kind::Consecutive});
    }
    return out;
}

RearrangedSeq rearrange(const ParamSeq& params, std::size_t levels) {
    if (levels < 2) throw std::invalid_argument("rearrange: need at least two levels");

    RearrangedSeq seq;
    const Rational half(1, 2);

    // Levels 1 and 2 first, then the alternating pattern: the level-k
    // consecutive block, followed by the pair split off level k-1. The pair of
    // level k sits at cumulative scale (2 b_1 ... b_{k+1})^{-1}.
    Rational prod = Rational(1) / Rational(params.b(1));
    if (params.p(1) != 1) seq.factors.push_back(consecutive_factor(params, 1, prod));
    prod /= Rational(params.b(2));
    if (params.p(2) != 1) seq.factors.push_back(consecutive_factor(params, 2, prod));
    seq.factors.push_back(pair_factor(params, 1, prod * half));
    for (std::size_t k = 3; k <= levels; ++k) {
        prod /= Rational(params.b(k));
        if (params.p(k) != 1) seq.factors.push_back(consecutive_factor(params, k, prod));
        seq.factors.push_back(pair_factor(params, k - 1, prod * half));
    }
    prod /= Rational(params.b(levels + 1));
    seq.factors.push_back(pair_factor(params, levels, prod * half));

    std::size_t ones_before = (params.p(1) == 1 ? 1 : 0) + (params.p(2) == 1 ? 1 : 0);
    for (std::size_t k = 3; k <= levels; ++k) {
        seq.m_index[k] = 2 * k - 2 - ones_before;
        if (params.p(k) == 1) ++ones_before;
    }

    verify_relabeling(params, levels, seq);
    return seq;
}

RearrangedSeq double_index(const ParamSeq& params, std::size_t count) {
    RearrangedSeq seq;
    seq.factors.reserve(count);
    Rational prod(1);
    for (std::size_t i = 1; i <= count; ++i) {
        Rational ratio;
        std::size_t psize;
        std::size_t level;
        if (i == 1 || i == 2) {
            ratio = Rational(params.b(i));
            psize = static_cast<std::size_t>(params.p(i));
            level = i;
        } else if (i % 2 == 1) {
            const std::size_t k = (i - 1) / 2;
            ratio = Rational(2, pair_multiplier(params, k));
            psize = 2;
            level = k;
        } else {
            const std::size_t k = (i - 2) / 2;
            ratio = Rational(params.b(k + 2) * pair_multiplier(params, k), 2);
            psize = static_cast<std::size_t>(params.p(k + 2));
            level = k + 2;
        }
        prod /= ratio;
        seq.factors.push_back({prod, DigitSet::consecutive(psize), level,
                               ConvolutionFactor::Kind::Consecutive});
    }
    return seq;
}

DiscreteMeasure finite_convolution(std::span<const ConvolutionFactor> factors, std::size_t K) {
    if (K > factors.size())
        throw std::invalid_argument("finite_convolution: K exceeds factor count");
    DiscreteMeasure result = DiscreteMeasure::dirac(Rational(0));
    for (std::size_t j = 0; j < K; ++j)
        result = result.convolve(DiscreteMeasure::uniform(factors[j].digits, factors[j].scale));
    return result;
}

DiscreteMeasure finite_convolution(const RearrangedSeq& seq, std::size_t K) {
    return finite_convolution(std::span<const ConvolutionFactor>(seq.factors), K);
}

DiscreteMeasure scaled_tail(const RearrangedSeq& seq, std::size_t cut, std::size_t extra) {
    if (extra < 1) throw std::invalid_argument("scaled_tail: need at least one factor");
    if (cut + extra > seq.factors.size())
        throw std::invalid_argument("scaled_tail: not enough factors beyond the cut");
    const Rational head = (cut == 0) ? Rational(1) : seq.factors[cut - 1].scale;
    DiscreteMeasure result = DiscreteMeasure::dirac(Rational(0));
    for (std::size_t j = cut; j < cut + extra; ++j) {
        result = result.convolve(
            DiscreteMeasure::uniform(seq.factors[j].digits, seq.factors[j].scale / head));
    }
    return result;
}

}  // namespace moran
