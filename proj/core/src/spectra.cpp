#include "moran/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moran {

bool is_hadamard(const HadamardTriple& t) {
    if (abs(t.modulus) <= 1) throw std::invalid_argument("is_hadamard: |R| must exceed 1");
    if (t.base.size() != t.frequencies.size() || t.base.size() < 2)
        throw std::invalid_argument("is_hadamard: need #B = #L >= 2");
    if (!t.base.is_integral() || !t.frequencies.is_integral())
        throw std::invalid_argument("is_hadamard: B and L must be integer sets");

    const auto& freqs = t.frequencies;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        for (std::size_t j = i + 1; j < freqs.size(); ++j) {
            const Rational arg = (freqs[j] - freqs[i]) / Rational(t.modulus);
            if (!mask_zero_exact(t.base, arg)) return false;
        }
    }
    return true;
}

HadamardTriple compose_triples(std::span<const HadamardTriple> triples) {
    if (triples.empty()) throw std::invalid_argument("compose_triples: empty input");
    for (const auto& t : triples)
        if (!is_hadamard(t)) throw std::invalid_argument("compose_triples: input not Hadamard");

    Integer modulus(1);
    for (const auto& t : triples) modulus *= t.modulus;

    // B = (R_2...R_n) B_1 + (R_3...R_n) B_2 + ... + B_n,
    // L = L_1 + R_1 L_2 + ... + (R_1...R_{n-1}) L_n.
    Integer suffix = modulus / triples.front().modulus;
    DigitSet base = suffix == 1 ? triples.front().base
                                : triples.front().base.scaled(Rational(suffix));
    for (std::size_t j = 1; j < triples.size(); ++j) {
        suffix /= triples[j].modulus;
        base = base.direct_sum(suffix == 1 ? triples[j].base
                                           : triples[j].base.scaled(Rational(suffix)));
    }

    DigitSet freqs = triples.front().frequencies;
    Integer prefix(1);
    for (std::size_t j = 1; j < triples.size(); ++j) {
        prefix *= triples[j - 1].modulus;
        freqs = freqs.direct_sum(triples[j].frequencies.scaled(Rational(prefix)));
    }

    return HadamardTriple{modulus, std::move(base), std::move(freqs)};
}

SpectrumCandidate SpectrumCandidate::from_levels(std::vector<Level> levels) {
    SpectrumCandidate c;
    DigitSet acc = DigitSet::consecutive(1);  // {0}
    for (const auto& lvl : levels) acc = acc.direct_sum(lvl.frequencies.scaled(lvl.scale));
    c.levels_ = std::move(levels);
    c.realized_ = acc.elements();
    return c;
}

SpectrumCandidate SpectrumCandidate::flat(std::vector<Rational> values) {
    SpectrumCandidate c;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) throw std::invalid_argument("SpectrumCandidate: empty set");
    c.realized_ = std::move(values);
    return c;
}

SpectrumCandidate SpectrumCandidate::truncated(std::size_t n) const {
    if (n > levels_.size())
        throw std::invalid_argument("SpectrumCandidate: truncation beyond recorded levels");
    return from_levels({levels_.begin(), levels_.begin() + static_cast<long>(n)});
}

std::vector<HadamardTriple> hadamard_triples(const ParamSeq& params, std::size_t count) {
    // `count` relabeled factors never need more than max(count, 2) levels.
    const RearrangedSeq seq = rearrange(params, std::max<std::size_t>(count, 2));
    if (count > seq.factors.size())
        throw std::invalid_argument("hadamard_triples: count exceeds available factors");

    std::vector<HadamardTriple> out;
    out.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        const ConvolutionFactor& f = seq.factors[j - 1];
        const Rational ratio = seq.step_ratio(j);
        const std::size_t level = f.level;
        if (!ratio.is_integer()) {
            // Only a consecutive block at level >= 3 can produce b_k / 2.
            throw DivisibilityError(level, "2*p | b requires an even b, got b_" +
                                               std::to_string(level) + " = " +
                                               std::to_string(params.b(level)));
        }
        const Integer r = ratio.num();
        if (f.kind == ConvolutionFactor::Kind::Consecutive) {
            const Integer p(static_cast<long>(f.digits.size()));
            if (r % p != 0) {
                const std::string cond =
                    (level <= 2)
                        ? ("p_" + std::to_string(level) + " | b_" + std::to_string(level))
                        : ("2*p_" + std::to_string(level) + " | b_" + std::to_string(level));
                throw DivisibilityError(level, cond + " fails (p = " +
                                                   std::to_string(params.p(level)) + ", b = " +
                                                   std::to_string(params.b(level)) + ")");
            }
            out.push_back({r, f.digits, f.digits.scaled(Rational(r / p))});
        } else {
            if (r % 2 != 0)
                throw DivisibilityError(level + 1, "2 | b_" + std::to_string(level + 1) +
                                                       " fails (b = " +
                                                       std::to_string(params.b(level + 1)) + ")");
            out.push_back({r, f.digits, DigitSet::consecutive(2).scaled(Rational(r / 2))});
        }
        if (!is_hadamard(out.back()))
            throw std::logic_error("hadamard_triples: constructed triple is not Hadamard");
    }
    return out;
}

SpectrumCandidate build_spectrum(const ParamSeq& params, std::size_t count) {
    const auto triples = hadamard_triples(params, count);
    std::vector<SpectrumCandidate::Level> levels;
    levels.reserve(triples.size());
    Rational scale(1);
    for (const auto& t : triples) {
        levels.push_back({scale, t.frequencies});
        scale *= Rational(t.modulus);
    }
    return SpectrumCandidate::from_levels(std::move(levels));
}

QValue q_function(const SpectrumCandidate& candidate,
                  const std::function<BoundedValue(double)>& transform, double t) {
    QValue q{0.0, 0.0, 0.0};
    for (const auto& lambda : candidate.realized()) {
        const BoundedValue bv = transform(t + lambda.to_double());
        const double mag = std::abs(bv.value);
        q.value += mag * mag;
        const double lo = std::max(0.0, mag - bv.error_bound);
        const double hi = mag + bv.error_bound;
        q.lower += lo * lo;
        q.upper += hi * hi;
    }
    return q;
}

double q_function(const SpectrumCandidate& candidate, const DiscreteMeasure& measure,
                  double t) {
    double q = 0.0;
    for (const auto& lambda : candidate.realized()) {
        const double mag = std::abs(empirical_cf(measure, t + lambda.to_double()));
        q += mag * mag;
    }
    return q;
}

BizeroResult bizero_check(const SpectrumCandidate& candidate,
                          std::span<const ConvolutionFactor> factors, std::size_t K) {
    if (K > factors.size())
        throw std::invalid_argument("bizero_check: K exceeds factor count");
    const auto& points = candidate.realized();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Rational diff = points[j] - points[i];
            bool vanishes = false;
            for (std::size_t f = 0; f < K && !vanishes; ++f)
                vanishes = mask_zero_exact(factors[f].digits, factors[f].scale * diff);
            if (!vanishes) return {false, std::make_pair(points[i], points[j])};
        }
    }
    return {true, std::nullopt};
}

}  // namespace moran
