#include "moran/spectrality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace moran {

std::string to_string(SpectralStatus s) {
    switch (s) {
        case SpectralStatus::Spectral: return "SPECTRAL";
        case SpectralStatus::NotSpectral: return "NOT_SPECTRAL";
        case SpectralStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string to_string(DecisionRule r) {
    switch (r) {
        case DecisionRule::None: return "none";
        case DecisionRule::BernoulliTwoAdic: return "bernoulli-2adic";
        case DecisionRule::EvenPBiconditional: return "even-p-biconditional";
        case DecisionRule::EvenBNecessity: return "even-b-necessity";
        case DecisionRule::DivisibilitySufficiency: return "divisibility-sufficiency";
    }
    return "none";
}

SValue bernoulli_s_value(const ParamSeq& params, std::size_t k) {
    if (!params.all_p_one())
        throw std::invalid_argument("bernoulli_s_value: requires p == 1 at every level");
    if (k < 1) throw std::invalid_argument("bernoulli_s_value: k must be >= 1");
    const Rational q(params.b_product(k + 1), Integer(params.b(k + 1) - 1));
    return SValue{k, v2(q).value()};
}

DistinctnessResult bernoulli_distinct(const ParamSeq& params) {
    if (!params.all_p_one())
        throw std::invalid_argument("bernoulli_distinct: requires p == 1 at every level");

    const std::size_t lead = std::max<std::size_t>(params.b_prefix().size(), 1);
    const std::size_t period = params.b_period().size();

    auto s_at = [&](std::size_t k) { return bernoulli_s_value(params, k).value; };

    DistinctnessResult res;
    const std::size_t window_len = std::max<std::size_t>(lead + period - 1, 10);
    res.window.reserve(window_len);
    for (std::size_t k = 1; k <= window_len; ++k) res.window.push_back({k, s_at(k)});

    long sigma = 0;
    for (long b : params.b_period()) sigma += v2(Integer(b)).value();

    auto fail = [&](std::size_t i, std::size_t j) {
        res.distinct = false;
        res.collision = std::minmax(i, j);
        return res;
    };

    // s_{k+period} = s_k + sigma for k >= lead: sigma = 0 repeats the whole
    // pattern verbatim.
    if (sigma == 0) return fail(lead, lead + period);

    std::vector<long> offsets(period);
    for (std::size_t r = 0; r < period; ++r) offsets[r] = s_at(lead + r);

    // Prefix values against each other.
    for (std::size_t i = 1; i < lead; ++i)
        for (std::size_t j = i + 1; j < lead; ++j)
            if (s_at(i) == s_at(j)) return fail(i, j);

    // Prefix values against a slot's progression {offset + m*sigma : m >= 0}.
    for (std::size_t i = 1; i < lead; ++i) {
        const long si = s_at(i);
        for (std::size_t r = 0; r < period; ++r) {
            const long diff = si - offsets[r];
            if (diff >= 0 && diff % sigma == 0)
                return fail(i, lead + r + static_cast<std::size_t>(diff / sigma) * period);
        }
    }

    // Two slots collide iff their offsets agree mod sigma.
    for (std::size_t r = 0; r < period; ++r) {
        for (std::size_t r2 = r + 1; r2 < period; ++r2) {
            const long diff = offsets[r2] - offsets[r];
            if (((diff % sigma) + sigma) % sigma != 0) continue;
            if (diff >= 0)
                return fail(lead + r + static_cast<std::size_t>(diff / sigma) * period,
                            lead + r2);
            return fail(lead + r,
                        lead + r2 + static_cast<std::size_t>(-diff / sigma) * period);
        }
    }

    res.distinct = true;
    return res;
}

EvenBResult even_b_necessity(const ParamSeq& params) {
    if (!params.all_p_even())
        throw std::invalid_argument("even_b_necessity: requires even p at every level");
    for (std::size_t k = 2; k <= params.horizon(); ++k)
        if (params.b(k) % 2 != 0) return {false, k};
    return {true, 0};
}

namespace {

// The shared divisibility conditions of the sufficiency criteria:
// n_2 | 2 b_2 and n_k | b_k for k >= 3. Returns the first failure.
std::optional<DivisibilityFailure> divisibility_conditions(const ParamSeq& params) {
    if ((2 * params.b(2)) % params.n(2) != 0)
        return DivisibilityFailure{2, "n_2 | 2 b_2 fails (n_2 = " + std::to_string(params.n(2)) +
                                          ", b_2 = " + std::to_string(params.b(2)) + ")"};
    for (std::size_t k = 3; k <= params.horizon(); ++k) {
        if (params.b(k) % params.n(k) != 0)
            return DivisibilityFailure{
                k, "n_k | b_k fails at k = " + std::to_string(k) +
                       " (n = " + std::to_string(params.n(k)) +
                       ", b = " + std::to_string(params.b(k)) + ")"};
    }
    return std::nullopt;
}

}  // namespace

Verdict decide(const ParamSeq& params) {
    Verdict v;

    if (params.all_p_one()) {
        DistinctnessResult r = bernoulli_distinct(params);
        v.rule = DecisionRule::BernoulliTwoAdic;
        v.status = r.distinct ? SpectralStatus::Spectral : SpectralStatus::NotSpectral;
        v.s_values = std::move(r.window);
        v.s_collision = r.collision;
        return v;
    }

    if (params.all_p_even()) {
        const EvenBResult eb = even_b_necessity(params);
        if (!eb.ok) {
            v.status = SpectralStatus::NotSpectral;
            v.rule = DecisionRule::EvenBNecessity;
            v.divisibility = DivisibilityFailure{
                eb.witness_k, "2 | b_k fails at k = " + std::to_string(eb.witness_k) +
                                  " (b = " + std::to_string(params.b(eb.witness_k)) + ")"};
            return v;
        }
        v.rule = DecisionRule::EvenPBiconditional;
        if (auto failure = divisibility_conditions(params)) {
            v.status = SpectralStatus::NotSpectral;
            v.divisibility = std::move(failure);
        } else {
            v.status = SpectralStatus::Spectral;
        }
        return v;
    }

    // Mixed regime: only the sufficient direction is available.
    std::vector<std::string> unmet;
    if (params.b(2) % 2 != 0)
        unmet.push_back("2 | b_2 fails (b_2 = " + std::to_string(params.b(2)) + ")");
    if (auto failure = divisibility_conditions(params)) unmet.push_back(failure->condition);

    if (unmet.empty()) {
        v.status = SpectralStatus::Spectral;
        v.rule = DecisionRule::DivisibilitySufficiency;
    } else {
        v.status = SpectralStatus::Unknown;
        v.rule = DecisionRule::None;
        v.unmet = std::move(unmet);
    }
    return v;
}

std::vector<DivisibilityImplication> divisibility_extraction(std::span<const Rational> ratios,
                                                             std::span<const long> digit_sizes) {
    if (ratios.size() != digit_sizes.size())
        throw std::invalid_argument("divisibility_extraction: misaligned inputs");
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (digit_sizes[i] < 2)
            throw std::invalid_argument("divisibility_extraction: digit size < 2");
        if (ratios[i].sign() <= 0)
            throw std::invalid_argument("divisibility_extraction: ratios must be positive");
    }

    std::vector<DivisibilityImplication> out;
    for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
        const Integer& t_next = ratios[i + 1].den();
        const Integer& l_next = ratios[i + 1].num();
        if (t_next % digit_sizes[i] == 0) continue;  // hypothesis fails, nothing required

        {
            const Integer divisor(digit_sizes[i + 1]);
            out.push_back({i + 1, 1, divisor, l_next, l_next % divisor == 0});
        }
        if (i + 2 < ratios.size() && ratios[i + 2].is_integer()) {
            const Integer& l_after = ratios[i + 2].num();
            if (l_after % t_next == 0) {
                const Integer divisor = t_next * digit_sizes[i + 2];
                out.push_back({i + 1, 2, divisor, l_after, l_after % divisor == 0});
            }
        }
    }
    return out;
}

std::vector<SpectrumCandidate> decompose_spectrum(const SpectrumCandidate& lambda,
                                                  const Rational& d1, long gamma1,
                                                  const Integer& common_multiple,
                                                  std::span<const long> choices) {
    if (gamma1 < 1) throw std::invalid_argument("decompose_spectrum: gamma1 must be >= 1");
    if (d1.sign() <= 0) throw std::invalid_argument("decompose_spectrum: d1 must be positive");
    if (common_multiple <= 0 || common_multiple % gamma1 != 0 ||
        common_multiple % d1.den() != 0)
        throw std::invalid_argument(
            "decompose_spectrum: c must be a positive common multiple of gamma1 and den(d1)");

    const Integer q1 = common_multiple / gamma1;
    if (!q1.fits_ulong_p())
        throw std::invalid_argument("decompose_spectrum: class count too large");
    const std::size_t classes = q1.get_ui();
    if (choices.size() != classes)
        throw std::invalid_argument("decompose_spectrum: need one choice per residue class");
    for (long j : choices)
        if (j < 0 || j >= gamma1)
            throw std::invalid_argument("decompose_spectrum: choice outside [0, gamma1)");
    if (!std::binary_search(lambda.realized().begin(), lambda.realized().end(), Rational(0)))
        throw std::invalid_argument("decompose_spectrum: 0 must belong to the set");

    // Group the scaled elements lambda/d1 by residue of c * lambda / d1 mod c.
    std::map<Integer, std::vector<Rational>> by_residue;
    for (const auto& el : lambda.realized()) {
        const Rational scaled = el / d1;
        const Rational idx = scaled * Rational(common_multiple);
        if (!idx.is_integer())
            throw std::invalid_argument("decompose_spectrum: element " + el.str() +
                                        " violates the zero-set containment (c/d1 * " +
                                        el.str() + " not an integer)");
        Integer residue;
        mpz_fdiv_r(residue.get_mpz_t(), idx.num().get_mpz_t(), common_multiple.get_mpz_t());
        by_residue[residue].push_back(scaled);
    }

    std::vector<SpectrumCandidate> children;
    for (std::size_t i = 0; i < classes; ++i) {
        const Integer n = Integer(static_cast<long>(i)) + q1 * choices[i];
        auto it = by_residue.find(n);
        if (it == by_residue.end()) continue;  // empty class omitted
        children.push_back(SpectrumCandidate::flat(it->second));
    }
    return children;
}

}  // namespace moran
