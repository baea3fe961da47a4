#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moran/params.hpp"
#include "moran/rational.hpp"
#include "moran/spectra.hpp"

namespace moran {

enum class SpectralStatus { Spectral, NotSpectral, Unknown };

/// The criterion that settled (or failed to settle) the decision.
enum class DecisionRule {
    None,
    BernoulliTwoAdic,         // p == 1 regime: distinctness of the 2-adic exponents
    EvenPBiconditional,       // all p_k even: divisibility characterization
    EvenBNecessity,           // all p_k even: 2 | b_k (k >= 2) is necessary
    DivisibilitySufficiency,  // mixed regime: sufficient divisibility conditions
};

std::string to_string(SpectralStatus s);
std::string to_string(DecisionRule r);

/// The 2-adic exponent of level k in the two-point regime:
/// s_k = v2(b_1 ... b_{k+1}) - v2(b_{k+1} - 1).
struct SValue {
    std::size_t k;
    long value;
    friend bool operator==(const SValue&, const SValue&) = default;
};

/// Requires p == 1 at every level.
SValue bernoulli_s_value(const ParamSeq& params, std::size_t k);

struct DistinctnessResult {
    bool distinct;
    /// Indices i < j with s_i == s_j when not distinct.
    std::optional<std::pair<std::size_t, std::size_t>> collision;
    /// s_1 .. s_w for reporting (w covers the decision data, at least 10).
    std::vector<SValue> window;
};

/// Decides whether ALL s_k are pairwise distinct. Beyond the prefix the
/// s-sequence splits into one arithmetic progression per period slot, all
/// with common difference sigma = sum of v2 over one period of b. sigma = 0
/// forces repetition; for sigma > 0 two slots collide exactly when their
/// offsets agree mod sigma, and prefix values collide with a slot exactly
/// when they sit on its progression. All cases are decided exactly.
DistinctnessResult bernoulli_distinct(const ParamSeq& params);

/// Necessary condition in the all-even regime: 2 | b_k for every k >= 2.
/// witness_k is the first violating index when ok is false.
struct EvenBResult {
    bool ok;
    std::size_t witness_k = 0;
};
EvenBResult even_b_necessity(const ParamSeq& params);

struct DivisibilityFailure {
    std::size_t k;
    std::string condition;
};

struct Verdict {
    SpectralStatus status = SpectralStatus::Unknown;
    DecisionRule rule = DecisionRule::None;
    std::vector<SValue> s_values;
    std::optional<std::pair<std::size_t, std::size_t>> s_collision;
    std::optional<DivisibilityFailure> divisibility;
    std::vector<std::string> unmet;  // failed sufficient conditions (Unknown only)
};

/// Total decision procedure on eventually periodic parameters:
///  - p == 1 everywhere: spectral iff the s-values are pairwise distinct;
///  - all p_k even: spectral iff n_2 | 2 b_2 and n_k | b_k for k >= 3;
///  - otherwise: spectral if 2 | b_2, n_2 | 2 b_2 and n_k | b_k for k >= 3,
///    else Unknown with the list of failed conditions (no complete
///    characterization exists in the mixed regime).
Verdict decide(const ParamSeq& params);

/// One divisibility consequence extracted from a ratio/digit-size pair list
/// for the generalized rational-ratio convolution. `index` is where the
/// hypothesis fired, `clause` names which implication applies, and the
/// requirement is divisor | dividend; `holds` records whether it does.
/// A spectral measure satisfies every emitted requirement, so a violated
/// one certifies non-spectrality.
struct DivisibilityImplication {
    std::size_t index;
    int clause;  // 1: gamma_{i+1} | l_{i+1}; 2: t_{i+1} gamma_{i+2} | l_{i+2}
    Integer divisor;
    Integer dividend;
    bool holds;
};

/// ratios d_i = l_i / t_i (positive, reduced by construction) and consecutive
/// digit sizes gamma_i >= 2, aligned 1-based. Clause 1 fires at i when
/// gamma_i does not divide t_{i+1}; clause 2 additionally needs d_{i+2}
/// integral with t_{i+1} | l_{i+2}.
std::vector<DivisibilityImplication> divisibility_extraction(std::span<const Rational> ratios,
                                                             std::span<const long> digit_sizes);

/// Splits a frequency set along residue classes: with every element of
/// Lambda/d1 in (1/c) * Z, class n collects the elements congruent to n/c
/// mod 1. For each i in [0, c/gamma1) the choice j_i selects the class
/// n = i + (c/gamma1) * j_i; empty classes are omitted. The union of the
/// returned candidates is the induced frequency set of the scaled tail.
std::vector<SpectrumCandidate> decompose_spectrum(const SpectrumCandidate& lambda,
                                                  const Rational& d1, long gamma1,
                                                  const Integer& common_multiple,
                                                  std::span<const long> choices);

}  // namespace moran
