#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "moran/digit_set.hpp"
#include "moran/measure.hpp"
#include "moran/params.hpp"

namespace moran {

/// One factor of an infinite convolution: the uniform measure on
/// scale * digits, where scale is the exact cumulative reciprocal ratio.
struct ConvolutionFactor {
    /// A consecutive block D_p, or an odd multiple of {0, 1} split off a level.
    enum class Kind { Consecutive, ScaledPair };

    Rational scale;
    DigitSet digits;
    std::size_t level = 0;  // level of the defining data
    Kind kind = Kind::Consecutive;
};

/// A relabeled convolution: factors in relabeled order with exact cumulative
/// scales, plus the map from original level k (k >= 3) to the index m_k of the
/// first factor carrying level-k data, m_k = 2k - 2 - #{n < k : p_n = 1}.
struct RearrangedSeq {
    std::vector<ConvolutionFactor> factors;
    std::map<std::size_t, std::size_t> m_index;

    /// Per-step ratio of factor j (1-based): scale_{j-1} / scale_j with
    /// scale_0 = 1. Integral for the relabeled form under the divisibility
    /// guards; rational in general.
    Rational step_ratio(std::size_t j) const;
};

/// The level-k digit set of the convolution form:
/// D_{p_k} (+) (p_k - (1 + 1/b_{k+1})/2) * {0, 1}, of size exactly 2*p_k.
DigitSet convolution_digits(const ParamSeq& params, std::size_t k);

/// The rescaled two-point normal form of level k when p == 1 throughout:
/// 2*b_{k+1} times the level digits, which is {0, b_{k+1} - 1}.
DigitSet bernoulli_digits(const ParamSeq& params, std::size_t k);

/// The convolution factors in original per-level order: level k contributes
/// the uniform measure on (b_1...b_k)^{-1} * convolution_digits(k), k <= levels.
std::vector<ConvolutionFactor> original_factors(const ParamSeq& params, std::size_t levels);

/// Splits each level's digits into a consecutive block and a scaled pair,
/// reorders them into the relabeled sequence, and drops one-element blocks so
/// that every emitted factor has at least two digits. The output covers
/// exactly the data of levels <= levels (the factor multiset equals that of
/// original_factors(levels)); cumulative scales are preserved exactly.
/// Requires levels >= 2.
RearrangedSeq rearrange(const ParamSeq& params, std::size_t levels);

/// The double-indexed rewrite with consecutive digit sets only: ratios
/// r_1 = b_1, r_2 = b_2, r_{2k+1} = 2 / (b_{k+1} (2 p_k - 1) - 1),
/// r_{2k+2} = b_{k+2} (b_{k+1} (2 p_k - 1) - 1) / 2, and digit sizes
/// g_1 = p_1, g_2 = p_2, g_{2k+1} = 2, g_{2k+2} = p_{k+2}. Ratios are
/// rational; cumulative products telescope to b_1...b_{k+2} at even indices.
RearrangedSeq double_index(const ParamSeq& params, std::size_t count);

/// Exact convolution of the first K factors (K = 0 gives the Dirac at 0).
DiscreteMeasure finite_convolution(std::span<const ConvolutionFactor> factors, std::size_t K);
DiscreteMeasure finite_convolution(const RearrangedSeq& seq, std::size_t K);

/// The finite-level scaled tail: the convolution of factors cut+1 .. cut+extra
/// with scales divided by the cumulative scale at the cut, so the tail starts
/// from ratio 1 again. cut = 0 reproduces finite_convolution(extra).
DiscreteMeasure scaled_tail(const RearrangedSeq& seq, std::size_t cut, std::size_t extra);

}  // namespace moran
