#pragma once

#include <cstddef>
#include <vector>

#include "moran/rational.hpp"

namespace moran {

/// The defining integer data of a staggered-ratio Moran system: the
/// contraction denominators {b_k} and half-branch counts {p_k} (the level-k
/// map family has n_k = 2*p_k branches). Both sequences are stored as a
/// finite prefix followed by a repeating period, which keeps every
/// "for all k" condition decidable on a finite horizon.
///
/// Invariants enforced at construction: periods nonempty, p_k >= 1 and
/// b_k >= 2*p_k for every k.
class ParamSeq {
public:
    ParamSeq(std::vector<long> b_prefix, std::vector<long> b_period,
             std::vector<long> p_prefix, std::vector<long> p_period);

    /// b_k, 1-based.
    long b(std::size_t k) const { return at(b_prefix_, b_period_, k); }
    /// p_k, 1-based.
    long p(std::size_t k) const { return at(p_prefix_, p_period_, k); }
    /// n_k = 2*p_k, the number of maps at level k.
    long n(std::size_t k) const { return 2 * p(k); }

    /// b_1 * b_2 * ... * b_k (empty product for k = 0).
    Integer b_product(std::size_t k) const;

    /// Indices 1..horizon() exhaust every joint (b_k, p_k, b_{k+1}) pattern;
    /// beyond it the sequence repeats patterns already seen.
    std::size_t horizon() const;

    bool all_p_one() const;
    bool all_p_even() const;

    const std::vector<long>& b_prefix() const { return b_prefix_; }
    const std::vector<long>& b_period() const { return b_period_; }
    const std::vector<long>& p_prefix() const { return p_prefix_; }
    const std::vector<long>& p_period() const { return p_period_; }

private:
    static long at(const std::vector<long>& prefix, const std::vector<long>& period,
                   std::size_t k);

    std::vector<long> b_prefix_, b_period_, p_prefix_, p_period_;
};

}  // namespace moran
