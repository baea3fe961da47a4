#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "moran/measure.hpp"
#include "moran/params.hpp"
#include "moran/rational.hpp"

namespace moran {

/// The level-k contraction with digit i: x -> (-1)^i * (x + i) / b_k.
/// Digits run over 0 <= i <= n_k - 1; the sign alternates with the digit.
Rational apply_map(const ParamSeq& params, std::size_t k, long digit, const Rational& x);

/// Applies the maps of levels k, k+1, ..., k+digits.size()-1 from the inside
/// out: level k's map is applied last. Requires |x0| <= 2; the composed value
/// stays in [-2, 2].
Rational compose_path(const ParamSeq& params, std::size_t k, const std::vector<long>& digits,
                      const Rational& x0);

/// All composed-path values of the given depth starting from 0, sorted and
/// deduplicated. Every point lies within 2^(3-depth) of a point of the level-k
/// limit set, and inside [-2, 2]. Depth 0 gives {0}.
std::vector<Rational> level_set_approx(const ParamSeq& params, std::size_t k, std::size_t depth);

/// The depth-L approximation of the level-k invariant measure: each digit
/// word of length L carries weight prod 1/n_i, placed at its composed-path
/// value; colliding positions merge exactly.
DiscreteMeasure level_measure(const ParamSeq& params, std::size_t k, std::size_t depth);

/// Verifies exactly that level_measure(k, L) equals the one-step refinement
/// (1/n_k) * sum_i level_measure(k+1, L-1) pushed forward through the level-k
/// maps. On mismatch returns false and, when diff is non-null, stores a
/// description of the first differing atom.
bool refinement_check(const ParamSeq& params, std::size_t k, std::size_t depth,
                      std::string* diff = nullptr);

}  // namespace moran
