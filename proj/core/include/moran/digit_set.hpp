#pragma once

#include <complex>
#include <span>
#include <vector>

#include "moran/rational.hpp"

namespace moran {

/// A finite set of rational digits, kept sorted and duplicate-free.
class DigitSet {
public:
    /// The consecutive digit set {0, 1, ..., n-1}.
    static DigitSet consecutive(std::size_t n);

    /// Builds a set from arbitrary values; duplicates collapse.
    static DigitSet from_values(std::vector<Rational> values);

    std::size_t size() const { return elems_.size(); }
    const Rational& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Rational>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const Rational& v) const;
    bool is_integral() const;

    /// {a*d : d in this}; a must be nonzero.
    DigitSet scaled(const Rational& a) const;
    /// {d + b : d in this}.
    DigitSet shifted(const Rational& b) const;

    /// {d + e : d in this, e in other}, required collision-free.
    /// Throws std::domain_error when two sums coincide.
    DigitSet direct_sum(const DigitSet& other) const;

    friend bool operator==(const DigitSet& a, const DigitSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const DigitSet& a, const DigitSet& b) { return !(a == b); }

private:
    explicit DigitSet(std::vector<Rational> sorted_unique) : elems_(std::move(sorted_unique)) {}
    std::vector<Rational> elems_;
};

std::ostream& operator<<(std::ostream& os, const DigitSet& d);

/// Mask polynomial m_A(t) = (1/#A) * sum_a exp(2*pi*i*a*t). |result| <= 1, m_A(0) = 1.
std::complex<double> mask_eval(const DigitSet& digits, double t);

/// Decides m_A(t) == 0 exactly for rational t.
///
/// Structured digit sets take an arithmetic shortcut (two-point sets vanish
/// iff the gap times t is a half-integer; arithmetic progressions reduce to
/// the consecutive-set divisibility rule). Everything else clears
/// denominators and tests whether the resulting sum of N-th roots of unity
/// vanishes, via exact polynomial reduction modulo the N-th cyclotomic
/// polynomial.
bool mask_zero_exact(const DigitSet& digits, const Rational& t);

/// gcd of the union of pairwise differences across the given integer sets.
/// Throws std::invalid_argument unless at least one set has >= 2 elements and
/// all elements are integers.
Integer gcd_diffsets(std::span<const DigitSet> sets);

}  // namespace moran
