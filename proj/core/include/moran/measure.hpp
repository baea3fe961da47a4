#pragma once

#include <vector>

#include "moran/digit_set.hpp"
#include "moran/rational.hpp"

namespace moran {

/// A finitely supported probability measure with exact rational atoms.
/// Atoms are sorted by position, positions are distinct, weights are
/// positive and sum to exactly 1.
class DiscreteMeasure {
public:
    struct Atom {
        Rational position;
        Rational weight;
        friend bool operator==(const Atom&, const Atom&) = default;
    };

    static DiscreteMeasure dirac(const Rational& at);

    /// Uniform measure on scale * digits.
    static DiscreteMeasure uniform(const DigitSet& digits, const Rational& scale);

    /// Merges equal positions by adding weights; validates total mass 1.
    static DiscreteMeasure from_atoms(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    Rational total_mass() const;

    /// Exact convolution: atoms at all pairwise sums, products of weights,
    /// coinciding positions merged.
    DiscreteMeasure convolve(const DiscreteMeasure& other) const;

    /// Pushforward under x -> a*x + c (a nonzero).
    DiscreteMeasure map_affine(const Rational& a, const Rational& c) const;

    friend bool operator==(const DiscreteMeasure& x, const DiscreteMeasure& y) {
        return x.atoms_ == y.atoms_;
    }

private:
    explicit DiscreteMeasure(std::vector<Atom> sorted_atoms) : atoms_(std::move(sorted_atoms)) {}
    std::vector<Atom> atoms_;
};

}  // namespace moran
