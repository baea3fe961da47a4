#include "moran/measure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace moran {

namespace {

std::vector<DiscreteMeasure::Atom> merge_atoms(std::vector<DiscreteMeasure::Atom> atoms) {
    std::map<Rational, Rational> merged;
    for (auto& a : atoms) {
        auto [it, inserted] = merged.emplace(a.position, a.weight);
        if (!inserted) it->second += a.weight;
    }
    std::vector<DiscreteMeasure::Atom> out;
    out.reserve(merged.size());
    for (auto& [pos, w] : merged) {
        if (w.sign() <= 0) throw std::invalid_argument("DiscreteMeasure: nonpositive weight");
        out.push_back({pos, w});
    }
    return out;
}

}  // namespace

DiscreteMeasure DiscreteMeasure::dirac(const Rational& at) {
    return DiscreteMeasure({Atom{at, Rational(1)}});
}

DiscreteMeasure DiscreteMeasure::uniform(const DigitSet& digits, const Rational& scale) {
    const Rational w(1, static_cast<long>(digits.size()));
    std::vector<Atom> atoms;
    atoms.reserve(digits.size());
    for (const auto& d : digits) atoms.push_back({scale * d, w});
    return from_atoms(std::move(atoms));
}

DiscreteMeasure DiscreteMeasure::from_atoms(std::vector<Atom> atoms) {
    auto merged = merge_atoms(std::move(atoms));
    Rational mass(0);
    for (const auto& a : merged) mass += a.weight;
    if (mass != Rational(1))
        throw std::invalid_argument("DiscreteMeasure: total mass " + mass.str() + " != 1");
    return DiscreteMeasure(std::move(merged));
}

Rational DiscreteMeasure::total_mass() const {
    Rational mass(0);
    for (const auto& a : atoms_) mass += a.weight;
    return mass;
}

DiscreteMeasure DiscreteMeasure::convolve(const DiscreteMeasure& other) const {
    std::map<Rational, Rational> merged;
    for (const auto& a : atoms_) {
        for (const auto& b : other.atoms_) {
            const Rational pos = a.position + b.position;
            const Rational w = a.weight * b.weight;
            auto [it, inserted] = merged.emplace(pos, w);
            if (!inserted) it->second += w;
        }
    }
    std::vector<Atom> out;
    out.reserve(merged.size());
    for (auto& [pos, w] : merged) out.push_back({pos, w});
    return DiscreteMeasure(std::move(out));
}

DiscreteMeasure DiscreteMeasure::map_affine(const Rational& a, const Rational& c) const {
    if (a.is_zero()) throw std::invalid_argument("map_affine: zero scale");
    std::vector<Atom> out;
    out.reserve(atoms_.size());
    for (const auto& atom : atoms_) out.push_back({a * atom.position + c, atom.weight});
    std::sort(out.begin(), out.end(),
              [](const Atom& x, const Atom& y) { return x.position < y.position; });
    return DiscreteMeasure(std::move(out));
}

}  // namespace moran
