#include "moran/moran_ifs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace moran {

Rational apply_map(const ParamSeq& params, std::size_t k, long digit, const Rational& x) {
    if (digit < 0 || digit >= params.n(k))
        throw std::invalid_argument("apply_map: digit " + std::to_string(digit) +
                                    " outside [0, " + std::to_string(params.n(k) - 1) +
                                    "] at level " + std::to_string(k));
    Rational value = (x + Rational(digit)) / Rational(params.b(k));
    return (digit % 2 == 0) ? value : -value;
}

Rational compose_path(const ParamSeq& params, std::size_t k, const std::vector<long>& digits,
                      const Rational& x0) {
    if (x0.abs() > Rational(2))
        throw std::invalid_argument("compose_path: |x0| > 2");
    Rational x = x0;
    for (std::size_t i = digits.size(); i-- > 0;)
        x = apply_map(params, k + i, digits[i], x);
    return x;
}

namespace {

// Visits the composed-path value of every digit word of the given depth,
// applying the deepest map first so partial values are shared between words
// with a common inner tail.
template <typename Fn>
void for_each_path_value(const ParamSeq& params, std::size_t k, std::size_t remaining,
                         const Rational& x, Fn&& fn) {
    if (remaining == 0) {
        fn(x);
        return;
    }
    const std::size_t level = k + remaining - 1;
    for (long j = 0; j < params.n(level); ++j)
        for_each_path_value(params, k, remaining - 1, apply_map(params, level, j, x), fn);
}

}  // namespace

std::vector<Rational> level_set_approx(const ParamSeq& params, std::size_t k,
                                       std::size_t depth) {
    std::vector<Rational> points;
    for_each_path_value(params, k, depth, Rational(0),
                        [&](const Rational& v) { points.push_back(v); });
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

DiscreteMeasure level_measure(const ParamSeq& params, std::size_t k, std::size_t depth) {
    Rational word_weight(1);
    for (std::size_t i = 0; i < depth; ++i)
        word_weight /= Rational(params.n(k + i));

    std::map<Rational, unsigned long> counts;
    for_each_path_value(params, k, depth, Rational(0),
                        [&](const Rational& v) { ++counts[v]; });
    std::vector<DiscreteMeasure::Atom> atoms;
    atoms.reserve(counts.size());
    for (const auto& [pos, count] : counts)
        atoms.push_back({pos, word_weight * Rational(static_cast<long>(count))});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

bool refinement_check(const ParamSeq& params, std::size_t k, std::size_t depth,
                      std::string* diff) {
    if (depth < 1) throw std::invalid_argument("refinement_check: depth must be >= 1");

    const DiscreteMeasure direct = level_measure(params, k, depth);

    const DiscreteMeasure finer = level_measure(params, k + 1, depth - 1);
    const Rational branch_weight(1, params.n(k));
    std::vector<DiscreteMeasure::Atom> atoms;
    for (long i = 0; i < params.n(k); ++i) {
        for (const auto& atom : finer.atoms()) {
            atoms.push_back({apply_map(params, k, i, atom.position),
                             atom.weight * branch_weight});
        }
    }
    const DiscreteMeasure refined = DiscreteMeasure::from_atoms(std::move(atoms));

    if (direct == refined) return true;
    if (diff) {
        std::ostringstream os;
        const auto& a = direct.atoms();
        const auto& b = refined.atoms();
        if (a.size() != b.size()) {
            os << "atom counts differ: " << a.size() << " vs " << b.size();
        } else {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == b[i]) continue;
                os << "atom " << i << ": (" << a[i].position << ", " << a[i].weight
                   << ") vs (" << b[i].position << ", " << b[i].weight << ")";
                break;
            }
        }
        *diff = os.str();
    }
    return false;
}

}  // namespace moran
