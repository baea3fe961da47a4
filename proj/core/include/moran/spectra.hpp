#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moran/convolution.hpp"
#include "moran/digit_set.hpp"
#include "moran/fourier.hpp"
#include "moran/measure.hpp"
#include "moran/params.hpp"

namespace moran {

/// Integer data (R, B, L) with |R| > 1 and #B = #L >= 2. The triple is
/// Hadamard when the matrix (1/sqrt(#B)) * (exp(-2*pi*i*b*l/R)) is unitary,
/// equivalently when L is a spectrum of the uniform measure on R^{-1}B.
struct HadamardTriple {
    Integer modulus;
    DigitSet base;
    DigitSet frequencies;
};

/// Thrown when a requested construction needs a divisibility condition the
/// parameters do not satisfy.
class DivisibilityError : public std::runtime_error {
public:
    DivisibilityError(std::size_t level, std::string condition)
        : std::runtime_error("divisibility guard fails at level " + std::to_string(level) +
                             ": " + condition),
          level_(level),
          condition_(std::move(condition)) {}
    std::size_t level() const { return level_; }
    const std::string& condition() const { return condition_; }

private:
    std::size_t level_;
    std::string condition_;
};

/// Exact unitarity test: columns l != l' are orthogonal iff the mask of B
/// vanishes at (l - l')/R, decided by mask_zero_exact.
bool is_hadamard(const HadamardTriple& t);

/// Composes triples (R_1,B_1,L_1), ..., (R_n,B_n,L_n) into
/// (R_1...R_n, (R_2...R_n)B_1 + ... + B_n, L_1 + R_1 L_2 + ... + (R_1...R_{n-1}) L_n).
/// Inputs must individually pass is_hadamard; the result does as well.
HadamardTriple compose_triples(std::span<const HadamardTriple> triples);

/// A frequency set built level by level: realized = sumset of
/// scale_j * frequencies_j over the recorded levels, collision-free.
/// A candidate may also be a flat set with no level structure (after
/// decomposition or when read back from a file).
class SpectrumCandidate {
public:
    struct Level {
        Rational scale;
        DigitSet frequencies;
    };

    static SpectrumCandidate from_levels(std::vector<Level> levels);
    static SpectrumCandidate flat(std::vector<Rational> values);

    const std::vector<Level>& levels() const { return levels_; }
    const std::vector<Rational>& realized() const { return realized_; }
    std::size_t size() const { return realized_.size(); }

    /// The candidate restricted to its first n levels.
    SpectrumCandidate truncated(std::size_t n) const;

private:
    SpectrumCandidate() = default;
    std::vector<Level> levels_;
    std::vector<Rational> realized_;
};

/// Hadamard triples (r_j, D_j, L_j) for the first `count` relabeled factors:
/// a consecutive block D_p with integer ratio r gets L = (r/p) D_p, a scaled
/// pair a*{0,1} with even ratio r gets L = (r/2) {0,1}. Throws
/// DivisibilityError naming the violated condition otherwise. Every returned
/// triple passes is_hadamard.
std::vector<HadamardTriple> hadamard_triples(const ParamSeq& params, std::size_t count);

/// The spectrum of the K-factor finite convolution, assembled from
/// hadamard_triples via the composition rule: level j carries frequencies L_j
/// at scale r_1...r_{j-1}. The realized set is an exact spectrum of
/// finite_convolution(rearrange(params, .), K).
SpectrumCandidate build_spectrum(const ParamSeq& params, std::size_t count);

/// Q(t) = sum over the candidate of |transform(t + lambda)|^2, with an
/// interval derived from the transform's certified bounds.
struct QValue {
    double value;
    double lower;
    double upper;
};
QValue q_function(const SpectrumCandidate& candidate,
                  const std::function<BoundedValue(double)>& transform, double t);

/// Q(t) against an exact discrete measure (no truncation interval).
double q_function(const SpectrumCandidate& candidate, const DiscreteMeasure& measure,
                  double t);

/// Exact orthogonality of the candidate against the K-factor convolution:
/// every nonzero difference must annihilate some factor's mask. On failure
/// carries the first offending pair.
struct BizeroResult {
    bool ok;
    std::optional<std::pair<Rational, Rational>> witness;
    explicit operator bool() const { return ok; }
};
BizeroResult bizero_check(const SpectrumCandidate& candidate,
                          std::span<const ConvolutionFactor> factors, std::size_t K);

}  // namespace moran
