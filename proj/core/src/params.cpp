#include "moran/params.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace moran {

ParamSeq::ParamSeq(std::vector<long> b_prefix, std::vector<long> b_period,
                   std::vector<long> p_prefix, std::vector<long> p_period)
    : b_prefix_(std::move(b_prefix)),
      b_period_(std::move(b_period)),
      p_prefix_(std::move(p_prefix)),
      p_period_(std::move(p_period)) {
    if (b_period_.empty()) throw std::invalid_argument("ParamSeq: empty b_period");
    if (p_period_.empty()) throw std::invalid_argument("ParamSeq: empty p_period");
    for (std::size_t k = 1; k <= horizon(); ++k) {
        const long pk = p(k);
        const long bk = b(k);
        if (pk < 1)
            throw std::invalid_argument("ParamSeq: p_" + std::to_string(k) +
                                        " = " + std::to_string(pk) + " < 1");
        if (bk < 2 * pk)
            throw std::invalid_argument("ParamSeq: b_" + std::to_string(k) + " = " +
                                        std::to_string(bk) + " < n_" + std::to_string(k) +
                                        " = " + std::to_string(2 * pk));
    }
}

long ParamSeq::at(const std::vector<long>& prefix, const std::vector<long>& period,
                  std::size_t k) {
    if (k == 0) throw std::invalid_argument("ParamSeq: indices are 1-based");
    if (k <= prefix.size()) return prefix[k - 1];
    return period[(k - 1 - prefix.size()) % period.size()];
}

Integer ParamSeq::b_product(std::size_t k) const {
    Integer prod(1);
    for (std::size_t i = 1; i <= k; ++i) prod *= b(i);
    return prod;
}

std::size_t ParamSeq::horizon() const {
    const std::size_t lead = std::max(b_prefix_.size(), p_prefix_.size());
    const std::size_t joint = std::lcm(b_period_.size(), p_period_.size());
    return lead + joint + 2;
}

bool ParamSeq::all_p_one() const {
    for (std::size_t k = 1; k <= horizon(); ++k)
        if (p(k) != 1) return false;
    return true;
}

bool ParamSeq::all_p_even() const {
    for (std::size_t k = 1; k <= horizon(); ++k)
        if (p(k) % 2 != 0) return false;
    return true;
}

}  // namespace moran
