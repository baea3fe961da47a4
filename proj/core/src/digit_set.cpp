#include "moran/digit_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cyclotomic.hpp"

namespace moran {

DigitSet DigitSet::consecutive(std::size_t n) {
    if (n == 0) throw std::invalid_argument("DigitSet::consecutive: empty set");
    std::vector<Rational> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(i));
    return DigitSet(std::move(v));
}

DigitSet DigitSet::from_values(std::vector<Rational> values) {
    if (values.empty()) throw std::invalid_argument("DigitSet: empty set");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return DigitSet(std::move(values));
}

bool DigitSet::contains(const Rational& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool DigitSet::is_integral() const {
    return std::all_of(elems_.begin(), elems_.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

DigitSet DigitSet::scaled(const Rational& a) const {
    if (a.is_zero()) throw std::invalid_argument("DigitSet::scaled: zero factor");
    std::vector<Rational> v;
    v.reserve(size());
    for (const auto& e : elems_) v.push_back(a * e);
    if (a.sign() < 0) std::reverse(v.begin(), v.end());
    return DigitSet(std::move(v));
}

DigitSet DigitSet::shifted(const Rational& b) const {
    std::vector<Rational> v;
    v.reserve(size());
    for (const auto& e : elems_) v.push_back(e + b);
    return DigitSet(std::move(v));
}

DigitSet DigitSet::direct_sum(const DigitSet& other) const {
    std::vector<Rational> sums;
    sums.reserve(size() * other.size());
    for (const auto& a : elems_)
        for (const auto& b : other.elems_) sums.push_back(a + b);
    std::sort(sums.begin(), sums.end());
    if (std::adjacent_find(sums.begin(), sums.end()) != sums.end())
        throw std::domain_error("DigitSet::direct_sum: colliding sums");
    return DigitSet(std::move(sums));
}

std::ostream& operator<<(std::ostream& os, const DigitSet& d) {
    os << "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        os << d[i];
    }
    return os << "}";
}

std::complex<double> mask_eval(const DigitSet& digits, double t) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& a : digits) {
        const double phase = 2.0 * std::numbers::pi * a.to_double() * t;
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc / static_cast<double>(digits.size());
}

namespace {

bool is_half_integer(const Rational& r) {
    return (r + r).is_integer() && !r.is_integer();
}

// Vanishing rule for the consecutive set D_n at argument u:
// m_{D_n}(u) = 0 iff n*u is an integer and u is not.
bool consecutive_mask_vanishes(std::size_t n, const Rational& u) {
    return (Rational(static_cast<long>(n)) * u).is_integer() && !u.is_integer();
}

}  // namespace

bool mask_zero_exact(const DigitSet& digits, const Rational& t) {
    const std::size_t n = digits.size();
    if (n == 1) return false;

    // Translation multiplies the mask by a unimodular phase.
    // An arithmetic progression with gap g is a scaled translate of D_n.
    bool progression = true;
    const Rational gap = digits[1] - digits[0];
    for (std::size_t i = 2; i < n && progression; ++i)
        progression = (digits[i] - digits[i - 1]) == gap;
    if (progression) {
        if (n == 2) return is_half_integer(gap * t);
        return consecutive_mask_vanishes(n, gap * t);
    }

    // General rational set: exponents a*t mod 1 over a common denominator N
    // turn the sum into an integer combination of N-th roots of unity.
    Integer ncommon(1);
    std::vector<Rational> expo;
    expo.reserve(n);
    for (const auto& a : digits) {
        expo.push_back((a * t).frac());
        mpz_lcm(ncommon.get_mpz_t(), ncommon.get_mpz_t(), expo.back().den().get_mpz_t());
    }
    if (ncommon == 1) return false;  // all exponents integral: sum = #A
    if (!ncommon.fits_ulong_p() || ncommon > 10'000'000)
        throw std::runtime_error("mask_zero_exact: common denominator too large");
    const unsigned long N = ncommon.get_ui();

    detail::Poly coeffs(N, Integer(0));
    for (const auto& e : expo) {
        Integer k = e.num() * (ncommon / e.den());
        coeffs[mpz_class(k % ncommon).get_ui()] += 1;
    }
    return detail::root_of_unity_sum_vanishes(coeffs, N);
}

Integer gcd_diffsets(std::span<const DigitSet> sets) {
    Integer g(0);
    bool any_pair = false;
    for (const auto& s : sets) {
        if (!s.is_integral())
            throw std::invalid_argument("gcd_diffsets: non-integer element");
        if (s.size() < 2) continue;
        any_pair = true;
        // gcd of all pairwise differences equals gcd of differences from one anchor.
        for (std::size_t i = 1; i < s.size(); ++i) {
            Integer d = s[i].num() - s[0].num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (!any_pair)
        throw std::invalid_argument("gcd_diffsets: all sets are singletons");
    return g;
}

}  // namespace moran
