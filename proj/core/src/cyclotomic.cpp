#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace moran::detail {

namespace {

void strip_leading_zeros(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials; divisor monic. Throws if not exact.
Poly divide_exact(Poly num, const Poly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("divide_exact: divisor must be monic");
    strip_leading_zeros(num);
    if (num.size() < den.size()) {
        strip_leading_zeros(num);
        if (!num.empty()) throw std::logic_error("divide_exact: not divisible");
        return {};
    }
    Poly quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        if (c == 0) continue;
        quot[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    strip_leading_zeros(num);
    if (!num.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

// Remainder of num modulo monic den.
Poly mod_monic(Poly num, const Poly& den) {
    strip_leading_zeros(num);
    while (num.size() >= den.size()) {
        Integer c = num.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        strip_leading_zeros(num);
    }
    return num;
}

Poly x_pow_minus_one(unsigned long n) {
    Poly p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace

Poly cyclotomic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    // Phi_d for every divisor d of n, in increasing order; Phi_d is the quotient
    // of x^d - 1 by the product of Phi_e over proper divisors e of d.
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divisors.push_back(d);
            if (d != n / d) divisors.push_back(n / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    std::map<unsigned long, Poly> phi;
    for (unsigned long d : divisors) {
        Poly num = x_pow_minus_one(d);
        for (unsigned long e : divisors) {
            if (e < d && d % e == 0) num = divide_exact(std::move(num), phi.at(e));
        }
        phi[d] = std::move(num);
    }
    return phi.at(n);
}

bool root_of_unity_sum_vanishes(const Poly& coeffs, unsigned long n) {
    if (coeffs.size() != n)
        throw std::invalid_argument("root_of_unity_sum_vanishes: size mismatch");
    Poly rem = mod_monic(coeffs, cyclotomic(n));
    return rem.empty();
}

}  // namespace moran::detail
