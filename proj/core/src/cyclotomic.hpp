#pragma once

#include <vector>

#include "moran/rational.hpp"

namespace moran::detail {

// Dense integer polynomial, coefficient of x^i at index i.
using Poly = std::vector<Integer>;

// Coefficients of the n-th cyclotomic polynomial, n >= 1.
Poly cyclotomic(unsigned long n);

// True iff sum over k of coeffs[k] * zeta_n^k vanishes, zeta_n = exp(2*pi*i/n).
// coeffs has size n (exponents already reduced mod n).
bool root_of_unity_sum_vanishes(const Poly& coeffs, unsigned long n);

}  // namespace moran::detail
