#include "moran/rational.hpp"

#include <ostream>

namespace moran {

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Valuation v2(const Integer& n) {
    if (n == 0) return Valuation::infinity();
    // mpz_scan1 finds the lowest set bit; for nonzero n that is v2(|n|) = v2(n).
    return Valuation::finite(static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)));
}

Valuation v2(const Rational& q) {
    if (q.is_zero()) return Valuation::infinity();
    return Valuation::finite(v2(q.num()).value() - v2(q.den()).value());
}

}  // namespace moran
