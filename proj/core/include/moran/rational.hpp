#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace moran {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced with a positive denominator,
/// so two equal values have identical representations and ordered containers
/// behave predictably.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}                 // NOLINT: implicit by design
    Rational(const Integer& v) : q_(v) {}       // NOLINT: implicit by design

    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    /// Largest integer <= *this.
    Integer floor() const {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den(), num());
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_, raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_, raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_, raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.q_ / b.q_, raw_tag{});
    }
    Rational operator-() const { return Rational(-q_, raw_tag{}); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    std::string str() const;

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}  // already canonical
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^e as an exact rational, for any integer e (negative allowed).
Rational pow2(long e);

/// A 2-adic valuation: an integer, or +infinity for the input 0.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinity() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::domain_error("Valuation: value() of infinity");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    /// infinity compares greater than every finite valuation.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

    /// v2(xy) = v2(x) + v2(y); infinity absorbs.
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// 2-adic valuation of an integer; v2(0) = infinity.
Valuation v2(const Integer& n);

/// 2-adic valuation of a rational, v2(m/n) = v2(m) - v2(n).
Valuation v2(const Rational& q);

}  // namespace moran
