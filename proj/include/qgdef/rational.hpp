#ifndef QGDEF_RATIONAL_HPP
#define QGDEF_RATIONAL_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <string>

#include <qgdef/errors.hpp>

namespace qgdef {

/**
 * Exact rational scalar. Always stored in lowest terms with positive
 * denominator; zero is 0/1. Equality is structural. The text rendering
 * "n/d" (with "/d" omitted when d == 1) is the contract used by every
 * report in the artifact.
 */
class Rational {
    mpq_class v_;

    explicit Rational(mpq_class v) : v_(std::move(v)) {}

public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw InvalidParametersError("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw InvalidParametersError("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses the canonical rendering, e.g. "-2/3" or "5".
    static Rational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // Integer power with e >= 0.
    Rational pow(unsigned long e) const;

    // Value as long; requires an integer that fits.
    long to_long() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw InvalidParametersError("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);
};

} // namespace qgdef

#endif
