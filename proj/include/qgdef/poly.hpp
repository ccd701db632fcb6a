#ifndef QGDEF_POLY_HPP
#define QGDEF_POLY_HPP

#include <string>
#include <vector>

#include <qgdef/rational.hpp>

namespace qgdef {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The highest-degree stored coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
class UnivariatePoly {
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational evaluate(const Rational& t) const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.c_ == b.c_; }
};

/// A rational number extended with the two infinities, for limit results.
struct ExtRational {
    enum class Kind { Finite, PlusInfinity, MinusInfinity };

    Kind kind = Kind::Finite;
    Rational value; // meaningful only when finite

    static ExtRational finite(Rational v) { return {Kind::Finite, std::move(v)}; }
    static ExtRational plus_infinity() { return {Kind::PlusInfinity, Rational(0)}; }
    static ExtRational minus_infinity() { return {Kind::MinusInfinity, Rational(0)}; }

    bool is_finite() const { return kind == Kind::Finite; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
    }

    std::string str() const;
};

/**
 * Limit of num(t)/den(t) as t -> +infinity, by degree comparison:
 * deg num < deg den gives 0, equal degrees give the ratio of leading
 * coefficients, and a larger numerator degree gives +/- infinity by the
 * sign of that ratio. Throws ZeroDenominatorPolynomialError if den == 0.
 */
ExtRational limit_at_infinity(const UnivariatePoly& num, const UnivariatePoly& den);

} // namespace qgdef

#endif
