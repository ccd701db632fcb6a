#ifndef QGDEF_SYMBOLIC_HPP
#define QGDEF_SYMBOLIC_HPP

#include <array>
#include <map>
#include <string>

#include <qgdef/poly.hpp>
#include <qgdef/rational.hpp>

namespace qgdef {

/// Variable indices for the three cusp exponents.
enum Var : int { VP = 0, VQ = 1, VR = 2 };

/// Polynomial in the three formal exponent variables over Q.
class Poly3 {
    // exponent triple -> nonzero coefficient
    std::map<std::array<int, 3>, Rational> terms_;

    void put(const std::array<int, 3>& e, const Rational& c);

public:
    Poly3() = default;

    static Poly3 constant(const Rational& c);
    static Poly3 constant(long c) { return constant(Rational(c)); }
    static Poly3 var(int v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant

    int degree_in(int v) const;            // -1 for the zero polynomial
    Poly3 coefficient_in(int v, int k) const; // coefficient of v^k, exponent stripped
    Poly3 substitute(int v, const Rational& value) const;

    friend Poly3 operator+(const Poly3& a, const Poly3& b);
    friend Poly3 operator-(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
    friend Poly3 operator-(const Poly3& a);
    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

    std::string str() const;
};

/**
 * Rational function in the three exponent variables, stored as an
 * unreduced fraction; equality is tested by cross-multiplication so no
 * multivariate gcd is ever needed.
 */
class Rat3 {
    Poly3 num_, den_;

public:
    Rat3() : num_(), den_(Poly3::constant(1)) {}
    Rat3(Poly3 num, Poly3 den);
    /* implicit */ Rat3(const Rational& c) : num_(Poly3::constant(c)), den_(Poly3::constant(1)) {}
    /* implicit */ Rat3(long c) : Rat3(Rational(c)) {}

    static Rat3 var(int v) { return Rat3(Poly3::var(v), Poly3::constant(1)); }

    const Poly3& num() const { return num_; }
    const Poly3& den() const { return den_; }

    bool depends_on(int v) const { return num_.degree_in(v) > 0 || den_.degree_in(v) > 0; }
    bool is_constant() const;
    Rational constant_value() const;

    Rat3 substitute(int v, const Rational& value) const;

    friend Rat3 operator+(const Rat3& a, const Rat3& b);
    friend Rat3 operator-(const Rat3& a, const Rat3& b);
    friend Rat3 operator*(const Rat3& a, const Rat3& b);
    friend Rat3 operator/(const Rat3& a, const Rat3& b);
    friend Rat3 operator-(const Rat3& a);

    /// Exact equality as rational functions (cross-multiplied).
    friend bool operator==(const Rat3& a, const Rat3& b);
    friend bool operator!=(const Rat3& a, const Rat3& b) { return !(a == b); }
};

/**
 * Limit of the rational function as variable v -> +infinity, by degree
 * comparison in v. A finite limit is again a rational function of the
 * remaining variables. An infinite limit is only reported when its sign is
 * determined (constant leading ratio); otherwise IndeterminateLimitError.
 * When the function is univariate in v with constant coefficients the
 * comparison is delegated to limit_at_infinity on UnivariatePoly values.
 */
struct Limit3 {
    enum class Kind { Finite, PlusInfinity, MinusInfinity };
    Kind kind = Kind::Finite;
    Rat3 value;
};

Limit3 limit_in(const Rat3& f, int v);

} // namespace qgdef

#endif
