#include <qgdef/poly.hpp>

#include <algorithm>

namespace qgdef {

Rational UnivariatePoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(c));
}

std::string ExtRational::str() const {
    switch (kind) {
        case Kind::PlusInfinity: return "+inf";
        case Kind::MinusInfinity: return "-inf";
        default: return value.str();
    }
}

ExtRational limit_at_infinity(const UnivariatePoly& num, const UnivariatePoly& den) {
    if (den.is_zero())
        throw ZeroDenominatorPolynomialError("limit_at_infinity: zero denominator polynomial");
    if (num.is_zero()) return ExtRational::finite(Rational(0));
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return ExtRational::finite(Rational(0));
    Rational ratio = num.leading() / den.leading();
    if (dn == dd) return ExtRational::finite(ratio);
    return ratio.sign() > 0 ? ExtRational::plus_infinity() : ExtRational::minus_infinity();
}

} // namespace qgdef
