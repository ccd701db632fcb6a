#include <qgdef/rational.hpp>

#include <ostream>

namespace qgdef {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw InvalidParametersError("Rational::parse: empty string");
    auto bad = [&] { throw InvalidParametersError("Rational::parse: invalid rational '" + s + "'"); };
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto pos = s.find('/');
    if (pos == std::string::npos) {
        if (!is_int(s)) bad();
        return Rational(mpz_class(s));
    }
    std::string n = s.substr(0, pos), d = s.substr(pos + 1);
    if (!is_int(n) || !is_int(d)) bad();
    mpz_class dz(d);
    if (dz == 0) bad();
    return Rational(mpz_class(n), dz);
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(n, d);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw InvalidParametersError("Rational::to_long: " + str() + " is not a small integer");
    return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace qgdef
