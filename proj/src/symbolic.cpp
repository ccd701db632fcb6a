#include <qgdef/symbolic.hpp>

#include <sstream>

namespace qgdef {

void Poly3::put(const std::array<int, 3>& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly3 Poly3::constant(const Rational& c) {
    Poly3 p;
    p.put({0, 0, 0}, c);
    return p;
}

Poly3 Poly3::var(int v) {
    Poly3 p;
    std::array<int, 3> e{0, 0, 0};
    e[v] = 1;
    p.put(e, Rational(1));
    return p;
}

bool Poly3::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::array<int, 3>{0, 0, 0});
}

Rational Poly3::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InvalidParametersError("Poly3: not a constant");
    return terms_.begin()->second;
}

int Poly3::degree_in(int v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

Poly3 Poly3::coefficient_in(int v, int k) const {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        if (e[v] != k) continue;
        std::array<int, 3> f = e;
        f[v] = 0;
        out.put(f, c);
    }
    return out;
}

Poly3 Poly3::substitute(int v, const Rational& value) const {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        std::array<int, 3> f = e;
        f[v] = 0;
        out.put(f, c * value.pow(static_cast<unsigned long>(e[v])));
    }
    return out;
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
    Poly3 out = a;
    for (const auto& [e, c] : b.terms_) out.put(e, c);
    return out;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
    Poly3 out = a;
    for (const auto& [e, c] : b.terms_) out.put(e, -c);
    return out;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.put({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

Poly3 operator-(const Poly3& a) {
    Poly3 out;
    for (const auto& [e, c] : a.terms_) out.put(e, -c);
    return out;
}

std::string Poly3::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"p", "q", "r"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            os << "*" << names[v];
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

Rat3::Rat3(Poly3 num, Poly3 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidParametersError("Rat3: zero denominator");
}

bool Rat3::is_constant() const {
    return num_.is_constant() && den_.is_constant();
}

Rational Rat3::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

Rat3 Rat3::substitute(int v, const Rational& value) const {
    return Rat3(num_.substitute(v, value), den_.substitute(v, value));
}

Rat3 operator+(const Rat3& a, const Rat3& b) { return Rat3(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
Rat3 operator-(const Rat3& a, const Rat3& b) { return Rat3(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
Rat3 operator*(const Rat3& a, const Rat3& b) { return Rat3(a.num_ * b.num_, a.den_ * b.den_); }
Rat3 operator/(const Rat3& a, const Rat3& b) {
    if (b.num_.is_zero()) throw InvalidParametersError("Rat3: division by zero");
    return Rat3(a.num_ * b.den_, a.den_ * b.num_);
}
Rat3 operator-(const Rat3& a) { return Rat3(-a.num_, a.den_); }

bool operator==(const Rat3& a, const Rat3& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

namespace {

// A Rat3 univariate in v with constant coefficients, as a UnivariatePoly pair.
bool univariate_in(const Poly3& p, int v, UnivariatePoly& out) {
    int d = p.degree_in(v);
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (int k = 0; k <= d; ++k) {
        Poly3 c = p.coefficient_in(v, k);
        if (!c.is_constant()) return false;
        coeffs[static_cast<std::size_t>(k)] = c.constant_value();
    }
    out = UnivariatePoly(std::move(coeffs));
    return true;
}

} // namespace

Limit3 limit_in(const Rat3& f, int v) {
    // Single remaining variable: route through the univariate limit.
    UnivariatePoly un, ud;
    if (univariate_in(f.num(), v, un) && univariate_in(f.den(), v, ud)) {
        ExtRational lim = limit_at_infinity(un, ud);
        switch (lim.kind) {
            case ExtRational::Kind::Finite: return {Limit3::Kind::Finite, Rat3(lim.value)};
            case ExtRational::Kind::PlusInfinity: return {Limit3::Kind::PlusInfinity, Rat3()};
            default: return {Limit3::Kind::MinusInfinity, Rat3()};
        }
    }

    if (f.num().is_zero()) return {Limit3::Kind::Finite, Rat3()};
    int dn = f.num().degree_in(v);
    int dd = f.den().degree_in(v);
    if (dn < dd) return {Limit3::Kind::Finite, Rat3()};
    Rat3 lead(f.num().coefficient_in(v, dn), f.den().coefficient_in(v, dd));
    if (dn == dd) return {Limit3::Kind::Finite, lead};
    if (!lead.is_constant())
        throw IndeterminateLimitError("limit_in: infinite limit with symbolic sign");
    Rational c = lead.constant_value();
    if (c.is_zero()) throw IndeterminateLimitError("limit_in: vanishing leading ratio");
    return {c.sign() > 0 ? Limit3::Kind::PlusInfinity : Limit3::Kind::MinusInfinity, Rat3()};
}

} // namespace qgdef
