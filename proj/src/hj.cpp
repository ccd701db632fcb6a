#include <qgdef/hj.hpp>

#include <qgdef/linalg.hpp>

namespace qgdef {

CyclicQuotient CyclicQuotient::make(mpz_class n, mpz_class a) {
    if (n < 2 || a < 1 || a >= n)
        throw InvalidParametersError("CyclicQuotient: need n >= 2 and 1 <= a < n");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), a.get_mpz_t());
    if (g != 1) throw InvalidParametersError("CyclicQuotient: gcd(n, a) must be 1");
    return CyclicQuotient{std::move(n), std::move(a)};
}

std::string CyclicQuotient::str() const {
    return "1/" + n.get_str() + "(1," + a.get_str() + ")";
}

std::string HJChain::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights[i]);
    }
    return s + "]";
}

HJChain hj_expand(const CyclicQuotient& q) {
    HJChain chain;
    mpz_class n = q.n, a = q.a;
    while (true) {
        if (chain.weights.size() > 1000000)
            throw InvalidParametersError("hj_expand: chain longer than 10^6 curves");
        mpz_class b;
        mpz_cdiv_q(b.get_mpz_t(), n.get_mpz_t(), a.get_mpz_t());
        if (!b.fits_slong_p())
            throw InvalidParametersError("hj_expand: chain weight does not fit a long");
        chain.weights.push_back(b.get_si());
        mpz_class r = b * a - n;
        if (r == 0) break;
        n = a;
        a = r;
    }
    return chain;
}

CyclicQuotient chain_to_type(const HJChain& c) {
    if (c.weights.empty()) throw InvalidParametersError("chain_to_type: empty chain");
    for (long w : c.weights)
        if (w < 2) throw WeightBelowTwoError("chain_to_type: weight " + std::to_string(w) + " < 2");
    // Evaluate b1 - 1/(b2 - ...) from the right as num/den.
    mpz_class num = c.weights.back(), den = 1;
    for (std::size_t i = c.weights.size() - 1; i-- > 0;) {
        mpz_class nn = c.weights[i] * num - den;
        den = num;
        num = nn;
    }
    return CyclicQuotient::make(num, den);
}

CyclicQuotient conjugate_type(const CyclicQuotient& q) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), q.a.get_mpz_t(), q.n.get_mpz_t()) == 0)
        throw InvalidParametersError("conjugate_type: a not invertible mod n");
    return CyclicQuotient::make(q.n, inv);
}

std::vector<Rational> discrepancy_vector(const CyclicQuotient& q) {
    HJChain chain = hj_expand(q);
    const std::size_t m = chain.weights.size();
    RationalMatrix mat(m, m);
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        mat.at(i, i) = Rational(-chain.weights[i]);
        if (i + 1 < m) {
            mat.at(i, i + 1) = Rational(1);
            mat.at(i + 1, i) = Rational(1);
        }
        rhs[i] = Rational(chain.weights[i] - 2); // -2 - E_i^2
    }
    return solve_linear_system(mat, rhs);
}

Rational diff_closed_form(long n) {
    if (n < 1) throw InvalidParametersError("diff_closed_form: n must be >= 1");
    return Rational(n - 1, n);
}

SltBlowupFacts slt_blowup_facts(const mpz_class& n, const mpz_class& a) {
    CyclicQuotient::make(n, a); // validates n, a
    mpz_class r1 = (2 * a) % n;
    mpz_class r2 = (n - r1) % n;
    SltBlowupFacts f;
    f.n = n;
    f.a = a;
    f.e_residue_1 = r1;
    f.e_residue_2 = r2;
    mpz_class ma = (n - a) % n, m2a = r2, p2a = r1;
    f.y_type_1 = "1/" + n.get_str() + "(" + a.get_str() + "," + m2a.get_str() + ",1)";
    f.y_type_2 = "1/" + n.get_str() + "(" + ma.get_str() + "," + p2a.get_str() + ",1)";
    bool odd = mpz_odd_p(n.get_mpz_t()) != 0;
    f.ky_dot_f = Rational(odd ? -1 : -2, 1) / Rational(n);
    return f;
}

SltBlowupFacts slt_blowup_facts(long n, long a) {
    return slt_blowup_facts(mpz_class(n), mpz_class(a));
}

std::string SltBlowupFacts::e_label_1() const {
    return "1/" + n.get_str() + "(1," + e_residue_1.get_str() + ")";
}

std::string SltBlowupFacts::e_label_2() const {
    return "1/" + n.get_str() + "(1," + e_residue_2.get_str() + ")";
}

OdpBlowupFacts odp_blowup_facts() {
    return OdpBlowupFacts{2, Rational(-1, 2), Rational(-1, 2), "(xy-z^2=0)"};
}

} // namespace qgdef
