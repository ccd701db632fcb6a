#ifndef QGDEF_HJ_HPP
#define QGDEF_HJ_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include <qgdef/rational.hpp>

namespace qgdef {

/// Cyclic quotient surface singularity 1/n(1,a), with n >= 2, 1 <= a < n
/// and gcd(n,a) = 1.
struct CyclicQuotient {
    mpz_class n, a;

    static CyclicQuotient make(mpz_class n, mpz_class a);
    static CyclicQuotient make(long n, long a) { return make(mpz_class(n), mpz_class(a)); }

    // "1/n(1,a)"
    std::string str() const;

    friend bool operator==(const CyclicQuotient& x, const CyclicQuotient& y) {
        return x.n == y.n && x.a == y.a;
    }
};

/// Exceptional chain of the minimal resolution: curve self-intersections are
/// -weights[i], every weight >= 2. The first weight is the curve met by a
/// curve of type FC_1 entering from the a-side.
struct HJChain {
    std::vector<long> weights;

    std::string str() const; // "[b1,...,bm]"
};

/// Continued fraction expansion n/a = b1 - 1/(b2 - ...).
HJChain hj_expand(const CyclicQuotient& q);

/// Inverse of hj_expand; reading the reversed chain yields the conjugate type.
/// Throws WeightBelowTwoError if some weight is < 2.
CyclicQuotient chain_to_type(const HJChain& c);

/// (n, a') with a*a' == 1 (mod n); involutive.
CyclicQuotient conjugate_type(const CyclicQuotient& q);

/**
 * Discrepancies d_1..d_m of the chain: the unique solution of
 * sum_i d_i (E_i . E_j) = -2 - E_j^2 for every j (adjunction for rational
 * curves). The first entry equals (a - n + 1)/n; all entries lie in (-1, 0].
 */
std::vector<Rational> discrepancy_vector(const CyclicQuotient& q);

/// Diff(C, 0 in H) = 1 - 1/n for a curve of type FC_1 through a 1/n(1,a)
/// point. n = 1 is accepted as the smooth-point sentinel (contributes 0).
Rational diff_closed_form(long n);

/**
 * Blow-up facts for an slt point (xy=0)/Z_n(a,-a,1): the two quotient types
 * on the exceptional divisor E, the two 3-fold quotient type labels on Y,
 * and K_Y.F = -1/n for odd n, -2/n for even n.
 *
 * The E-singularity data is stored as raw residues (n, 2a mod n) and
 * (n, -2a mod n); for even n these residues are not coprime to n, so they
 * are catalog labels rather than validated CyclicQuotient values.
 */
struct SltBlowupFacts {
    mpz_class n, a;
    mpz_class e_residue_1, e_residue_2; // 2a mod n, -2a mod n
    std::string y_type_1, y_type_2;     // 3-fold quotient type labels
    Rational ky_dot_f;

    std::string e_label_1() const; // "1/n(1,r1)"
    std::string e_label_2() const;
};

SltBlowupFacts slt_blowup_facts(long n, long a);
SltBlowupFacts slt_blowup_facts(const mpz_class& n, const mpz_class& a);

/// Constant facts for the blow-up over an ordinary double point xy - zt = 0
/// containing a smooth curve of the double locus.
struct OdpBlowupFacts {
    int fiber_components;      // two rational curves meeting transversally
    Rational ky_dot_fiber;     // -1/2 for each component
    Rational fhat_sq;          // -1/2 on the normalized surface
    std::string e_singularity; // A_1 point of E at the node of the fiber
};

OdpBlowupFacts odp_blowup_facts();

} // namespace qgdef

#endif
