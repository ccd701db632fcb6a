#ifndef QGDEF_CUSP_CATALOG_HPP
#define QGDEF_CUSP_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qgdef/dual_graph.hpp>
#include <qgdef/hj.hpp>
#include <qgdef/symbolic.hpp>

namespace qgdef {

/// Natural number extended with infinity, for cusp exponents.
struct ExtNat {
    bool inf = false;
    long value = 0;

    static ExtNat finite(long v) { return ExtNat{false, v}; }
    static ExtNat infinity() { return ExtNat{true, 0}; }

    bool is_finite() const { return !inf; }
    // Order with infinity largest; used for bound checks and normalization.
    bool at_least(long bound) const { return inf || value >= bound; }

    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.inf == b.inf && (a.inf || a.value == b.value);
    }
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.value < b.value;
    }

    std::string str() const { return inf ? "inf" : std::to_string(value); }
};

/**
 * The class-qG singularity list: normal crossing, pinch point, slt quotient
 * of normal crossing, and degenerate cusps of embedding dimension at most 4
 * typed by Gamma^2 and exponents. Degenerate cusps of multiplicity 3 and 4
 * are symmetric in (p, q), which is normalized to p <= q at construction.
 */
struct SingularityType {
    enum class Kind { NormalCrossing, Pinch, Slt, DegCusp1, DegCusp2, DegCusp3, DegCusp4 };

    Kind kind = Kind::NormalCrossing;
    mpz_class slt_n, slt_a;   // Slt only
    ExtNat n;                 // DegCusp2 only, n >= 2
    ExtNat p, q, r;           // DegCusp3: p, q >= 1; DegCusp4: p, q, r >= 2

    static SingularityType normal_crossing();
    static SingularityType pinch();
    static SingularityType slt(const mpz_class& n, const mpz_class& a);
    static SingularityType cusp1();
    static SingularityType cusp2(ExtNat n);
    static SingularityType cusp3(ExtNat p, ExtNat q);
    static SingularityType cusp4(ExtNat p, ExtNat q, ExtNat r);

    bool is_degenerate_cusp() const {
        return kind == Kind::DegCusp1 || kind == Kind::DegCusp2 || kind == Kind::DegCusp3 ||
               kind == Kind::DegCusp4;
    }
    int gamma_sq() const; // degenerate cusps only

    std::string label() const; // e.g. "T4_{3,3,inf}", "slt(9,5)", "pinch"

    friend bool operator==(const SingularityType& a, const SingularityType& b);
};

/**
 * Branch slot of a degenerate cusp with reducible singular locus: Main is
 * the distinguished curve of the normal-form presentation for the declared
 * exponent pattern, Other covers the remaining branches. The slot changes
 * which exponent pattern governs the invariants seen from the component.
 */
enum class ComponentRole { Main, Other };

/// Whether an incidence role is needed to pin the invariants (asymmetric
/// infinity patterns of multiplicity-4 cusps).
bool role_required(const SingularityType& t);

/// Exponent pattern seen from a branch slot of a multiplicity-4 cusp.
SingularityType effective_cusp4_label(const SingularityType& t, ComponentRole role);

/// Number of local branches of the singular locus (1 + number of infinite
/// exponents for degenerate cusps).
int branch_budget(const SingularityType& t);

/// (multiplicity, embedding dimension) = (max(2, -G2), max(3, -G2)).
/// Throws OutOfCatalogError outside G2 in {-1,..,-4}.
std::pair<int, int> mult_embdim(int gamma_sq);

struct NormalForm {
    std::vector<std::string> equations;
    std::string curve; // chosen curve for reducible-locus cusps, else empty
};

/// The catalogued analytic normal form, with the role-specific coordinate
/// choice for multiplicity-4 cusps with reducible singular locus.
NormalForm normal_form(const SingularityType& t, std::optional<ComponentRole> role = std::nullopt);

/// T1 presentation of an index-1 point: either a quotient of C[x,y,z] by the
/// catalogued ideal, or the 4 -> 2 cokernel presentation over C[x,y,z,t].
struct T1Presentation {
    enum class Kind { QuotientRing, CokernelPresentation };
    Kind kind = Kind::QuotientRing;
    std::vector<std::string> generators;                       // QuotientRing
    std::vector<std::pair<std::string, std::string>> relations; // Cokernel rows
};

T1Presentation t1_presentation(const SingularityType& t); // SltNotPresentableError

struct TorsionProfile {
    bool embedded_point = false;      // support has an embedded point over P
    bool restriction_torsion = false; // restriction to a branch splits off C_P
};

TorsionProfile torsion_profile(const SingularityType& t);

struct SmoothingTarget {
    enum class Kind { Smooth, OrdinaryDoublePoint, CyclicQuotient3fold };
    Kind kind = Kind::Smooth;
    mpz_class n, a; // CyclicQuotient3fold only

    std::string str() const;
};

SmoothingTarget smoothing_target(const SingularityType& t);

// Closed-form invariants as rational functions of the exponents.
Rat3 expr_alpha3();   // 1 + (p+q)/(pq+p+q)
Rat3 expr_alpha4();   // (r(p+q)-4)/(rpq-p-q)
Rat3 expr_fp_sq();    // -1 - 1/p - 1/q
Rat3 expr_c_dot_fp(); // 1/p + 1/q
Rat3 expr_beta3();    // -1 + 1/p + 1/q
Rat3 expr_delta3();   // (p+q)^2/(pq(p+q+pq))
Rat3 expr_f1_sq();    // -1 - 1/(p-2) + (2r-3)/(4r-4)
Rat3 expr_f2_sq();    // -1 - 1/(q-2) + (2r-3)/(4r-4)
Rat3 expr_f1_f2();    // 1/(4r-4)
Rat3 expr_c_dot_f1(); // 1/(p-2)
Rat3 expr_c_dot_f2(); // 1/(q-2)
Rat3 expr_beta4();    // -1 + 1/(p-2) + 1/(q-2)
Rat3 expr_delta4();   // 1/(p-2) + 1/(q-2) - alpha4
Rat3 expr_betap4();   // 1/(q-2) - (2r-3)/(4r-4)
Rat3 expr_deltap4();  // (4r+q-6)^2/(4(2rq-q-2)(r-1)(q-2))

/**
 * Evaluates a closed form at extended exponents: finite values are
 * substituted, infinite ones are resolved by iterated limits at infinity in
 * the fixed variable order p, q, r. Throws IndeterminateLimitError if a
 * limit is infinite (never the case for the catalogued forms).
 */
Rational eval_ext(const Rat3& expr, ExtNat p, ExtNat q, ExtNat r);

/// Same with an explicit order of limit extraction (order-invariance tests).
Rational eval_ext_ordered(const Rat3& expr, ExtNat p, ExtNat q, ExtNat r,
                          const std::array<int, 3>& order);

Rational alpha3(ExtNat p, ExtNat q);
Rational alpha4(ExtNat p, ExtNat q, ExtNat r);

/// Census classes of the degree formula.
enum class CuspClass { Pinch, C1, C2, U3, W4, V4, M22r, Slt, NormalCrossing };

std::string cusp_class_name(CuspClass c);

struct PointInvariants {
    CuspClass census_class = CuspClass::NormalCrossing;
    Rational alpha;        // additive contribution to the degree formula
    Rational beta, delta;  // set when has_beta_delta
    bool has_beta_delta = false;
};

/// Closed-form invariants of a point as seen from an incident component.
/// Throws RoleRequiredError when the role is needed and missing.
PointInvariants point_invariants(const SingularityType& t,
                                 std::optional<ComponentRole> role = std::nullopt);

/**
 * Extended dual graphs from the resolution catalog. `resolution` is the
 * minimal resolution of the normalization with the curve preimages marked
 * retained; `partial` is the graph from which the intermediate surface of
 * the blow-up is obtained by contracting everything except `kept`, and it
 * differs from `resolution` where the catalog prescribes extra blow-ups.
 * Retained curves carry a placeholder self-intersection of 0: the germ is
 * local, so only differences of contracted values are meaningful for them.
 */
struct CuspResolution {
    bool has_graph = false;
    DualGraph resolution;
    DualGraph partial;
    std::vector<std::string> retained;
    std::vector<std::string> kept; // exceptional curves kept on the partial surface
    std::vector<std::pair<std::string, Rational>> stated; // catalog values, fixed order
    std::vector<std::string> notes;
};

CuspResolution resolution_graph(const SingularityType& t,
                                std::optional<ComponentRole> role = std::nullopt);

struct GammaSystemResult {
    Rational gamma1, gamma2, delta4;
};

/// Solves the two-by-two pullback system for the multiplicity-4 fiber pair,
/// with coefficients rederived from the catalogued intersection numbers.
/// Requires finite p, q >= 3 and r >= 2.
GammaSystemResult gamma_system_t4(long p, long q, long r);

/// Same system with the misprinted coefficient -2(pr+p-4) transcribed as
/// published; kept only so the disagreement with the rederived system can
/// be asserted.
GammaSystemResult gamma_system_t4_printed(long p, long q, long r);

struct VerificationCheck {
    std::string name;
    Rational expected, computed;
    bool agree = false;
};

struct VerificationReport {
    std::string label;
    std::vector<VerificationCheck> checks;
    bool all_agree = true;

    void add(const std::string& name, const Rational& expected, const Rational& computed);
};

/// Recomputes every catalogued invariant of the point from its resolution
/// graph via the dual-graph calculus and reports exact agreement.
VerificationReport verify_point_invariants(const SingularityType& t,
                                           std::optional<ComponentRole> role = std::nullopt);

} // namespace qgdef

#endif
