#ifndef QGDEF_GERM_HPP
#define QGDEF_GERM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <qgdef/cusp_catalog.hpp>
#include <qgdef/dual_graph.hpp>

namespace qgdef {

/// How the self-intersection of the normalization curve is supplied: either
/// asserted directly, or computed by contracting a dual graph.
struct NormalizationData {
    enum class Kind { Asserted, FromGraph };
    Kind kind = Kind::Asserted;
    Rational asserted;
    std::string graph_id;
    std::vector<std::string> divisor; // retained curve ids, coefficient 1 each
};

struct GermComponent {
    std::string id;
    long genus = 0;
    NormalizationData normalization;
};

struct PointIncidence {
    std::string component;
    std::optional<ComponentRole> role;
};

struct GermPoint {
    std::string id;
    SingularityType type;
    std::vector<PointIncidence> incidences;
    int branch_count = 1; // 2 when both branches of the point lie on one component
};

struct GermAssumptions {
    bool h2_tangent_vanishes = false;
    bool modification_of_isolated_singularity = false;
};

/// A germ of a nonnormal surface along a reduced proper curve with smooth
/// components and class-qG singularities.
struct GermDescription {
    std::string name;
    std::vector<GermComponent> components; // sorted by id after parsing
    std::vector<GermPoint> points;         // sorted by id after parsing
    std::map<std::string, DualGraph> graphs;
    GermAssumptions assumptions;

    const GermComponent* find_component(const std::string& id) const;
    const DualGraph* find_graph(const std::string& id) const;
};

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
};

/// Structural checks: dangling references, incidence legality, contraction
/// definiteness. Diagnostics are collected, not thrown.
std::vector<Diagnostic> validate(const GermDescription& g);

/// Self-intersection of the normalization curve of the component, asserted
/// or computed from the referenced graph.
Rational ctilde_sq(const GermDescription& g, const std::string& component);

struct Census {
    long pinch = 0;
    long c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    long m = 0; // multiplicity-4 cusps with p = q = 2, a subset of c4
};

struct DegreeReport {
    std::string component;
    Rational ctilde_sq;
    Census census;
    Rational alpha_sum;
    Rational degree_theorem;
    Rational degree_example_convention; // alpha3 replaced by alpha3 - 1
    std::optional<Rational> degree_proof_path;
    std::vector<std::string> torsion_summands; // embedding-dimension-4 cusp ids
};

DegreeReport degree_L(const GermDescription& g, const std::string& component);

/// Degree along the proof decomposition: d = (C~^2 - sum delta) + sum beta
/// + p + 2c1 + 2c2 + 2c3 + c4. Must agree with the theorem value exactly.
Rational degree_L_proof_path(const GermDescription& g, const std::string& component);

/// The embedding-dimension-4 cusps on the component, sorted by id.
std::vector<std::string> torsion_report(const GermDescription& g, const std::string& component);

struct GenusBookkeeping {
    long pa_c = 0;          // arithmetic genus of the component
    Rational pa_cprime;     // from the ramification formula; integral when consistent
    long ram_smooth = 0;    // smooth ramification points (pinch count)
    long nodes = 0;         // nodes of the curve upstairs: c1 + c2 + m
    bool integral = true;   // parity check on the census
};

GenusBookkeeping genus_bookkeeping(const GermDescription& g, const std::string& component);

/// K_H . C by subadjunction: half of (K + C~) . C~ on the normalization,
/// the half being the degree of the double-curve covering. Needs graph data.
Rational k_dot_c(const GermDescription& g, const std::string& component);

enum class DegreeConvention { Theorem, Example };

struct Verdict {
    enum class Kind { GloballySmoothable, NotSmoothable, ExtremalNeighborhood, Inconclusive };
    Kind kind = Kind::Inconclusive;
    DegreeConvention convention = DegreeConvention::Theorem;
    std::vector<std::string> missing_assumptions;            // Inconclusive
    std::string witness_component;                           // NotSmoothable
    Rational witness_degree;                                 // NotSmoothable
    std::vector<std::pair<std::string, Rational>> degrees;   // per component
    std::vector<std::pair<std::string, Rational>> k_dot_c;   // ExtremalNeighborhood
    std::vector<std::pair<std::string, SmoothingTarget>> targets; // smoothable cases

    std::string kind_name() const;
};

Verdict verdict(const GermDescription& g, DegreeConvention convention = DegreeConvention::Theorem);

} // namespace qgdef

#endif
