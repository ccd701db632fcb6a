#include <qgdef/germ.hpp>

#include <algorithm>
#include <set>

namespace qgdef {

const GermComponent* GermDescription::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const DualGraph* GermDescription::find_graph(const std::string& id) const {
    auto it = graphs.find(id);
    return it == graphs.end() ? nullptr : &it->second;
}

namespace {

void require_valid(const GermDescription& g) {
    for (const Diagnostic& d : validate(g))
        if (d.severity == Diagnostic::Severity::Error)
            throw InvalidParametersError("germ '" + g.name + "': " + d.message);
}

} // namespace

std::vector<Diagnostic> validate(const GermDescription& g) {
    std::vector<Diagnostic> out;
    auto error = [&](const std::string& code, const std::string& msg) {
        out.push_back({Diagnostic::Severity::Error, code, msg});
    };
    auto warning = [&](const std::string& code, const std::string& msg) {
        out.push_back({Diagnostic::Severity::Warning, code, msg});
    };

    std::set<std::string> component_ids;
    for (const auto& c : g.components)
        if (!component_ids.insert(c.id).second)
            error("DuplicateId", "duplicate component '" + c.id + "'");

    for (const auto& c : g.components) {
        if (c.genus < 0) error("InvalidParameters", "component '" + c.id + "' has negative genus");
        if (c.normalization.kind != NormalizationData::Kind::FromGraph) continue;
        const DualGraph* graph = g.find_graph(c.normalization.graph_id);
        if (!graph) {
            error("DanglingReference", "component '" + c.id + "' references missing graph '" +
                                           c.normalization.graph_id + "'");
            continue;
        }
        if (c.normalization.divisor.empty())
            error("InvalidParameters", "component '" + c.id + "' has an empty divisor");
        for (const std::string& v : c.normalization.divisor) {
            if (!graph->has_vertex(v)) {
                error("UnknownVertex", "component '" + c.id + "' divisor uses unknown curve '" + v + "'");
            } else if (!graph->vertex(v).retained) {
                error("InvalidParameters",
                      "component '" + c.id + "' divisor uses non-retained curve '" + v + "'");
            }
        }
    }

    for (const auto& [gid, graph] : g.graphs) {
        for (const Cluster& cluster : graph.exceptional_clusters()) {
            if (!is_negative_definite(graph, cluster))
                error("NotNegativeDefinite", "graph '" + gid + "' has a non-contractible cluster at '" +
                                                 cluster.front() + "'");
        }
    }

    std::set<std::string> point_ids;
    for (const auto& p : g.points) {
        if (!point_ids.insert(p.id).second) error("DuplicateId", "duplicate point '" + p.id + "'");
        if (p.incidences.empty()) {
            error("IllegalIncidence", "point '" + p.id + "' lies on no component");
            continue;
        }
        std::set<std::string> seen;
        for (const auto& inc : p.incidences) {
            if (!g.find_component(inc.component))
                error("DanglingReference",
                      "point '" + p.id + "' lies on missing component '" + inc.component + "'");
            if (!seen.insert(inc.component).second)
                error("IllegalIncidence",
                      "point '" + p.id + "' lists component '" + inc.component + "' twice");
            if (inc.role && p.type.kind != SingularityType::Kind::DegCusp4)
                warning("IllegalIncidence", "point '" + p.id + "' carries a role on a type without slots");
        }
        if (p.branch_count < 1 || p.branch_count > 2)
            error("IllegalIncidence", "point '" + p.id + "' has branch count " +
                                          std::to_string(p.branch_count));
        if (p.branch_count == 2 && p.incidences.size() > 1)
            error("IllegalIncidence",
                  "point '" + p.id + "' over-counts branches: two components and branch count 2");
        if (p.branch_count == 2 && p.type.kind == SingularityType::Kind::Pinch)
            error("IllegalIncidence", "point '" + p.id + "': a pinch point has one branch upstairs");
        int budget = branch_budget(p.type);
        if (static_cast<int>(p.incidences.size()) > budget)
            error("IllegalIncidence", "point '" + p.id + "' lies on " +
                                          std::to_string(p.incidences.size()) +
                                          " components but its singular locus has " +
                                          std::to_string(budget) + " branches");
        if (role_required(p.type)) {
            for (const auto& inc : p.incidences)
                if (!inc.role)
                    error("RoleRequired", "point '" + p.id + "' needs a role for component '" +
                                              inc.component + "'");
        }

        // Census-graph cross-consistency, where checkable: an slt point of
        // type (n, a) puts quotient points of classes (n, a) and (n, n - a)
        // on the normalization, so some contracted cluster of the
        // component's graph should recognize one of them.
        if (p.type.kind == SingularityType::Kind::Slt) {
            for (const auto& inc : p.incidences) {
                const GermComponent* comp = g.find_component(inc.component);
                if (!comp || comp->normalization.kind != NormalizationData::Kind::FromGraph) continue;
                const DualGraph* graph = g.find_graph(comp->normalization.graph_id);
                if (!graph) continue;
                mpz_class mirror = (p.type.slt_n - p.type.slt_a) % p.type.slt_n;
                bool found = false;
                for (const Cluster& cluster : graph->exceptional_clusters()) {
                    for (const std::string& anchor : comp->normalization.divisor) {
                        try {
                            CyclicQuotient seen_type = cluster_quotient_type(*graph, cluster, anchor);
                            if (seen_type.n == p.type.slt_n &&
                                (seen_type.a == p.type.slt_a || seen_type.a == mirror))
                                found = true;
                        } catch (const Error&) {
                            // cluster not a chain or anchor elsewhere
                        }
                    }
                }
                if (!found)
                    warning("SltClusterMismatch",
                            "point '" + p.id + "': no cluster of graph '" +
                                comp->normalization.graph_id + "' is recognizable as " +
                                p.type.label());
            }
        }
    }
    return out;
}

namespace {

std::vector<Cluster> component_clusters(const DualGraph& graph) {
    return graph.exceptional_clusters();
}

struct ComponentCensus {
    Census census;
    Rational alpha_sum;
    Rational alpha_sum_example; // alpha3 replaced by alpha3 - 1
    Rational beta_sum, delta_sum;
    std::vector<std::string> torsion;
};

ComponentCensus census_of(const GermDescription& g, const std::string& component) {
    ComponentCensus out;
    for (const auto& p : g.points) {
        const PointIncidence* inc = nullptr;
        for (const auto& i : p.incidences)
            if (i.component == component) inc = &i;
        if (!inc) continue;
        using K = SingularityType::Kind;
        switch (p.type.kind) {
            case K::NormalCrossing:
            case K::Slt:
                break;
            case K::Pinch:
                out.census.pinch += 1;
                break;
            case K::DegCusp1:
                out.census.c1 += 1;
                break;
            case K::DegCusp2:
                out.census.c2 += 1;
                break;
            case K::DegCusp3: {
                out.census.c3 += 1;
                PointInvariants inv = point_invariants(p.type);
                out.alpha_sum += inv.alpha;
                out.alpha_sum_example += inv.alpha - Rational(1);
                out.beta_sum += inv.beta;
                out.delta_sum += inv.delta;
                break;
            }
            case K::DegCusp4: {
                out.census.c4 += 1;
                PointInvariants inv = point_invariants(p.type, inc->role);
                out.alpha_sum += inv.alpha;
                out.alpha_sum_example += inv.alpha;
                if (inv.census_class == CuspClass::M22r) out.census.m += 1;
                if (inv.has_beta_delta) {
                    out.beta_sum += inv.beta;
                    out.delta_sum += inv.delta;
                }
                out.torsion.push_back(p.id);
                break;
            }
        }
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

const GermComponent& checked_component(const GermDescription& g, const std::string& component) {
    const GermComponent* c = g.find_component(component);
    if (!c) throw InvalidParametersError("unknown component '" + component + "'");
    return *c;
}

} // namespace

Rational ctilde_sq(const GermDescription& g, const std::string& component) {
    const GermComponent& c = checked_component(g, component);
    if (c.normalization.kind == NormalizationData::Kind::Asserted) return c.normalization.asserted;
    const DualGraph* graph = g.find_graph(c.normalization.graph_id);
    if (!graph)
        throw InvalidParametersError("component '" + component + "' references missing graph '" +
                                     c.normalization.graph_id + "'");
    Divisor d;
    for (const std::string& id : c.normalization.divisor) d[id] = Rational(1);
    return self_intersection_contracted(*graph, d, component_clusters(*graph));
}

DegreeReport degree_L(const GermDescription& g, const std::string& component) {
    require_valid(g);
    DegreeReport rep;
    rep.component = component;
    rep.ctilde_sq = ctilde_sq(g, component);
    ComponentCensus cen = census_of(g, component);
    rep.census = cen.census;
    rep.alpha_sum = cen.alpha_sum;
    Rational base = rep.ctilde_sq + Rational(cen.census.pinch) + Rational(2 * cen.census.c1) +
                    Rational(2 * cen.census.c2);
    rep.degree_theorem = base + cen.alpha_sum;
    rep.degree_example_convention = base + cen.alpha_sum_example;
    rep.torsion_summands = cen.torsion;
    rep.degree_proof_path = degree_L_proof_path(g, component);
    return rep;
}

Rational degree_L_proof_path(const GermDescription& g, const std::string& component) {
    require_valid(g);
    ComponentCensus cen = census_of(g, component);
    Rational chat_sq = ctilde_sq(g, component) - cen.delta_sum;
    return chat_sq + cen.beta_sum + Rational(cen.census.pinch) + Rational(2 * cen.census.c1) +
           Rational(2 * cen.census.c2) + Rational(2 * cen.census.c3) + Rational(cen.census.c4);
}

std::vector<std::string> torsion_report(const GermDescription& g, const std::string& component) {
    require_valid(g);
    return census_of(g, component).torsion;
}

GenusBookkeeping genus_bookkeeping(const GermDescription& g, const std::string& component) {
    const GermComponent& c = checked_component(g, component);
    ComponentCensus cen = census_of(g, component);
    GenusBookkeeping out;
    out.pa_c = c.genus;
    out.ram_smooth = cen.census.pinch;
    out.nodes = cen.census.c1 + cen.census.c2 + cen.census.m;
    // 2 p_a(C') - 2 = 2 (2 p_a(C) - 2) + p + 2c1 + 2c2 + 2m, covering degree 2.
    Rational two_pa_minus_2 = Rational(2 * (2 * c.genus - 2) + cen.census.pinch) +
                              Rational(2 * (cen.census.c1 + cen.census.c2 + cen.census.m));
    out.pa_cprime = (two_pa_minus_2 + Rational(2)) / Rational(2);
    out.integral = out.pa_cprime.is_integer();
    return out;
}

Rational k_dot_c(const GermDescription& g, const std::string& component) {
    const GermComponent& c = checked_component(g, component);
    if (c.normalization.kind != NormalizationData::Kind::FromGraph)
        throw RequiresGraphError("k_dot_c: component '" + component + "' has no graph data");
    const DualGraph* graph = g.find_graph(c.normalization.graph_id);
    if (!graph)
        throw RequiresGraphError("k_dot_c: component '" + component + "' references missing graph");
    Divisor d;
    for (const std::string& id : c.normalization.divisor) d[id] = Rational(1);
    auto clusters = component_clusters(*graph);
    Rational k = canonical_intersection_contracted(*graph, d, clusters);
    Rational sq = self_intersection_contracted(*graph, d, clusters);
    return (k + sq) / Rational(2);
}

std::string Verdict::kind_name() const {
    switch (kind) {
        case Kind::GloballySmoothable: return "globally_smoothable";
        case Kind::NotSmoothable: return "not_smoothable";
        case Kind::ExtremalNeighborhood: return "extremal_neighborhood";
        case Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict verdict(const GermDescription& g, DegreeConvention convention) {
    require_valid(g);
    Verdict v;
    v.convention = convention;

    if (!g.assumptions.h2_tangent_vanishes) v.missing_assumptions.push_back("h2_tangent_vanishes");
    for (const auto& c : g.components)
        if (c.genus != 0) {
            v.missing_assumptions.push_back("rational_components");
            break;
        }
    if (!v.missing_assumptions.empty()) {
        v.kind = Verdict::Kind::Inconclusive;
        return v;
    }

    for (const auto& c : g.components) {
        DegreeReport rep = degree_L(g, c.id);
        Rational d = (convention == DegreeConvention::Theorem) ? rep.degree_theorem
                                                               : rep.degree_example_convention;
        v.degrees.emplace_back(c.id, d);
    }
    for (const auto& [id, d] : v.degrees) {
        if (d.sign() < 0) {
            v.kind = Verdict::Kind::NotSmoothable;
            v.witness_component = id;
            v.witness_degree = d;
            return v;
        }
    }

    for (const auto& p : g.points) v.targets.emplace_back(p.id, smoothing_target(p.type));

    if (g.assumptions.modification_of_isolated_singularity) {
        bool all_graph = true, all_negative = true;
        std::vector<std::pair<std::string, Rational>> ks;
        for (const auto& c : g.components) {
            if (c.normalization.kind != NormalizationData::Kind::FromGraph) {
                all_graph = false;
                break;
            }
            Rational k = k_dot_c(g, c.id);
            ks.emplace_back(c.id, k);
            if (k.sign() >= 0) all_negative = false;
        }
        if (all_graph && all_negative) {
            v.kind = Verdict::Kind::ExtremalNeighborhood;
            v.k_dot_c = ks;
            return v;
        }
    }

    v.kind = Verdict::Kind::GloballySmoothable;
    return v;
}

} // namespace qgdef
