#include <qgdef/dual_graph.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace qgdef {

void DualGraph::add_curve(const std::string& id, long self_intersection, bool retained, long genus) {
    if (vertices_.count(id))
        throw InvalidParametersError("DualGraph: duplicate curve '" + id + "'");
    if (genus < 0) throw InvalidParametersError("DualGraph: negative genus on '" + id + "'");
    vertices_[id] = Vertex{self_intersection, genus, retained};
}

void DualGraph::add_edge(const std::string& a, const std::string& b, int multiplicity) {
    if (a == b) throw SelfLoopForbiddenError("DualGraph: self-loop on '" + a + "'");
    if (!has_vertex(a)) throw UnknownVertexError("DualGraph: unknown curve '" + a + "'");
    if (!has_vertex(b)) throw UnknownVertexError("DualGraph: unknown curve '" + b + "'");
    if (multiplicity < 1) throw InvalidParametersError("DualGraph: edge multiplicity must be >= 1");
    edges_[key(a, b)] += multiplicity;
}

const DualGraph::Vertex& DualGraph::vertex(const std::string& id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw UnknownVertexError("DualGraph: unknown curve '" + id + "'");
    return it->second;
}

int DualGraph::edge_multiplicity(const std::string& a, const std::string& b) const {
    auto it = edges_.find(key(a, b));
    return it == edges_.end() ? 0 : it->second;
}

std::vector<std::string> DualGraph::vertex_ids() const {
    std::vector<std::string> ids;
    for (const auto& [id, v] : vertices_) ids.push_back(id);
    return ids;
}

std::vector<std::string> DualGraph::retained_ids() const {
    std::vector<std::string> ids;
    for (const auto& [id, v] : vertices_)
        if (v.retained) ids.push_back(id);
    return ids;
}

std::vector<Cluster> DualGraph::exceptional_clusters() const {
    std::set<std::string> seen;
    std::vector<Cluster> clusters;
    for (const auto& [id, v] : vertices_) {
        if (v.retained || seen.count(id)) continue;
        Cluster comp;
        std::vector<std::string> stack{id};
        seen.insert(id);
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (const auto& [e, mult] : edges_) {
                std::string other;
                if (e.first == cur) other = e.second;
                else if (e.second == cur) other = e.first;
                else continue;
                if (vertices_.at(other).retained || seen.count(other)) continue;
                seen.insert(other);
                stack.push_back(other);
            }
        }
        std::sort(comp.begin(), comp.end());
        clusters.push_back(std::move(comp));
    }
    std::sort(clusters.begin(), clusters.end());
    return clusters;
}

Rational DualGraph::raw_intersection(const Divisor& d1, const Divisor& d2) const {
    Rational total(0);
    for (const auto& [v, cv] : d1) {
        const Vertex& vv = vertex(v);
        for (const auto& [w, cw] : d2) {
            if (v == w) total += cv * cw * Rational(vv.self_intersection);
            else total += cv * cw * Rational(edge_multiplicity(v, w));
        }
    }
    return total;
}

std::string DualGraph::to_dot() const {
    std::ostringstream os;
    os << "graph dual {\n";
    for (const auto& [id, v] : vertices_) {
        os << "  \"" << id << "\" [label=\"" << id << "(" << v.self_intersection << ")\"";
        if (v.retained) os << " shape=box";
        os << "];\n";
    }
    for (const auto& [e, mult] : edges_)
        for (int k = 0; k < mult; ++k)
            os << "  \"" << e.first << "\" -- \"" << e.second << "\";\n";
    os << "}\n";
    return os.str();
}

namespace {

Rational divisor_dot_vertex(const DualGraph& g, const Divisor& d, const std::string& j) {
    Rational s(0);
    for (const auto& [v, c] : d) {
        if (v == j) s += c * Rational(g.vertex(j).self_intersection);
        else s += c * Rational(g.edge_multiplicity(v, j));
    }
    return s;
}

void check_disjoint_support(const Divisor& d, const Cluster& cluster) {
    for (const std::string& id : cluster)
        if (d.count(id))
            throw InvalidParametersError("pullback: divisor support meets cluster at '" + id + "'");
}

} // namespace

RationalMatrix intersection_matrix(const DualGraph& g, const Cluster& subset) {
    const std::size_t m = subset.size();
    RationalMatrix mat(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        mat.at(i, i) = Rational(g.vertex(subset[i]).self_intersection);
        for (std::size_t j = i + 1; j < m; ++j) {
            Rational e(g.edge_multiplicity(subset[i], subset[j]));
            mat.at(i, j) = e;
            mat.at(j, i) = e;
        }
    }
    return mat;
}

bool is_negative_definite(const DualGraph& g, const Cluster& subset) {
    if (subset.empty()) return false;
    return is_negative_definite(intersection_matrix(g, subset));
}

std::map<std::string, Rational> pullback(const DualGraph& g, const Divisor& divisor, const Cluster& cluster) {
    check_disjoint_support(divisor, cluster);
    if (!is_negative_definite(g, cluster))
        throw NotNegativeDefiniteError("pullback: cluster is not negative definite");
    RationalMatrix m = intersection_matrix(g, cluster);
    std::vector<Rational> rhs(cluster.size());
    for (std::size_t j = 0; j < cluster.size(); ++j)
        rhs[j] = -divisor_dot_vertex(g, divisor, cluster[j]);
    std::vector<Rational> gamma = solve_linear_system(m, rhs);

    // (D + sum gamma E) . E_j must vanish exactly.
    for (std::size_t j = 0; j < cluster.size(); ++j) {
        Rational residual = -rhs[j];
        for (std::size_t i = 0; i < cluster.size(); ++i) residual += gamma[i] * m.at(i, j);
        if (!residual.is_zero())
            throw Error("pullback: nonzero residual at '" + cluster[j] + "'");
    }

    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < cluster.size(); ++i) out[cluster[i]] = gamma[i];
    return out;
}

namespace {

void check_clusters(const DualGraph& g, const Divisor& divisor, const std::vector<Cluster>& clusters) {
    std::set<std::string> seen;
    for (const Cluster& c : clusters) {
        check_disjoint_support(divisor, c);
        for (const std::string& id : c) {
            g.vertex(id); // UnknownVertexError on bad ids
            if (!seen.insert(id).second)
                throw InvalidParametersError("contraction: clusters overlap at '" + id + "'");
        }
    }
}

} // namespace

Rational self_intersection_contracted(const DualGraph& g, const Divisor& divisor,
                                      const std::vector<Cluster>& clusters) {
    check_clusters(g, divisor, clusters);
    Rational total = g.raw_intersection(divisor, divisor);
    for (const Cluster& c : clusters) {
        auto gamma = pullback(g, divisor, c);
        for (const auto& [id, coeff] : gamma)
            total += coeff * divisor_dot_vertex(g, divisor, id);
    }
    return total;
}

Rational pair_intersection_contracted(const DualGraph& g, const Divisor& a, const Divisor& b,
                                      const std::vector<Cluster>& clusters) {
    check_clusters(g, a, clusters);
    check_clusters(g, b, clusters);
    Rational total = g.raw_intersection(a, b);
    for (const Cluster& c : clusters) {
        auto gamma = pullback(g, b, c);
        for (const auto& [id, coeff] : gamma)
            total += coeff * divisor_dot_vertex(g, a, id);
    }
    return total;
}

Rational canonical_intersection_contracted(const DualGraph& g, const Divisor& divisor,
                                           const std::vector<Cluster>& clusters) {
    check_clusters(g, divisor, clusters);
    auto k_dot = [&](const std::string& id) {
        const auto& v = g.vertex(id);
        return Rational(2 * v.genus - 2 - v.self_intersection);
    };
    Rational total(0);
    for (const auto& [id, c] : divisor) total += c * k_dot(id);
    for (const Cluster& c : clusters) {
        auto gamma = pullback(g, divisor, c);
        for (const auto& [id, coeff] : gamma) total += coeff * k_dot(id);
    }
    return total;
}

Rational different_at_cluster(const DualGraph& g, const std::string& retained_curve, const Cluster& cluster) {
    Divisor d{{retained_curve, Rational(1)}};
    auto c = pullback(g, d, cluster);

    RationalMatrix m = intersection_matrix(g, cluster);
    std::vector<Rational> rhs(cluster.size());
    for (std::size_t j = 0; j < cluster.size(); ++j) {
        const auto& v = g.vertex(cluster[j]);
        rhs[j] = Rational(2 * v.genus - 2 - v.self_intersection);
    }
    std::vector<Rational> disc = solve_linear_system(m, rhs);

    Rational total(0);
    for (std::size_t i = 0; i < cluster.size(); ++i)
        total += (c.at(cluster[i]) - disc[i]) * Rational(g.edge_multiplicity(retained_curve, cluster[i]));
    return total;
}

CyclicQuotient cluster_quotient_type(const DualGraph& g, const Cluster& cluster, const std::string& anchor) {
    if (cluster.empty()) throw NotAChainError("cluster_quotient_type: empty cluster");
    if (!g.has_vertex(anchor)) throw UnknownVertexError("cluster_quotient_type: unknown anchor '" + anchor + "'");
    std::set<std::string> members(cluster.begin(), cluster.end());
    if (members.count(anchor)) throw InvalidParametersError("cluster_quotient_type: anchor inside cluster");

    // Internal adjacency; any multiple edge or branch vertex disqualifies a chain.
    std::map<std::string, std::vector<std::string>> adj;
    for (const std::string& v : cluster) {
        for (const std::string& w : cluster) {
            if (v >= w) continue;
            int mult = g.edge_multiplicity(v, w);
            if (mult == 0) continue;
            if (mult > 1) throw NotAChainError("cluster_quotient_type: multiple edge inside cluster");
            adj[v].push_back(w);
            adj[w].push_back(v);
        }
    }
    for (const std::string& v : cluster)
        if (adj[v].size() > 2) throw NotAChainError("cluster_quotient_type: branch vertex '" + v + "'");

    std::vector<std::string> ends;
    for (const std::string& v : cluster)
        if (adj[v].size() <= 1) ends.push_back(v);
    if (cluster.size() > 1 && ends.size() != 2)
        throw NotAChainError("cluster_quotient_type: cluster is not a chain");

    // The anchor must meet the cluster exactly once, at an end.
    std::string start;
    int hits = 0;
    for (const std::string& v : cluster) {
        int mult = g.edge_multiplicity(anchor, v);
        if (mult == 0) continue;
        hits += mult;
        start = v;
    }
    if (hits != 1) throw AmbiguousAnchorError("cluster_quotient_type: anchor meets cluster " +
                                              std::to_string(hits) + " times");
    if (cluster.size() > 1 && adj[start].size() != 1)
        throw AmbiguousAnchorError("cluster_quotient_type: anchor attached to a middle curve");

    HJChain chain;
    std::string prev, cur = start;
    while (true) {
        chain.weights.push_back(-g.vertex(cur).self_intersection);
        std::string next;
        for (const std::string& w : adj[cur])
            if (w != prev) next = w;
        if (next.empty()) break;
        prev = cur;
        cur = next;
    }
    if (chain.weights.size() != cluster.size())
        throw NotAChainError("cluster_quotient_type: cluster is disconnected");
    return chain_to_type(chain);
}

} // namespace qgdef
