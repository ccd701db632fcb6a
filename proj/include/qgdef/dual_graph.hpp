#ifndef QGDEF_DUAL_GRAPH_HPP
#define QGDEF_DUAL_GRAPH_HPP

#include <map>
#include <string>
#include <vector>

#include <qgdef/hj.hpp>
#include <qgdef/linalg.hpp>
#include <qgdef/rational.hpp>

namespace qgdef {

/// Formal Q-divisor supported on named curves of a dual graph.
using Divisor = std::map<std::string, Rational>;

/// A cluster is a set of non-retained vertices to be contracted; clusters
/// passed to the contraction operations must be connected and pairwise
/// disjoint.
using Cluster = std::vector<std::string>;

/**
 * Weighted dual graph of curves on a smooth surface: vertices carry a
 * self-intersection, a genus (default 0) and a retained marker, edges are
 * unordered pairs with multiplicity (a curve may meet another at several
 * points). Self-loops are forbidden; a nodal retained curve is modeled as
 * two transversal branches, never a loop.
 */
class DualGraph {
public:
    struct Vertex {
        long self_intersection = 0;
        long genus = 0;
        bool retained = false;

        friend bool operator==(const Vertex&, const Vertex&) = default;
    };

private:
    std::map<std::string, Vertex> vertices_;
    std::map<std::pair<std::string, std::string>, int> edges_;

    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }

public:
    void add_curve(const std::string& id, long self_intersection, bool retained = false, long genus = 0);
    void add_edge(const std::string& a, const std::string& b, int multiplicity = 1);

    bool has_vertex(const std::string& id) const { return vertices_.count(id) != 0; }
    const Vertex& vertex(const std::string& id) const;
    int edge_multiplicity(const std::string& a, const std::string& b) const;

    std::vector<std::string> vertex_ids() const;          // sorted
    std::vector<std::string> retained_ids() const;        // sorted
    const std::map<std::pair<std::string, std::string>, int>& edges() const { return edges_; }

    /// Connected components of the non-retained vertex set, each sorted;
    /// components sorted by first member.
    std::vector<Cluster> exceptional_clusters() const;

    /// D1 . D2 on the smooth surface itself (no contraction).
    Rational raw_intersection(const Divisor& d1, const Divisor& d2) const;

    std::string to_dot() const;

    friend bool operator==(const DualGraph& a, const DualGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
};

/// Symmetric matrix (E_i . E_j) over the subset, in the given order.
RationalMatrix intersection_matrix(const DualGraph& g, const Cluster& subset);

bool is_negative_definite(const DualGraph& g, const Cluster& subset);

/**
 * Pullback coefficients gamma with (D + sum gamma_i E_i) . E_j = 0 for all
 * j in the cluster. The divisor support must be disjoint from the cluster.
 * Throws NotNegativeDefiniteError if the cluster is not contractible; the
 * zero residual is re-verified after the solve.
 */
std::map<std::string, Rational> pullback(const DualGraph& g, const Divisor& divisor, const Cluster& cluster);

/// Self-intersection of the divisor image after contracting the clusters.
Rational self_intersection_contracted(const DualGraph& g, const Divisor& divisor,
                                      const std::vector<Cluster>& clusters);

/// A . (B + sum gamma(B) E) after contracting the clusters.
Rational pair_intersection_contracted(const DualGraph& g, const Divisor& a, const Divisor& b,
                                      const std::vector<Cluster>& clusters);

/// K . D on the contracted surface, via adjunction K . E = 2g(E) - 2 - E^2
/// on every curve of the resolution.
Rational canonical_intersection_contracted(const DualGraph& g, const Divisor& divisor,
                                           const std::vector<Cluster>& clusters);

/**
 * Local different of the retained curve at the contracted cluster:
 * sum_i (c_i - d_i)(E_i . C) with c the pullback coefficients of the curve
 * and d the discrepancies of the cluster. For a Hirzebruch-Jung chain met
 * at position FC_1 this equals 1 - 1/n.
 */
Rational different_at_cluster(const DualGraph& g, const std::string& retained_curve, const Cluster& cluster);

/**
 * Recognizes the cyclic quotient type of a contracted chain cluster, read
 * from the end adjacent to the anchor curve. Throws NotAChainError if the
 * cluster is not a chain, AmbiguousAnchorError if the anchor does not meet
 * the cluster exactly once at an end.
 */
CyclicQuotient cluster_quotient_type(const DualGraph& g, const Cluster& cluster, const std::string& anchor);

} // namespace qgdef

#endif
