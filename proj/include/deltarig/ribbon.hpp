#ifndef DELTARIG_RIBBON_HPP
#define DELTARIG_RIBBON_HPP

#include "deltarig/deltamatroid.hpp"

#include <string>
#include <vector>

namespace deltarig {

struct RibbonEdge {
    int d1;
    int d2;
    int sign;  // +1 untwisted, -1 twisted
    std::string label;
};

struct SubgraphMetrics {
    int components;   // c(A), counting isolated vertices
    int rank;         // r(A) = |V| - c(A)
    int boundary;     // b(A)
    int euler_genus;  // gamma(A) = 2c(A) - |V| + |A| - b(A)
    int sigma2;       // 2r(A) + gamma(A)
};

/// Ribbon graph as a signed rotation system: darts partitioned into
/// per-vertex cyclic rotations and a perfect matching of darts into edges.
/// Vertices may be dartless (isolated discs).
///
/// Boundary tracing convention: each dart has a left and a right side-point.
/// Going around a vertex disc, the corner arc joins the right side of a dart
/// to the left side of the next dart in rotation order. Along an untwisted
/// edge the two ribbon sides join left-to-right across the edge; a twisted
/// edge joins left-to-left and right-to-right. Boundary components are the
/// cycles of the resulting 2-regular graph on side-points; every vertex with
/// no incident edge in the chosen subset contributes one boundary component.
class RibbonGraph {
public:
    /// Checks the partition/matching invariants; descriptive errors on
    /// duplicated darts, unmatched darts, or an odd dart count.
    static RibbonGraph validate(std::vector<std::vector<int>> rotations,
                                std::vector<RibbonEdge> edges);

    int num_vertices() const { return static_cast<int>(rotations_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::vector<RibbonEdge>& edges() const { return edges_; }
    Mask full_edge_mask() const {
        return num_edges() == 0 ? 0 : (Mask(1) << num_edges()) - 1;
    }

    int edge_index(const std::string& label) const;  // throws on unknown edge
    Mask edge_mask_of(const std::vector<std::string>& labels) const;

    bool orientable() const;

    int boundary_components(Mask edge_subset) const;
    SubgraphMetrics metrics(Mask edge_subset) const;

    /// All subsets whose induced ribbon subgraph is a spanning quasi-tree:
    /// one boundary component within each connected component of the graph.
    std::vector<Mask> quasi_tree_sets() const;

    /// D(G): ground set = edge labels, feasible = spanning quasi-trees.
    /// Runs the symmetric exchange validation as an internal sanity check.
    DeltaMatroid delta_matroid() const;

    static RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b);

    /// Merges vertex v1 of a and v2 of b into a single vertex: the rotation
    /// of v2 is spliced into the rotation of v1 at the chosen gaps. A gap
    /// position k lies between rotation entries k-1 and k (0 = before the
    /// first dart). Both vertices must be non-isolated.
    static RibbonGraph join(const RibbonGraph& a, int v1, int pos1, const RibbonGraph& b, int v2,
                            int pos2);

private:
    RibbonGraph() = default;
    void index_darts();

    std::vector<std::vector<int>> rotations_;
    std::vector<RibbonEdge> edges_;

    // derived indices over compacted dart ids 0..2m-1
    std::vector<int> dart_ids_;                 // compact id -> original dart id
    std::vector<int> dart_vertex_;              // compact id -> vertex
    std::vector<int> dart_edge_;                // compact id -> edge index
    std::vector<std::vector<int>> compact_rot_; // rotations in compact ids
    int compact_of(int dart) const;
};

}  // namespace deltarig

#endif
