#include "deltarig/ribbon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace deltarig {

void RibbonGraph::index_darts() {
    std::map<int, int> compact;
    dart_ids_.clear();
    dart_vertex_.clear();
    dart_edge_.clear();
    compact_rot_.assign(rotations_.size(), {});
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
        for (int d : rotations_[v]) {
            compact[d] = static_cast<int>(dart_ids_.size());
            dart_ids_.push_back(d);
            dart_vertex_.push_back(static_cast<int>(v));
        }
    }
    dart_edge_.assign(dart_ids_.size(), -1);
    for (std::size_t v = 0; v < rotations_.size(); ++v)
        for (int d : rotations_[v]) compact_rot_[v].push_back(compact.at(d));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        dart_edge_[static_cast<std::size_t>(compact.at(edges_[e].d1))] = static_cast<int>(e);
        dart_edge_[static_cast<std::size_t>(compact.at(edges_[e].d2))] = static_cast<int>(e);
    }
}

int RibbonGraph::compact_of(int dart) const {
    for (std::size_t i = 0; i < dart_ids_.size(); ++i)
        if (dart_ids_[i] == dart) return static_cast<int>(i);
    throw std::invalid_argument("unknown dart " + std::to_string(dart));
}

RibbonGraph RibbonGraph::validate(std::vector<std::vector<int>> rotations,
                                  std::vector<RibbonEdge> edges) {
    std::map<int, int> seen;  // dart -> occurrences in rotations
    for (const auto& rot : rotations)
        for (int d : rot)
            if (++seen[d] > 1)
                throw std::invalid_argument("dart " + std::to_string(d) +
                                            " appears in two rotations");
    if (seen.size() % 2 != 0) throw std::invalid_argument("odd dart count");
    if (edges.size() * 2 != seen.size())
        throw std::invalid_argument("edge count does not match dart count");

    std::map<int, int> matched;  // dart -> occurrences in edges
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& ed = edges[e];
        if (ed.sign != 1 && ed.sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
        if (ed.d1 == ed.d2) throw std::invalid_argument("edge pairs a dart with itself");
        for (int d : {ed.d1, ed.d2}) {
            if (!seen.count(d))
                throw std::invalid_argument("dart " + std::to_string(d) +
                                            " missing from rotations");
            if (++matched[d] > 1)
                throw std::invalid_argument("dart " + std::to_string(d) + " matched twice");
        }
    }
    for (const auto& [d, n] : seen)
        if (!matched.count(d))
            throw std::invalid_argument("dart " + std::to_string(d) + " unmatched by any edge");

    RibbonGraph g;
    g.rotations_ = std::move(rotations);
    g.edges_ = std::move(edges);
    g.index_darts();
    return g;
}

int RibbonGraph::edge_index(const std::string& label) const {
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].label == label) return static_cast<int>(e);
    throw std::invalid_argument("unknown edge: " + label);
}

Mask RibbonGraph::edge_mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= Mask(1) << edge_index(l);
    return m;
}

bool RibbonGraph::orientable() const {
    // orientable iff vertex signs exist making every edge sign positive
    const int nv = num_vertices();
    std::vector<int> sign(static_cast<std::size_t>(nv), 0);
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
    for (const auto& ed : edges_) {
        const int u = dart_vertex_[static_cast<std::size_t>(compact_of(ed.d1))];
        const int v = dart_vertex_[static_cast<std::size_t>(compact_of(ed.d2))];
        adj[static_cast<std::size_t>(u)].push_back({v, ed.sign});
        adj[static_cast<std::size_t>(v)].push_back({u, ed.sign});
    }
    for (int s = 0; s < nv; ++s) {
        if (sign[static_cast<std::size_t>(s)] != 0) continue;
        sign[static_cast<std::size_t>(s)] = 1;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& [v, es] : adj[static_cast<std::size_t>(u)]) {
                const int want = sign[static_cast<std::size_t>(u)] * es;
                if (sign[static_cast<std::size_t>(v)] == 0) {
                    sign[static_cast<std::size_t>(v)] = want;
                    stack.push_back(v);
                } else if (sign[static_cast<std::size_t>(v)] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

int RibbonGraph::boundary_components(Mask edge_subset) const {
    if ((edge_subset & ~full_edge_mask()) != 0) throw std::invalid_argument("unknown edge");
    const int nd = static_cast<int>(dart_ids_.size());
    std::vector<bool> active(static_cast<std::size_t>(nd), false);
    for (int d = 0; d < nd; ++d)
        active[static_cast<std::size_t>(d)] =
            ((edge_subset >> dart_edge_[static_cast<std::size_t>(d)]) & 1u) != 0;

    // side-point id: 2*dart for left, 2*dart+1 for right
    std::vector<int> corner(static_cast<std::size_t>(2 * nd), -1);  // corner-arc partner
    std::vector<int> ribbon(static_cast<std::size_t>(2 * nd), -1);  // edge-side partner
    int boundaries = 0;

    for (const auto& rot : compact_rot_) {
        std::vector<int> act;
        for (int d : rot)
            if (active[static_cast<std::size_t>(d)]) act.push_back(d);
        if (act.empty()) {
            ++boundaries;  // isolated disc
            continue;
        }
        for (std::size_t i = 0; i < act.size(); ++i) {
            const int d = act[i];
            const int nxt = act[(i + 1) % act.size()];
            corner[static_cast<std::size_t>(2 * d + 1)] = 2 * nxt;      // right(d) -- left(next)
            corner[static_cast<std::size_t>(2 * nxt)] = 2 * d + 1;
        }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!((edge_subset >> e) & 1u)) continue;
        const int d1 = compact_of(edges_[e].d1);
        const int d2 = compact_of(edges_[e].d2);
        if (edges_[e].sign > 0) {
            ribbon[static_cast<std::size_t>(2 * d1)] = 2 * d2 + 1;      // left -- right
            ribbon[static_cast<std::size_t>(2 * d2 + 1)] = 2 * d1;
            ribbon[static_cast<std::size_t>(2 * d1 + 1)] = 2 * d2;
            ribbon[static_cast<std::size_t>(2 * d2)] = 2 * d1 + 1;
        } else {
            ribbon[static_cast<std::size_t>(2 * d1)] = 2 * d2;          // left -- left
            ribbon[static_cast<std::size_t>(2 * d2)] = 2 * d1;
            ribbon[static_cast<std::size_t>(2 * d1 + 1)] = 2 * d2 + 1;  // right -- right
            ribbon[static_cast<std::size_t>(2 * d2 + 1)] = 2 * d1 + 1;
        }
    }

    std::vector<bool> visited(static_cast<std::size_t>(2 * nd), false);
    for (int sp = 0; sp < 2 * nd; ++sp) {
        if (visited[static_cast<std::size_t>(sp)] || corner[static_cast<std::size_t>(sp)] < 0)
            continue;
        ++boundaries;
        // walk the 2-regular cycle, alternating corner and ribbon arcs
        int cur = sp;
        bool use_corner = true;
        while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = true;
            cur = use_corner ? corner[static_cast<std::size_t>(cur)]
                             : ribbon[static_cast<std::size_t>(cur)];
            use_corner = !use_corner;
        }
    }
    return boundaries;
}

SubgraphMetrics RibbonGraph::metrics(Mask edge_subset) const {
    if ((edge_subset & ~full_edge_mask()) != 0) throw std::invalid_argument("unknown edge");
    const int nv = num_vertices();
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!((edge_subset >> e) & 1u)) continue;
        const int u = find(dart_vertex_[static_cast<std::size_t>(compact_of(edges_[e].d1))]);
        const int v = find(dart_vertex_[static_cast<std::size_t>(compact_of(edges_[e].d2))]);
        if (u != v) parent[static_cast<std::size_t>(u)] = v;
    }
    int c = 0;
    for (int v = 0; v < nv; ++v)
        if (find(v) == v) ++c;

    SubgraphMetrics m{};
    m.components = c;
    m.rank = nv - c;
    m.boundary = boundary_components(edge_subset);
    m.euler_genus = 2 * c - nv + std::popcount(edge_subset) - m.boundary;
    m.sigma2 = 2 * m.rank + m.euler_genus;
    return m;
}

std::vector<Mask> RibbonGraph::quasi_tree_sets() const {
    if (num_edges() > 20) throw std::invalid_argument("quasi-tree enumeration capped at 20 edges");
    // A is a spanning quasi-tree iff each graph component induces exactly
    // one boundary component, i.e. b(A) equals the component count of G.
    const int c_full = metrics(full_edge_mask()).components;
    std::vector<Mask> out;
    for (Mask a = 0; a <= full_edge_mask(); ++a) {
        if (boundary_components(a) == c_full) out.push_back(a);
        if (num_edges() == 0) break;
    }
    return out;
}

DeltaMatroid RibbonGraph::delta_matroid() const {
    std::vector<std::string> ground;
    ground.reserve(edges_.size());
    for (const auto& e : edges_) ground.push_back(e.label);
    try {
        return DeltaMatroid::validate(std::move(ground), quasi_tree_sets());
    } catch (const std::invalid_argument& err) {
        throw std::logic_error(std::string("delta-matroid of ribbon graph invalid: ") + err.what());
    }
}

namespace {

/// Returns b with darts relabelled to avoid a's; also uniquifies labels in
/// the caller when required.
std::pair<std::vector<std::vector<int>>, std::vector<RibbonEdge>> relabel_darts(
    const RibbonGraph& a, const RibbonGraph& b) {
    int max_dart = -1;
    for (const auto& rot : a.rotations())
        for (int d : rot) max_dart = std::max(max_dart, d);
    const int shift = max_dart + 1;
    int bmin = 0;
    for (const auto& rot : b.rotations())
        for (int d : rot) bmin = std::min(bmin, d);
    const int offset = shift - bmin;
    auto rots = b.rotations();
    for (auto& rot : rots)
        for (int& d : rot) d += offset;
    auto edges = b.edges();
    for (auto& e : edges) {
        e.d1 += offset;
        e.d2 += offset;
    }
    return {std::move(rots), std::move(edges)};
}

void uniquify_labels(std::vector<RibbonEdge>& a, std::vector<RibbonEdge>& b) {
    for (auto& eb : b) {
        bool clash = false;
        for (const auto& ea : a)
            if (ea.label == eb.label) {
                clash = true;
                break;
            }
        if (clash) eb.label += "'";
    }
}

}  // namespace

RibbonGraph RibbonGraph::disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
    auto [brots, bedges] = relabel_darts(a, b);
    auto rots = a.rotations();
    rots.insert(rots.end(), brots.begin(), brots.end());
    auto edges = a.edges();
    uniquify_labels(edges, bedges);
    edges.insert(edges.end(), bedges.begin(), bedges.end());
    return validate(std::move(rots), std::move(edges));
}

RibbonGraph RibbonGraph::join(const RibbonGraph& a, int v1, int pos1, const RibbonGraph& b,
                              int v2, int pos2) {
    if (v1 < 0 || v1 >= a.num_vertices() || v2 < 0 || v2 >= b.num_vertices())
        throw std::invalid_argument("unknown vertex");
    if (a.rotations()[static_cast<std::size_t>(v1)].empty() ||
        b.rotations()[static_cast<std::size_t>(v2)].empty())
        throw std::invalid_argument("join vertex must be non-isolated");
    auto [brots, bedges] = relabel_darts(a, b);
    const auto& r1 = a.rotations()[static_cast<std::size_t>(v1)];
    const auto& r2 = brots[static_cast<std::size_t>(v2)];
    const std::size_t n1 = r1.size(), n2 = r2.size();
    if (pos1 < 0 || pos1 > static_cast<int>(n1) || pos2 < 0 || pos2 > static_cast<int>(n2))
        throw std::invalid_argument("gap position out of range");

    std::vector<int> merged;
    merged.insert(merged.end(), r1.begin(), r1.begin() + pos1);
    merged.insert(merged.end(), r2.begin() + pos2, r2.end());
    merged.insert(merged.end(), r2.begin(), r2.begin() + pos2);
    merged.insert(merged.end(), r1.begin() + pos1, r1.end());

    std::vector<std::vector<int>> rots;
    for (int v = 0; v < a.num_vertices(); ++v)
        rots.push_back(v == v1 ? merged : a.rotations()[static_cast<std::size_t>(v)]);
    for (int v = 0; v < static_cast<int>(brots.size()); ++v)
        if (v != v2) rots.push_back(brots[static_cast<std::size_t>(v)]);

    auto edges = a.edges();
    uniquify_labels(edges, bedges);
    edges.insert(edges.end(), bedges.begin(), bedges.end());
    return validate(std::move(rots), std::move(edges));
}

}  // namespace deltarig
