#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dimerlab/graph.hpp"

namespace dimerlab {

// Weight rules let lattice builders induce weights on derived graphs; the
// default (empty function) labels everything with the unit symbol.
using EdgePairWeight = std::function<WeightSymbol(const Graph&, EdgeId, EdgeId)>;
using IncidenceWeight = std::function<WeightSymbol(const Graph&, VertexId, EdgeId)>;

namespace detail {

// Adjacent-edge pairs, one per shared endpoint: parallel base edges share two
// endpoints and so contribute two derived edges. That multiplicity is what
// keeps the dimer count of the derived graphs invariant under the reduction
// steps once smoothing has produced a multigraph (checked against the
// enumeration oracle); for simple bases it changes nothing.
inline std::vector<std::pair<EdgeId, EdgeId>> meeting_pairs(const Graph& g) {
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                pairs.push_back(std::minmax(inc[i], inc[j]));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace detail

// Line graph: one vertex per edge of g (vertex id == base edge id), one edge
// per adjacent-edge pair per shared endpoint. The result is simple exactly
// when g is.
inline Graph line_graph(const Graph& g, const EdgePairWeight& rule = {}) {
    Graph lg(g.has_parallel_edges());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        lg.add_vertex({RoleKind::e_vertex, e});
    for (const auto& [i, j] : detail::meeting_pairs(g))
        lg.add_edge(i, j, rule ? rule(g, i, j) : WeightSymbol::unit);
    return lg;
}

// Vertex-edge graph: keeps the base vertices (same ids, role v), adds one
// e-vertex per base edge (edge j -> vertex n+j), joins e-vertices exactly as
// the line graph does (same edge ids, since those edges come first), then
// joins each e-vertex to its edge's two endpoints. Simple exactly when the
// base is: parallel base edges yield a parallel e-e pair.
inline Graph middle_graph(const Graph& g,
                          const EdgePairWeight& ee_rule = {},
                          const IncidenceWeight& ve_rule = {}) {
    const std::size_t n = g.vertex_count();
    Graph mg(g.has_parallel_edges());
    for (VertexId v = 0; v < n; ++v)
        mg.add_vertex({RoleKind::v_vertex, std::nullopt});
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        mg.add_vertex({RoleKind::e_vertex, e});
    for (const auto& [i, j] : detail::meeting_pairs(g))
        mg.add_edge(static_cast<VertexId>(n + i), static_cast<VertexId>(n + j),
                    ee_rule ? ee_rule(g, i, j) : WeightSymbol::unit);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        VertexId ev = static_cast<VertexId>(n + e);
        mg.add_edge(ed.u, ev, ve_rule ? ve_rule(g, ed.u, e) : WeightSymbol::unit);
        mg.add_edge(ed.v, ev, ve_rule ? ve_rule(g, ed.v, e) : WeightSymbol::unit);
    }
    return mg;
}

namespace detail {

// Rebuild without one vertex and a set of edges, compacting ids but keeping
// relative order. The helper trusts the caller to drop exactly the edges at
// the victim, so remaining endpoints always remap cleanly.
inline Graph drop_vertex(const Graph& g, VertexId victim, const std::vector<EdgeId>& dropped,
                         bool multigraph, std::vector<EdgeId>* edge_map = nullptr) {
    Graph out(multigraph);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != victim) out.add_vertex(g.role(v));
    auto map_vertex = [victim](VertexId v) { return v < victim ? v : v - 1; };
    std::vector<char> drop(g.edge_count(), 0);
    for (EdgeId e : dropped) drop[e] = 1;
    if (edge_map) edge_map->assign(g.edge_count(), kNoEdge);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (drop[e]) continue;
        const Edge& ed = g.edge(e);
        EdgeId ne = out.add_edge(map_vertex(ed.u), map_vertex(ed.v), ed.weight);
        if (edge_map) (*edge_map)[e] = ne;
    }
    return out;
}

}  // namespace detail

// Delete one edge; vertex ids unchanged, edge ids above e shift down by one.
inline Graph remove_edge(const Graph& g, EdgeId e) {
    if (e >= g.edge_count()) throw PreconditionError("unknown edge id " + std::to_string(e));
    Graph out(g.multigraph());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.role(v));
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        const Edge& ed = g.edge(i);
        out.add_edge(ed.u, ed.v, ed.weight);
    }
    return out;
}

// Delete one vertex with all incident edges; ids compact downwards.
inline Graph remove_vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw PreconditionError("unknown vertex id " + std::to_string(v));
    return detail::drop_vertex(g, v, g.incident_edges(v), g.multigraph());
}

// Delete a degree-1 vertex together with its edge.
inline Graph remove_pendant(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw PreconditionError("unknown vertex id " + std::to_string(v));
    if (g.degree(v) != 1)
        throw PreconditionError("vertex " + std::to_string(v) + " is not a pendant");
    return detail::drop_vertex(g, v, g.incident_edges(v), g.multigraph());
}

// Replace a degree-2 vertex u (edges ux, uy with x != y) by the edge xy. The
// new edge gets the unit weight and the highest edge id. If x and y were
// already adjacent the result gains a parallel pair and is flagged multigraph.
inline Graph smooth_degree_two(const Graph& g, VertexId u, EdgeId* new_edge = nullptr) {
    if (u >= g.vertex_count()) throw PreconditionError("unknown vertex id " + std::to_string(u));
    if (g.degree(u) != 2)
        throw PreconditionError("vertex " + std::to_string(u) + " does not have degree 2");
    const auto& inc = g.incident_edges(u);
    VertexId x = g.other_end(inc[0], u);
    VertexId y = g.other_end(inc[1], u);
    if (x == y)
        throw PreconditionError("smoothing vertex " + std::to_string(u) +
                                " would create a loop");
    bool flag = g.multigraph() || g.adjacent(x, y);
    Graph out = detail::drop_vertex(g, u, inc, flag);
    auto map_vertex = [u](VertexId v) { return v < u ? v : v - 1; };
    EdgeId e = out.add_edge(map_vertex(x), map_vertex(y));
    if (new_edge) *new_edge = e;
    return out;
}

// Terminal shape reached by the reduction. `stuck` covers connected inputs
// whose remaining degree-2 vertices all sit on parallel pairs (smoothing
// would loop) without the graph being C2 — e.g. two triangles joined by an
// edge get there. Callers treat it like cubic-multigraph: no closed form.
enum class BaseClass : std::uint8_t {
    cubic_simple,
    cubic_multigraph,
    c2,
    k1,
    empty,
    stuck,
};

inline const char* base_class_name(BaseClass b) {
    switch (b) {
        case BaseClass::cubic_simple: return "cubic-simple";
        case BaseClass::cubic_multigraph: return "cubic-multigraph";
        case BaseClass::c2: return "C2";
        case BaseClass::k1: return "K1";
        case BaseClass::empty: return "empty";
        case BaseClass::stuck: return "stuck";
    }
    return "?";
}

struct ReductionStep {
    enum class Kind : std::uint8_t { pendant, smoothing } kind;
    VertexId removed;               // id in the graph the step was applied to
    std::optional<EdgeId> new_edge; // smoothing only: id of the created edge

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    BaseClass base_class = BaseClass::empty;
};

// Strip pendants (preferred) and smooth degree-2 vertices, lowest id first,
// until the graph is terminal. Each step removes one vertex, and each step
// preserves the dimer-covering count of the vertex-edge graph, so the base
// graph carries all the information the closed forms need.
inline std::pair<Graph, ReductionTrace> reduce_to_base(const Graph& g) {
    if (g.max_degree() > 3) throw PreconditionError("maximum degree exceeds 3");
    if (!g.connected()) throw PreconditionError("graph must be connected");
    Graph cur = g;
    ReductionTrace trace;
    for (;;) {
        const std::size_t n = cur.vertex_count();
        if (n == 0) {
            trace.base_class = BaseClass::empty;
            break;
        }
        if (n == 1) {
            trace.base_class = BaseClass::k1;
            break;
        }
        std::optional<VertexId> pendant;
        std::vector<VertexId> degree_two;
        for (VertexId v = 0; v < n && !pendant; ++v) {
            std::size_t d = cur.degree(v);
            if (d == 1) pendant = v;
            else if (d == 2) degree_two.push_back(v);
        }
        if (pendant) {
            cur = remove_pendant(cur, *pendant);
            trace.steps.push_back({ReductionStep::Kind::pendant, *pendant, std::nullopt});
            continue;
        }
        if (degree_two.empty()) {
            trace.base_class =
                cur.has_parallel_edges() ? BaseClass::cubic_multigraph : BaseClass::cubic_simple;
            break;
        }
        std::optional<VertexId> smoothable;
        for (VertexId v : degree_two) {
            const auto& inc = cur.incident_edges(v);
            if (cur.other_end(inc[0], v) != cur.other_end(inc[1], v)) {
                smoothable = v;
                break;
            }
        }
        if (smoothable) {
            EdgeId created = kNoEdge;
            cur = smooth_degree_two(cur, *smoothable, &created);
            trace.steps.push_back({ReductionStep::Kind::smoothing, *smoothable, created});
            continue;
        }
        trace.base_class =
            (n == 2 && cur.edge_count() == 2) ? BaseClass::c2 : BaseClass::stuck;
        break;
    }
    return {std::move(cur), std::move(trace)};
}

// One complete-graph-on-4 block of a vertex-edge graph: the v-vertex of a
// cubic base vertex together with the three e-vertices of its edges.
struct K4Block {
    VertexId base_vertex;              // also the v-vertex id in the derived graph
    std::array<EdgeId, 3> base_edges;  // originating base edge ids, ascending
    std::array<VertexId, 3> e_vertices;  // derived-graph ids, ascending
    std::array<EdgeId, 6> edges;       // derived-graph edge ids: the 3 v-e edges, then the 3 e-e edges
};

// Split the vertex-edge graph of a cubic base into its edge-disjoint K4
// blocks, one per base vertex, and verify the split is a partition of the
// edge set. Works from the role/origin tags, so it accepts imported graphs.
inline std::vector<K4Block> k4_decomposition(const Graph& mg) {
    std::vector<VertexId> v_vertices;
    for (VertexId v = 0; v < mg.vertex_count(); ++v) {
        RoleKind k = mg.role(v).kind;
        if (k == RoleKind::plain)
            throw PreconditionError("vertex " + std::to_string(v) + " lacks a role tag");
        if (k == RoleKind::v_vertex) v_vertices.push_back(v);
        else if (!mg.role(v).origin)
            throw PreconditionError("e-vertex " + std::to_string(v) + " lacks an origin tag");
    }
    std::vector<K4Block> blocks;
    std::vector<char> edge_used(mg.edge_count(), 0);
    std::size_t used = 0;
    auto claim = [&](EdgeId e) {
        if (edge_used[e])
            throw PreconditionError("edge " + std::to_string(e) + " shared between blocks");
        edge_used[e] = 1;
        ++used;
    };
    for (VertexId v : v_vertices) {
        std::vector<VertexId> evs;
        for (EdgeId e : mg.incident_edges(v)) {
            VertexId w = mg.other_end(e, v);
            if (mg.role(w).kind != RoleKind::e_vertex)
                throw PreconditionError("v-vertex " + std::to_string(v) +
                                        " is adjacent to a non-e-vertex");
            evs.push_back(w);
        }
        std::sort(evs.begin(), evs.end());
        if (evs.size() != 3 || std::adjacent_find(evs.begin(), evs.end()) != evs.end())
            throw PreconditionError("v-vertex " + std::to_string(v) +
                                    " does not have 3 distinct e-neighbors (base not cubic)");
        K4Block b;
        b.base_vertex = v;
        b.e_vertices = {evs[0], evs[1], evs[2]};
        for (std::size_t i = 0; i < 3; ++i) b.base_edges[i] = *mg.role(evs[i]).origin;
        auto need = [&](VertexId a, VertexId c) {
            auto e = mg.find_edge(a, c);
            if (!e)
                throw PreconditionError("missing block edge between " + std::to_string(a) +
                                        " and " + std::to_string(c));
            return *e;
        };
        b.edges = {need(v, evs[0]), need(v, evs[1]), need(v, evs[2]),
                   need(evs[0], evs[1]), need(evs[0], evs[2]), need(evs[1], evs[2])};
        for (EdgeId e : b.edges) claim(e);
        blocks.push_back(b);
    }
    if (used != mg.edge_count())
        throw PreconditionError("blocks do not cover every edge: " + std::to_string(used) +
                                " of " + std::to_string(mg.edge_count()));
    return blocks;
}

}  // namespace dimerlab
