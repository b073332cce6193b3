#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimerlab/errors.hpp"
#include "dimerlab/polynomial.hpp"

namespace dimerlab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

// Vertices of a vertex-edge graph remember what they came from; ordinary
// graphs leave every vertex `plain`.
enum class RoleKind : std::uint8_t { plain, v_vertex, e_vertex };

struct VertexRole {
    RoleKind kind = RoleKind::plain;
    std::optional<EdgeId> origin;  // base edge id, set on e-vertices by the transform

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    WeightSymbol weight = WeightSymbol::unit;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected labeled graph with dense ids: vertices 0..n-1, edges 0..m-1 in
// insertion order. Loops are rejected outright; parallel edges are allowed
// only when the multigraph flag is set. Incidence lists are kept in edge-id
// order, so every traversal below is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(bool multigraph) : multigraph_(multigraph) {}

    VertexId add_vertex(VertexRole role = {}) {
        roles_.push_back(role);
        incidence_.emplace_back();
        return static_cast<VertexId>(roles_.size() - 1);
    }

    void add_vertices(std::size_t count, VertexRole role = {}) {
        for (std::size_t i = 0; i < count; ++i) add_vertex(role);
    }

    EdgeId add_edge(VertexId u, VertexId v, WeightSymbol w = WeightSymbol::unit) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("loop edges are not allowed");
        if (!multigraph_ && find_edge(u, v))
            throw PreconditionError("parallel edge rejected: graph is not flagged multigraph");
        edges_.push_back({u, v, w});
        EdgeId id = static_cast<EdgeId>(edges_.size() - 1);
        incidence_[u].push_back(id);
        incidence_[v].push_back(id);
        return id;
    }

    std::size_t vertex_count() const { return roles_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool multigraph() const { return multigraph_; }

    const VertexRole& role(VertexId v) const {
        check_vertex(v);
        return roles_[v];
    }

    void set_role(VertexId v, VertexRole role) {
        check_vertex(v);
        roles_[v] = role;
    }

    const Edge& edge(EdgeId e) const {
        check_edge(e);
        return edges_[e];
    }

    void set_weight(EdgeId e, WeightSymbol w) {
        check_edge(e);
        edges_[e].weight = w;
    }

    const std::vector<EdgeId>& incident_edges(VertexId v) const {
        check_vertex(v);
        return incidence_[v];
    }

    std::size_t degree(VertexId v) const { return incident_edges(v).size(); }

    VertexId other_end(EdgeId e, VertexId v) const {
        const Edge& ed = edge(e);
        if (ed.u == v) return ed.v;
        if (ed.v == v) return ed.u;
        throw PreconditionError("vertex is not an endpoint of the edge");
    }

    // Lowest-id edge joining u and v, if any.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        for (EdgeId e : incidence_[u])
            if (other_end(e, u) == v) return e;
        return std::nullopt;
    }

    bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

    bool has_parallel_edges() const {
        for (VertexId v = 0; v < vertex_count(); ++v) {
            std::vector<VertexId> others;
            others.reserve(incidence_[v].size());
            for (EdgeId e : incidence_[v]) others.push_back(other_end(e, v));
            std::sort(others.begin(), others.end());
            if (std::adjacent_find(others.begin(), others.end()) != others.end()) return true;
        }
        return false;
    }

    bool is_simple() const { return !has_parallel_edges(); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& inc : incidence_) d = std::max(d, inc.size());
        return d;
    }

    bool is_cubic() const {
        if (vertex_count() == 0) return false;
        for (const auto& inc : incidence_)
            if (inc.size() != 3) return false;
        return true;
    }

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<VertexId>> components() const {
        const std::size_t n = vertex_count();
        std::vector<char> seen(n, 0);
        std::vector<std::vector<VertexId>> comps;
        for (VertexId s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<VertexId> comp{s};
            seen[s] = 1;
            for (std::size_t head = 0; head < comp.size(); ++head) {
                VertexId v = comp[head];
                for (EdgeId e : incidence_[v]) {
                    VertexId w = other_end(e, v);
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool connected() const { return components().size() <= 1; }

    // Cut edges, ascending. Parallel edges are never bridges: the DFS tracks
    // the entering edge *id*, so a parallel copy acts as a back edge.
    std::vector<EdgeId> bridges() const {
        const std::size_t n = vertex_count();
        std::vector<int> disc(n, -1), low(n, 0);
        std::vector<EdgeId> out;
        int timer = 0;
        struct Frame {
            VertexId v;
            std::size_t next;
            EdgeId in_edge;
        };
        std::vector<Frame> stack;
        for (VertexId s = 0; s < n; ++s) {
            if (disc[s] >= 0) continue;
            disc[s] = low[s] = timer++;
            stack.push_back({s, 0, kNoEdge});
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.next < incidence_[f.v].size()) {
                    EdgeId e = incidence_[f.v][f.next++];
                    if (e == f.in_edge) continue;
                    VertexId w = other_end(e, f.v);
                    if (disc[w] < 0) {
                        disc[w] = low[w] = timer++;
                        stack.push_back({w, 0, e});
                    } else {
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                } else {
                    VertexId v = f.v;
                    EdgeId in = f.in_edge;
                    stack.pop_back();
                    if (!stack.empty()) {
                        VertexId p = stack.back().v;
                        low[p] = std::min(low[p], low[v]);
                        if (low[v] > disc[p]) out.push_back(in);
                    }
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Graph& l, const Graph& r) {
        return l.multigraph_ == r.multigraph_ && l.roles_ == r.roles_ && l.edges_ == r.edges_;
    }

private:
    void check_vertex(VertexId v) const {
        if (v >= roles_.size()) throw PreconditionError("unknown vertex id " + std::to_string(v));
    }
    void check_edge(EdgeId e) const {
        if (e >= edges_.size()) throw PreconditionError("unknown edge id " + std::to_string(e));
    }

    std::vector<VertexRole> roles_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    bool multigraph_ = false;
};

}  // namespace dimerlab
