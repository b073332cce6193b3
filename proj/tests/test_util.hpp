#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dimerlab/graph.hpp"
#include "dimerlab/lattices.hpp"
#include "dimerlab/matching.hpp"
#include "dimerlab/transforms.hpp"

namespace testutil {

using namespace dimerlab;

inline Graph cycle(std::size_t k) {
    Graph g(k == 2);
    g.add_vertices(k);
    for (VertexId i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline Graph path(std::size_t k) {
    Graph g;
    g.add_vertices(k);
    for (VertexId i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph star(std::size_t leaves) {
    Graph g;
    g.add_vertices(leaves + 1);
    for (VertexId i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

// two vertices joined by three parallel edges: the smallest cubic multigraph
inline Graph theta() {
    Graph g(true);
    g.add_vertices(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    return g;
}

// two triangles joined by a single edge; reduction cannot finish on it
inline Graph two_triangles_bridged() {
    Graph g;
    g.add_vertices(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    g.add_edge(2, 3);
    return g;
}

// C4 with two opposite edges doubled: a cubic multigraph with n + m even,
// so the prediction pipeline reaches the reduction instead of parity
inline Graph doubled_c4() {
    Graph g(true);
    g.add_vertices(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}

// a doubled edge pinning vertex 0, hung off a three-vertex core: every
// degree-2 vertex is pinned, n + m is even, and the reduction is stuck
inline Graph blistered_core() {
    Graph g(true);
    g.add_vertices(5);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    g.add_edge(3, 4);
    return g;
}

// bridge oracle by definition: removing a cut edge splits a component
inline std::vector<EdgeId> naive_bridges(const Graph& g) {
    std::vector<EdgeId> out;
    std::size_t base = g.components().size();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (remove_edge(g, e).components().size() > base) out.push_back(e);
    return out;
}

// Erdos-Renyi-ish simple graph for structural laws
inline Graph random_simple(std::size_t n, std::uint64_t seed, std::uint64_t percent = 40) {
    SplitMix64 rng(seed);
    Graph g;
    g.add_vertices(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) g.add_edge(u, v);
    return g;
}

inline Graph random_multigraph(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(true);
    g.add_vertices(n);
    std::uint64_t edges = rng.below(2 * n + 1);
    for (std::uint64_t t = 0; t < edges; ++t) {
        VertexId u = static_cast<VertexId>(rng.below(n));
        VertexId v = static_cast<VertexId>(rng.below(n));
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

inline std::set<Matching> pm_set(const Graph& g) {
    std::set<Matching> out;
    for_each_pm(g, [&](const Matching& m) {
        Matching sorted = m;
        std::sort(sorted.begin(), sorted.end());
        out.insert(std::move(sorted));
    });
    return out;
}

inline bool has_triangle(const Graph& g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = g.edge(e).u, v = g.edge(e).v;
        for (VertexId w = 0; w < g.vertex_count(); ++w)
            if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) return true;
    }
    return false;
}

inline Polynomial random_poly(SplitMix64& rng) {
    Polynomial p;
    std::uint64_t terms = rng.below(4) + 1;
    for (std::uint64_t t = 0; t < terms; ++t) {
        Monomial m;
        for (std::size_t i = 0; i < kWeightSymbolCount; ++i)
            m.exps[i] = static_cast<std::uint32_t>(rng.below(3));
        p.add_term(m, BigCount(rng.below(9) + 1));
    }
    return p;
}

}  // namespace testutil
