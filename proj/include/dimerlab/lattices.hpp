#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimerlab/graph.hpp"
#include "dimerlab/transforms.hpp"

namespace dimerlab {

// Tiny deterministic mixer (public-domain construction). Hand-rolled because
// the standard distributions are not bit-identical across standard libraries
// and generated corpora must reproduce exactly from a seed anywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0. Modulo bias is irrelevant here: bounds
    // are tiny against 2^64 and the outputs only seed test corpora.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 rng(seed ^ (0x632BE59BD9B4E019ULL * (salt + 1)));
    return rng.next();
}

enum class LatticeFamily : std::uint8_t { honeycomb, kagome, silicate };

struct LatticeSpec {
    LatticeFamily family = LatticeFamily::honeycomb;
    std::size_t rows = 2;  // wrap-around count in the first coordinate
    std::size_t cols = 2;  // wrap-around count in the second coordinate
    bool weighted = false;
};

namespace detail {

inline void check_lattice(const LatticeSpec& spec) {
    if (spec.rows < 2 || spec.cols < 2)
        throw PreconditionError("lattice sizes must be at least 2");
}

// The brick-wall form of the toroidal honeycomb: cells (i, j) with i mod rows
// and j mod cols, two vertices per cell (u then w), and the three edge
// directions x: u(i,j)-w(i,j), y: w(i,j)-u(i,j+1), z: w(i,j)-u(i+1,j).
// Vertex ids are row-major with u before w; edges follow cell order x,y,z.
inline Graph honeycomb_core(const LatticeSpec& spec, bool directions) {
    check_lattice(spec);
    const std::size_t rows = spec.rows, cols = spec.cols;
    Graph g;
    g.add_vertices(2 * rows * cols);
    auto u = [cols](std::size_t i, std::size_t j) {
        return static_cast<VertexId>(2 * (i * cols + j));
    };
    auto w = [cols](std::size_t i, std::size_t j) {
        return static_cast<VertexId>(2 * (i * cols + j) + 1);
    };
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            g.add_edge(u(i, j), w(i, j), directions ? WeightSymbol::x : WeightSymbol::unit);
            g.add_edge(w(i, j), u(i, (j + 1) % cols),
                       directions ? WeightSymbol::y : WeightSymbol::unit);
            g.add_edge(w(i, j), u((i + 1) % rows, j),
                       directions ? WeightSymbol::z : WeightSymbol::unit);
        }
    }
    return g;
}

// An edge pair meeting at a vertex spans two of the three directions; the
// induced label names the absent one: {y,z} -> a, {x,z} -> b, {x,y} -> c.
inline WeightSymbol complement_direction(WeightSymbol d1, WeightSymbol d2) {
    bool hx = d1 == WeightSymbol::x || d2 == WeightSymbol::x;
    bool hy = d1 == WeightSymbol::y || d2 == WeightSymbol::y;
    bool hz = d1 == WeightSymbol::z || d2 == WeightSymbol::z;
    if (!hx && hy && hz) return WeightSymbol::a;
    if (hx && !hy && hz) return WeightSymbol::b;
    if (hx && hy && !hz) return WeightSymbol::c;
    throw PreconditionError("adjacent edges must span two distinct directions");
}

}  // namespace detail

inline Graph honeycomb_torus(const LatticeSpec& spec) {
    return detail::honeycomb_core(spec, spec.weighted);
}

// Toroidal kagome lattice: the line graph of the honeycomb torus. Weighted
// form labels each vertex-pair edge with the complement of the two directions
// it connects.
inline Graph kagome_torus(const LatticeSpec& spec) {
    Graph h = detail::honeycomb_core(spec, true);
    if (!spec.weighted) return line_graph(h);
    return line_graph(h, [](const Graph& base, EdgeId i, EdgeId j) {
        return detail::complement_direction(base.edge(i).weight, base.edge(j).weight);
    });
}

// Toroidal silicate lattice: the vertex-edge graph of the honeycomb torus.
// Weighted form labels a v-e edge with its edge's direction and an e-e edge
// with the complement of the two directions.
inline Graph silicate_torus(const LatticeSpec& spec) {
    Graph h = detail::honeycomb_core(spec, true);
    if (!spec.weighted) {
        Graph plain = detail::honeycomb_core(spec, false);
        return middle_graph(plain);
    }
    return middle_graph(
        h,
        [](const Graph& base, EdgeId i, EdgeId j) {
            return detail::complement_direction(base.edge(i).weight, base.edge(j).weight);
        },
        [](const Graph& base, VertexId, EdgeId e) { return base.edge(e).weight; });
}

inline Graph build_lattice(const LatticeSpec& spec) {
    switch (spec.family) {
        case LatticeFamily::honeycomb: return honeycomb_torus(spec);
        case LatticeFamily::kagome: return kagome_torus(spec);
        case LatticeFamily::silicate: return silicate_torus(spec);
    }
    throw PreconditionError("unknown lattice family");
}

namespace detail {

// K4 with one edge subdivided: 5 vertices, 7 edges, one degree-2 vertex
// (offset+4). Building block for the bridged fixtures.
inline void add_subdivided_k4(Graph& g, VertexId o) {
    g.add_edge(o + 0, o + 1);
    g.add_edge(o + 0, o + 2);
    g.add_edge(o + 0, o + 3);
    g.add_edge(o + 1, o + 2);
    g.add_edge(o + 1, o + 3);
    g.add_edge(o + 2, o + 4);
    g.add_edge(o + 3, o + 4);
}

// K33 with one edge subdivided: 7 vertices, 10 edges, degree-2 vertex o+6.
inline void add_subdivided_k33(Graph& g, VertexId o) {
    for (VertexId i = 0; i < 3; ++i)
        for (VertexId j = 3; j < 6; ++j)
            if (!(i == 2 && j == 5)) g.add_edge(o + i, o + j);
    g.add_edge(o + 2, o + 6);
    g.add_edge(o + 5, o + 6);
}

}  // namespace detail

// Fixed fixture graphs. bridged10/bridged14 are cubic graphs with odd edge
// counts whose single bridge splits them into two odd / two even edge-count
// sides respectively.
inline Graph named_cubic(const std::string& name) {
    Graph g;
    if (name == "K4") {
        g.add_vertices(4);
        for (VertexId i = 0; i < 4; ++i)
            for (VertexId j = i + 1; j < 4; ++j) g.add_edge(i, j);
        return g;
    }
    if (name == "K33") {
        g.add_vertices(6);
        for (VertexId i = 0; i < 3; ++i)
            for (VertexId j = 3; j < 6; ++j) g.add_edge(i, j);
        return g;
    }
    if (name == "prism") {
        g.add_vertices(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(3, 5);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        g.add_edge(2, 5);
        return g;
    }
    if (name == "cube") {
        g.add_vertices(8);
        for (VertexId i = 0; i < 8; ++i)
            for (int b = 0; b < 3; ++b) {
                VertexId j = i ^ (1u << b);
                if (j > i) g.add_edge(i, j);
            }
        return g;
    }
    if (name == "petersen") {
        g.add_vertices(10);
        for (VertexId i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
        for (VertexId i = 0; i < 5; ++i) g.add_edge(i, i + 5);
        for (VertexId i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
        return g;
    }
    if (name == "bridged10") {
        g.add_vertices(10);
        detail::add_subdivided_k4(g, 0);
        detail::add_subdivided_k4(g, 5);
        g.add_edge(4, 9);
        return g;
    }
    if (name == "bridged14") {
        g.add_vertices(14);
        detail::add_subdivided_k33(g, 0);
        detail::add_subdivided_k33(g, 7);
        g.add_edge(6, 13);
        return g;
    }
    throw PreconditionError("unknown named graph \"" + name + "\"");
}

// Connected simple cubic graph on n vertices, drawn with the configuration
// model: shuffle 3n stubs, pair them up, reject draws with loops, parallel
// pairs, or a disconnected result. Deterministic for a fixed seed.
inline Graph random_cubic(std::size_t n, std::uint64_t seed, int max_retries = 10000) {
    if (n < 4) throw PreconditionError("a cubic graph needs at least 4 vertices");
    if (n % 2 != 0) throw PreconditionError("a cubic graph needs an even vertex count");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<VertexId> stubs;
        stubs.reserve(3 * n);
        for (VertexId v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        Graph g;
        g.add_vertices(n);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
            VertexId u = stubs[i], v = stubs[i + 1];
            if (u == v || g.adjacent(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok && g.connected()) return g;
    }
    throw CapacityError("configuration model retry budget exhausted for n = " +
                        std::to_string(n));
}

// Connected simple graph with maximum degree <= 3 on n vertices: a random
// tree grown one vertex at a time plus a few extra edges between degree-<=2
// non-adjacent pairs. Deterministic for a fixed seed.
inline Graph random_subcubic(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw PreconditionError("need at least one vertex");
    SplitMix64 rng(seed);
    Graph g;
    g.add_vertices(n);
    for (VertexId v = 1; v < n; ++v) {
        std::vector<VertexId> hosts;
        for (VertexId u = 0; u < v; ++u)
            if (g.degree(u) <= 2) hosts.push_back(u);
        g.add_edge(hosts[rng.below(hosts.size())], v);
    }
    std::uint64_t extras = n > 1 ? rng.below(n / 2 + 1) : 0;
    for (std::uint64_t t = 0; t < extras; ++t) {
        std::vector<std::pair<VertexId, VertexId>> slots;
        for (VertexId u = 0; u < n; ++u) {
            if (g.degree(u) > 2) continue;
            for (VertexId v = u + 1; v < n; ++v)
                if (g.degree(v) <= 2 && !g.adjacent(u, v)) slots.emplace_back(u, v);
        }
        if (slots.empty()) break;
        auto [u, v] = slots[rng.below(slots.size())];
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace dimerlab
