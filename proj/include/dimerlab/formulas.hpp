#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dimerlab/graph.hpp"
#include "dimerlab/matching.hpp"
#include "dimerlab/transforms.hpp"

namespace dimerlab {

// Which counting rule produced a predicted value. The names are part of the
// CLI/report vocabulary, so keep them stable.
enum class FormulaTag : std::uint8_t {
    thm11,       // dimer coverings of a line graph
    thm14,       // vertex-edge graph of a connected cubic graph, m even
    thm15,       // cubic with m odd, a non-cut edge removed
    thm16a,      // cubic with m odd, cut edge, both sides even: zero
    thm16b,      // cubic with m odd, cut edge, both sides odd
    eq31,        // toroidal kagome count
    eq32,        // toroidal kagome weighted sum
    thm31,       // toroidal silicate weighted sum
    remark32,    // toroidal silicate count
    base_c2,     // reduction ended at the 2-vertex double edge
    base_k1,     // reduction ended at a single vertex
    base_empty,  // reduction ended at the empty graph
    parity_zero, // odd vertex total, count is zero
    not_covered, // no closed form applies; fall back to the engine
};

inline const char* formula_tag_name(FormulaTag t) {
    switch (t) {
        case FormulaTag::thm11: return "Thm1.1";
        case FormulaTag::thm14: return "Thm1.4";
        case FormulaTag::thm15: return "Thm1.5";
        case FormulaTag::thm16a: return "Thm1.6a";
        case FormulaTag::thm16b: return "Thm1.6b";
        case FormulaTag::eq31: return "Eq3.1";
        case FormulaTag::eq32: return "Eq3.2";
        case FormulaTag::thm31: return "Thm3.1";
        case FormulaTag::remark32: return "Remark3.2";
        case FormulaTag::base_c2: return "base-C2";
        case FormulaTag::base_k1: return "base-K1";
        case FormulaTag::base_empty: return "base-empty";
        case FormulaTag::parity_zero: return "parity-zero";
        case FormulaTag::not_covered: return "not-covered";
    }
    return "?";
}

struct PredictionResult {
    std::optional<BigCount> value;  // absent exactly when tag == not_covered
    FormulaTag tag = FormulaTag::not_covered;
    std::optional<ReductionTrace> trace;
};

// Dimer coverings of the line graph of a connected simple graph with maximum
// degree <= 3 and an even edge count: 2^(m-n+1).
inline BigCount pm_line_formula(const Graph& g) {
    if (!g.connected()) throw PreconditionError("graph must be connected");
    if (g.has_parallel_edges()) throw PreconditionError("graph must be simple");
    if (g.max_degree() > 3) throw PreconditionError("maximum degree exceeds 3");
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (m % 2 != 0) throw PreconditionError("edge count must be even");
    if (m + 1 < n) throw PreconditionError("graph must be connected");  // unreachable, guards the exponent
    return big_pow(2, m - n + 1);
}

// Dimer coverings of the vertex-edge graph of a connected simple cubic graph
// with an even edge count: 2^(m-n+1) * 3^((2n-m)/2) = 2^(n/2+1) * 3^(n/4).
inline BigCount pm_middle_cubic_even(const Graph& g) {
    if (!g.connected()) throw PreconditionError("graph must be connected");
    if (g.has_parallel_edges()) throw PreconditionError("graph must be simple");
    if (!g.is_cubic()) throw PreconditionError("graph must be cubic");
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (m % 2 != 0) throw PreconditionError("edge count must be even");
    if (n % 4 != 0) throw std::logic_error("cubic with even edge count must have n % 4 == 0");
    return big_pow(2, n / 2 + 1) * big_pow(3, n / 4);
}

// Dimer coverings of the vertex-edge graph after deleting one edge of a
// connected simple cubic graph with an odd edge count. Non-cut edge:
// 2^(n/2) * 3^((n-2)/4). Cut edge: zero when the two sides have even edge
// counts, 2^(n/2+1) * 3^((n-2)/4) when both are odd; mixed parity cannot
// happen. Each side of a cut edge also satisfies 3(n_i - 1) + 2 = 2 m_i with
// n_i odd, which pins the arithmetic and is asserted.
inline PredictionResult pm_middle_cubic_minus_edge(const Graph& g, EdgeId e) {
    if (!g.connected()) throw PreconditionError("graph must be connected");
    if (g.has_parallel_edges()) throw PreconditionError("graph must be simple");
    if (!g.is_cubic()) throw PreconditionError("graph must be cubic");
    if (e >= g.edge_count()) throw PreconditionError("unknown edge id " + std::to_string(e));
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (m % 2 != 1) throw PreconditionError("edge count must be odd");
    if ((n - 2) % 4 != 0) throw std::logic_error("cubic with odd edge count must have n % 4 == 2");

    auto cuts = g.bridges();
    bool is_cut = std::binary_search(cuts.begin(), cuts.end(), e);
    if (!is_cut)
        return {big_pow(2, n / 2) * big_pow(3, (n - 2) / 4), FormulaTag::thm15, std::nullopt};

    Graph rest = remove_edge(g, e);
    auto comps = rest.components();
    if (comps.size() != 2) throw std::logic_error("cut edge must split into two components");
    std::vector<int> comp_of(n, -1);
    for (std::size_t c = 0; c < 2; ++c)
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::size_t edge_in[2] = {0, 0};
    for (EdgeId i = 0; i < rest.edge_count(); ++i)
        ++edge_in[comp_of[rest.edge(i).u]];
    for (std::size_t c = 0; c < 2; ++c) {
        std::size_t ni = comps[c].size();
        std::size_t mi = edge_in[c];
        std::size_t deg2 = 0;
        for (VertexId v : comps[c])
            if (rest.degree(v) == 2) ++deg2;
        if (deg2 != 1) throw std::logic_error("cut side must have exactly one degree-2 vertex");
        if (ni % 2 != 1) throw std::logic_error("cut side must have an odd vertex count");
        if (3 * (ni - 1) + 2 != 2 * mi)
            throw std::logic_error("cut side violates 3(n_i - 1) + 2 = 2 m_i");
    }
    bool odd0 = edge_in[0] % 2 == 1;
    bool odd1 = edge_in[1] % 2 == 1;
    if (odd0 != odd1) throw std::logic_error("cut sides with mixed edge parity are impossible");
    if (!odd0) return {BigCount(0), FormulaTag::thm16a, std::nullopt};
    return {big_pow(2, n / 2 + 1) * big_pow(3, (n - 2) / 4), FormulaTag::thm16b, std::nullopt};
}

// Full pipeline for the vertex-edge graph of any connected graph with maximum
// degree <= 3: parity gate, reduction to a terminal base, then the closed
// form the base admits. Bases with no closed form (cubic multigraphs, stuck
// reductions) return not-covered with no value.
inline PredictionResult predict_pm_middle(const Graph& h) {
    if (h.max_degree() > 3) throw PreconditionError("maximum degree exceeds 3");
    if (!h.connected()) throw PreconditionError("graph must be connected");
    if ((h.vertex_count() + h.edge_count()) % 2 == 1)
        return {BigCount(0), FormulaTag::parity_zero, std::nullopt};
    auto [base, trace] = reduce_to_base(h);
    PredictionResult out;
    out.trace = trace;
    switch (trace.base_class) {
        case BaseClass::cubic_simple:
            out.value = pm_middle_cubic_even(base);
            out.tag = FormulaTag::thm14;
            break;
        case BaseClass::c2:
            out.value = BigCount(2);
            out.tag = FormulaTag::base_c2;
            break;
        case BaseClass::empty:
            out.value = BigCount(1);
            out.tag = FormulaTag::base_empty;
            break;
        case BaseClass::k1:
            out.value = BigCount(0);
            out.tag = FormulaTag::base_k1;
            break;
        case BaseClass::cubic_multigraph:
        case BaseClass::stuck:
            out.tag = FormulaTag::not_covered;
            break;
    }
    return out;
}

// Predicted value when covered; otherwise count the vertex-edge graph of the
// (smaller) base exactly. Both paths equal the count on the input graph.
inline BigCount pm_middle_resolved(const Graph& h, CountMethod fallback = CountMethod::enumerate) {
    PredictionResult r = predict_pm_middle(h);
    if (r.value) return *r.value;
    auto [base, trace] = reduce_to_base(h);
    return count_pm(middle_graph(base), fallback);
}

namespace detail {
inline void check_torus_sizes(std::size_t n, std::size_t m) {
    if (n < 2 || m < 2) throw PreconditionError("torus sizes must be at least 2");
    if ((n * m) % 2 != 0) throw PreconditionError("the product of the torus sizes must be even");
}
}  // namespace detail

// Dimer coverings of the toroidal kagome lattice with n*m basic cells: 2^(mn+1).
inline BigCount pm_kagome_formula(std::size_t n, std::size_t m) {
    detail::check_torus_sizes(n, m);
    return big_pow(2, n * m + 1);
}

// Weighted version: every covering carries the same monomial, so the sum is
// 2^(mn+1) * (abc)^(mn/2).
inline Polynomial pm_kagome_weighted(std::size_t n, std::size_t m) {
    detail::check_torus_sizes(n, m);
    std::uint32_t half = static_cast<std::uint32_t>(n * m / 2);
    Monomial mono;
    mono.exps[symbol_index(WeightSymbol::a)] = half;
    mono.exps[symbol_index(WeightSymbol::b)] = half;
    mono.exps[symbol_index(WeightSymbol::c)] = half;
    Polynomial p;
    p.add_term(mono, big_pow(2, n * m + 1));
    return p;
}

// Weighted dimer sum of the toroidal silicate lattice:
// 2^(mn+1) * (xyz)^(mn/2) * (ax + by + cz)^(mn/2).
inline Polynomial pm_silicate_weighted(std::size_t n, std::size_t m) {
    detail::check_torus_sizes(n, m);
    std::uint64_t half = n * m / 2;
    Polynomial core;
    core.add_term(Monomial::of(WeightSymbol::a) * Monomial::of(WeightSymbol::x), 1);
    core.add_term(Monomial::of(WeightSymbol::b) * Monomial::of(WeightSymbol::y), 1);
    core.add_term(Monomial::of(WeightSymbol::c) * Monomial::of(WeightSymbol::z), 1);
    Monomial shift;
    shift.exps[symbol_index(WeightSymbol::x)] = static_cast<std::uint32_t>(half);
    shift.exps[symbol_index(WeightSymbol::y)] = static_cast<std::uint32_t>(half);
    shift.exps[symbol_index(WeightSymbol::z)] = static_cast<std::uint32_t>(half);
    return poly_pow(core, half).times_monomial(shift).scaled(big_pow(2, n * m + 1));
}

// Unweighted silicate count: substitute 1 everywhere, 2^(mn+1) * 3^(mn/2).
inline BigCount pm_silicate_count(std::size_t n, std::size_t m) {
    detail::check_torus_sizes(n, m);
    return big_pow(2, n * m + 1) * big_pow(3, n * m / 2);
}

}  // namespace dimerlab
