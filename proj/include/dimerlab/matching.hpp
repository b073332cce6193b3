#pragma once

#include <cstdlib>
#include <set>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimerlab/graph.hpp"
#include "dimerlab/transforms.hpp"

namespace dimerlab {

// A matching is a set of edge ids; callers keep them sorted.
using Matching = std::vector<EdgeId>;

inline bool is_matching(const Graph& g, const Matching& m) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (EdgeId e : m) {
        if (e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (covered[ed.u] || covered[ed.v]) return false;
        covered[ed.u] = covered[ed.v] = 1;
    }
    return true;
}

inline bool is_perfect_matching(const Graph& g, const Matching& m) {
    return 2 * m.size() == g.vertex_count() && is_matching(g, m);
}

// Visit every perfect matching exactly once: branch on the lowest-id
// uncovered vertex, trying its incident edges in edge-id order. The visit
// order is therefore a fixed lexicographic order. The empty graph yields one
// (empty) matching. This is the reference oracle everything else is checked
// against.
template <class Fn>
void for_each_pm(const Graph& g, Fn&& fn) {
    const std::size_t n = g.vertex_count();
    std::vector<char> covered(n, 0);
    Matching chosen;
    chosen.reserve(n / 2);
    auto rec = [&](auto&& self, VertexId scan_from) -> void {
        VertexId v = scan_from;
        while (v < n && covered[v]) ++v;
        if (v >= n) {
            fn(static_cast<const Matching&>(chosen));
            return;
        }
        covered[v] = 1;
        for (EdgeId e : g.incident_edges(v)) {
            VertexId w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[w] = 1;
            chosen.push_back(e);
            self(self, v + 1);
            chosen.pop_back();
            covered[w] = 0;
        }
        covered[v] = 0;
    };
    rec(rec, 0);
}

inline std::vector<Matching> enumerate_pm(const Graph& g) {
    std::vector<Matching> out;
    for_each_pm(g, [&](const Matching& m) { out.push_back(m); });
    return out;
}

enum class CountMethod : std::uint8_t { enumerate, frontier_dp };

// Effective frontier cap: DIMERLAB_DP_CAP when set to a positive integer,
// otherwise 28. The sweep state is one machine word, so 63 is a hard ceiling.
inline int dp_frontier_cap() {
    if (const char* s = std::getenv("DIMERLAB_DP_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 28;
}

namespace detail {

// Sweep plan for the frontier dynamic program: vertices in breadth-first
// order from the lowest id (restarting at the lowest unvisited id), each
// assigned a reusable frontier slot for the steps where it can still gain a
// matching edge.
struct FrontierPlan {
    std::vector<VertexId> order;
    std::vector<int> pos;    // vertex -> sweep step
    std::vector<int> slot;   // vertex -> frontier bit
    std::vector<std::vector<VertexId>> release;  // step -> vertices leaving after it
    int width = 0;
};

inline FrontierPlan plan_frontier(const Graph& g) {
    const std::size_t n = g.vertex_count();
    FrontierPlan plan;
    plan.pos.assign(n, -1);
    plan.order.reserve(n);
    for (VertexId s = 0; s < n; ++s) {
        if (plan.pos[s] >= 0) continue;
        std::size_t head = plan.order.size();
        plan.order.push_back(s);
        plan.pos[s] = 0;
        while (head < plan.order.size()) {
            VertexId v = plan.order[head++];
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (plan.pos[w] < 0) {
                    plan.pos[w] = 0;
                    plan.order.push_back(w);
                }
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) plan.pos[plan.order[k]] = static_cast<int>(k);
    std::vector<int> last(n);
    for (VertexId v = 0; v < n; ++v) {
        int l = plan.pos[v];
        for (EdgeId e : g.incident_edges(v)) l = std::max(l, plan.pos[g.other_end(e, v)]);
        last[v] = l;
    }
    plan.release.assign(n, {});
    for (VertexId v = 0; v < n; ++v) plan.release[last[v]].push_back(v);
    plan.slot.assign(n, -1);
    std::set<int> free_slots;
    int high = 0, active = 0;
    for (std::size_t k = 0; k < n; ++k) {
        VertexId v = plan.order[k];
        if (!free_slots.empty()) {
            plan.slot[v] = *free_slots.begin();
            free_slots.erase(free_slots.begin());
        } else {
            plan.slot[v] = high++;
        }
        ++active;
        plan.width = std::max(plan.width, active);
        for (VertexId u : plan.release[k]) {
            free_slots.insert(plan.slot[u]);
            --active;
        }
    }
    return plan;
}

// One sweep of the frontier dynamic program. State: bitmask of swept-but-
// uncovered vertices still in the frontier. A state dies when an uncovered
// vertex leaves the frontier. Value is BigCount for plain counts or
// Polynomial for weighted sums; parallel edges contribute one transition
// each.
template <class Value>
Value frontier_dp(const Graph& g, int cap) {
    FrontierPlan plan = plan_frontier(g);
    int limit = std::min(cap, 63);
    if (plan.width > limit)
        throw CapacityError("frontier width " + std::to_string(plan.width) +
                            " exceeds the cap of " + std::to_string(limit) +
                            "; raise DIMERLAB_DP_CAP or use the enumeration backend");
    auto make = [](const BigCount& c) {
        if constexpr (std::is_same_v<Value, Polynomial>) return Polynomial::constant(c);
        else return BigCount(c);
    };
    const std::size_t n = g.vertex_count();
    std::unordered_map<std::uint64_t, Value> cur;
    cur.emplace(0, make(1));
    for (std::size_t k = 0; k < n; ++k) {
        VertexId v = plan.order[k];
        std::uint64_t vbit = 1ULL << plan.slot[v];
        std::uint64_t release_mask = 0;
        for (VertexId u : plan.release[k]) release_mask |= 1ULL << plan.slot[u];
        std::unordered_map<std::uint64_t, Value> next;
        next.reserve(cur.size() * 2);
        auto emit = [&](std::uint64_t mask, Value val) {
            if (mask & release_mask) return;
            auto it = next.find(mask);
            if (it == next.end()) next.emplace(mask, std::move(val));
            else it->second += val;
        };
        for (const auto& [mask, val] : cur) {
            emit(mask | vbit, val);  // v stays uncovered for now
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (plan.pos[w] >= static_cast<int>(k)) continue;
                std::uint64_t wbit = 1ULL << plan.slot[w];
                if (!(mask & wbit)) continue;
                if constexpr (std::is_same_v<Value, Polynomial>) {
                    emit(mask & ~wbit, val.times_symbol(g.edge(e).weight));
                } else {
                    emit(mask & ~wbit, val);
                }
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(0);
    return it == cur.end() ? make(0) : it->second;
}

}  // namespace detail

inline BigCount count_pm(const Graph& g, CountMethod method = CountMethod::frontier_dp,
                         int frontier_cap = dp_frontier_cap()) {
    if (method == CountMethod::enumerate) {
        BigCount total = 0;
        for_each_pm(g, [&](const Matching&) { ++total; });
        return total;
    }
    return detail::frontier_dp<BigCount>(g, frontier_cap);
}

// Sum over perfect matchings of the product of edge weights. The DP backend
// keeps whole polynomials as state values, so it is restricted to graphs
// using at most 2 distinct non-unit symbols; enumeration has no restriction.
inline Polynomial weighted_pm_sum(const Graph& g, CountMethod method = CountMethod::enumerate,
                                  int frontier_cap = dp_frontier_cap()) {
    if (method == CountMethod::enumerate) {
        Polynomial total;
        Monomial running;
        std::vector<Monomial> stack;
        // track the running product incrementally alongside the enumeration
        const std::size_t n = g.vertex_count();
        std::vector<char> covered(n, 0);
        auto rec = [&](auto&& self, VertexId scan_from) -> void {
            VertexId v = scan_from;
            while (v < n && covered[v]) ++v;
            if (v >= n) {
                total.add_term(running, 1);
                return;
            }
            covered[v] = 1;
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (covered[w]) continue;
                covered[w] = 1;
                WeightSymbol ws = g.edge(e).weight;
                if (ws != WeightSymbol::unit) ++running.exps[symbol_index(ws)];
                self(self, v + 1);
                if (ws != WeightSymbol::unit) --running.exps[symbol_index(ws)];
                covered[w] = 0;
            }
            covered[v] = 0;
        };
        rec(rec, 0);
        return total;
    }
    std::set<WeightSymbol> symbols;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).weight != WeightSymbol::unit) symbols.insert(g.edge(e).weight);
    if (symbols.size() > 2)
        throw CapacityError("weighted frontier DP supports at most 2 distinct symbols; graph uses " +
                            std::to_string(symbols.size()));
    if (symbols.empty())
        return Polynomial::constant(detail::frontier_dp<BigCount>(g, frontier_cap));
    return detail::frontier_dp<Polynomial>(g, frontier_cap);
}

// One family of the structured correspondence on a vertex-edge graph M(G) of
// a connected cubic G with an even edge count: a perfect matching of the
// line-graph part picks one e-e edge inside half the blocks; swapping each
// picked edge for the opposite v-e edge frees the block's v-vertex and leaves
// the other blocks free to be covered independently, three ways each.
struct StructuredFamily {
    Matching line_cover;                // the line-graph matching, as e-e edge ids of M(G), sorted
    Matching replaced;                  // its v-e replacement matching, sorted
    std::vector<VertexId> free_blocks;  // base vertex ids of the untouched blocks, ascending
    std::vector<Matching> coverings;    // the family: 3^{|free_blocks|} perfect matchings of M(G)
};

inline std::vector<StructuredFamily> structured_pm_families(const Graph& g) {
    if (!g.connected()) throw PreconditionError("graph must be connected");
    if (g.has_parallel_edges()) throw PreconditionError("graph must be simple");
    if (!g.is_cubic()) throw PreconditionError("graph must be cubic");
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (m % 2 != 0) throw PreconditionError("edge count must be even");

    Graph lg = line_graph(g);
    Graph mg = middle_graph(g);
    std::vector<K4Block> blocks = k4_decomposition(mg);  // one per base vertex, ascending

    auto mg_edge = [&](VertexId a, VertexId b) {
        auto e = mg.find_edge(a, b);
        if (!e) throw std::logic_error("expected derived-graph edge is missing");
        return *e;
    };
    auto ev = [&](EdgeId base_edge) { return static_cast<VertexId>(n + base_edge); };
    auto common_endpoint = [&](EdgeId i, EdgeId j) {
        const Edge& ei = g.edge(i);
        const Edge& ej = g.edge(j);
        if (ei.u == ej.u || ei.u == ej.v) return ei.u;
        if (ei.v == ej.u || ei.v == ej.v) return ei.v;
        throw std::logic_error("line-graph edge joins non-adjacent base edges");
    };

    std::vector<StructuredFamily> families;
    for (const Matching& ml : enumerate_pm(lg)) {
        StructuredFamily fam;
        // occupied[k]: the pair of base edges matched inside block k, if any
        std::vector<std::optional<std::pair<EdgeId, EdgeId>>> occupied(n);
        for (EdgeId le : ml) {
            EdgeId i = lg.edge(le).u;  // line-graph vertex ids are base edge ids
            EdgeId j = lg.edge(le).v;
            VertexId k = common_endpoint(i, j);
            if (occupied[k])
                throw std::logic_error("two matching edges inside one block");
            occupied[k] = std::minmax(i, j);
            fam.line_cover.push_back(mg_edge(ev(i), ev(j)));
        }
        std::size_t occupied_count = 0;
        for (VertexId k = 0; k < n; ++k) {
            if (occupied[k]) ++occupied_count;
            else fam.free_blocks.push_back(k);
        }
        if (occupied_count != m / 2)
            throw std::logic_error("line cover does not occupy exactly half the blocks");

        // replacement: inside each occupied block, the v-e edge of the third base edge
        for (VertexId k = 0; k < n; ++k) {
            if (!occupied[k]) continue;
            const K4Block& b = blocks[k];
            EdgeId third = kNoEdge;
            for (EdgeId be : b.base_edges)
                if (be != occupied[k]->first && be != occupied[k]->second) third = be;
            if (third == kNoEdge) throw std::logic_error("occupied block lost its third edge");
            fam.replaced.push_back(mg_edge(k, ev(third)));
        }
        std::sort(fam.line_cover.begin(), fam.line_cover.end());
        std::sort(fam.replaced.begin(), fam.replaced.end());
        if (!is_matching(mg, fam.replaced) || fam.replaced.size() != m / 2)
            throw std::logic_error("replacement is not a matching of the expected size");

        // the line cover must stay clear of every free block
        std::vector<EdgeId> cover_at(mg.vertex_count(), kNoEdge);
        for (EdgeId me : fam.line_cover) {
            cover_at[mg.edge(me).u] = me;
            cover_at[mg.edge(me).v] = me;
        }
        for (VertexId k : fam.free_blocks) {
            const K4Block& b = blocks[k];
            std::set<EdgeId> covering;
            for (VertexId x : b.e_vertices) {
                EdgeId me = cover_at[x];
                if (me == kNoEdge)
                    throw std::logic_error("line cover misses an e-vertex of a free block");
                for (EdgeId be : b.edges)
                    if (be == me)
                        throw std::logic_error("line cover enters a free block");
                covering.insert(me);
            }
            if (covering.size() != 3)
                throw std::logic_error("free block e-vertices share a covering edge");
        }
        // free blocks are pairwise vertex-disjoint
        for (std::size_t p = 0; p < fam.free_blocks.size(); ++p) {
            for (std::size_t q = p + 1; q < fam.free_blocks.size(); ++q) {
                const K4Block& bp = blocks[fam.free_blocks[p]];
                const K4Block& bq = blocks[fam.free_blocks[q]];
                std::set<VertexId> vp(bp.e_vertices.begin(), bp.e_vertices.end());
                vp.insert(bp.base_vertex);
                for (VertexId x : bq.e_vertices)
                    if (vp.count(x)) throw std::logic_error("free blocks share a vertex");
                if (vp.count(bq.base_vertex))
                    throw std::logic_error("free blocks share a vertex");
            }
        }

        // the three perfect matchings of one block, in a fixed order
        auto block_pms = [&](const K4Block& b) {
            VertexId v = b.base_vertex;
            auto [p, q, r] = b.e_vertices;
            return std::array<std::array<EdgeId, 2>, 3>{{
                {mg_edge(v, p), mg_edge(q, r)},
                {mg_edge(v, q), mg_edge(p, r)},
                {mg_edge(v, r), mg_edge(p, q)},
            }};
        };
        // members: the replacement matching plus one perfect matching per free
        // block — the generating line cover itself is what got swapped away
        Matching stem = fam.replaced;
        std::vector<int> digits(fam.free_blocks.size(), 0);
        for (;;) {
            Matching member = stem;
            for (std::size_t i = 0; i < digits.size(); ++i) {
                auto pm = block_pms(blocks[fam.free_blocks[i]])[digits[i]];
                member.push_back(pm[0]);
                member.push_back(pm[1]);
            }
            std::sort(member.begin(), member.end());
            if (!is_perfect_matching(mg, member))
                throw std::logic_error("family member is not a perfect matching");
            fam.coverings.push_back(std::move(member));
            std::size_t i = digits.size();
            while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
        families.push_back(std::move(fam));
    }
    return families;
}

}  // namespace dimerlab
