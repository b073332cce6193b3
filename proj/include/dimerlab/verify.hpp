#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "dimerlab/formulas.hpp"
#include "dimerlab/io.hpp"
#include "dimerlab/lattices.hpp"
#include "dimerlab/matching.hpp"
#include "dimerlab/transforms.hpp"
#include "dimerlab/version.hpp"

namespace dimerlab {

// One predicted-vs-oracle comparison. `error` is set (and `match` left false)
// when the case hit a capacity bound instead of producing values.
struct VerifyCase {
    std::string graph;
    std::string tag;
    std::string predicted;
    std::string oracle;
    bool match = false;
    double ms = 0.0;
    std::string note;
    std::string error;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    std::vector<VerifyCase> cases;

    VerificationReport() = default;
    VerificationReport(std::string s, std::uint64_t sd) : suite(std::move(s)), seed(sd) {}

    std::size_t matched() const {
        std::size_t k = 0;
        for (const auto& c : cases) k += c.match ? 1 : 0;
        return k;
    }
    std::size_t errored() const {
        std::size_t k = 0;
        for (const auto& c : cases) k += c.error.empty() ? 0 : 1;
        return k;
    }
    std::size_t mismatched() const { return cases.size() - matched() - errored(); }
    bool all_match() const { return matched() == cases.size(); }
};

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
    nlohmann::ordered_json out;
    out["suite"] = rep.suite;
    out["seed"] = rep.seed;
    out["version"] = rep.version;
    auto& cases = out["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.cases) {
        nlohmann::ordered_json jc;
        jc["graph"] = c.graph;
        jc["tag"] = c.tag;
        jc["predicted"] = c.predicted;
        jc["oracle"] = c.oracle;
        jc["match"] = c.match;
        jc["ms"] = c.ms;
        if (!c.note.empty()) jc["note"] = c.note;
        if (!c.error.empty()) jc["error"] = c.error;
        cases.push_back(std::move(jc));
    }
    out["summary"] = {{"total", rep.cases.size()},
                      {"matched", rep.matched()},
                      {"mismatched", rep.mismatched()},
                      {"errors", rep.errored()}};
    return out;
}

namespace detail {

inline std::string hex_seed(std::uint64_t s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(s));
    return buf;
}

template <class Body>
void run_case(VerificationReport& rep, std::string desc, std::string tag, Body&& body) {
    VerifyCase c;
    c.graph = std::move(desc);
    c.tag = std::move(tag);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const CapacityError& e) {
        c.error = e.what();
        c.match = false;
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
    rep.cases.push_back(std::move(c));
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<VertexId> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Deterministic subcubic sample, optionally restricted to even edge counts.
inline Graph sample_subcubic(std::uint64_t seed, std::uint64_t salt, int nmax,
                             bool even_edges, std::size_t* n_out) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::uint64_t s = mix_seed(seed, salt * 4096 + attempt);
        std::size_t n = 3 + static_cast<std::size_t>(s % static_cast<std::uint64_t>(nmax - 2));
        Graph g = random_subcubic(n, mix_seed(s, 17));
        if (!even_edges || g.edge_count() % 2 == 0) {
            if (n_out) *n_out = n;
            return g;
        }
    }
}

inline std::vector<std::size_t> cubic_sizes(int nmax) {
    std::vector<std::size_t> sizes;
    for (std::size_t n : {std::size_t(4), std::size_t(8), std::size_t(12)})
        if (n <= static_cast<std::size_t>(nmax)) sizes.push_back(n);
    if (sizes.empty()) sizes.push_back(4);
    return sizes;
}

}  // namespace detail

// Line-graph counts against the closed form on a random subcubic corpus.
inline VerificationReport suite_thm11(int nmax = 12, int trials = 30, std::uint64_t seed = 1) {
    VerificationReport rep{"thm11", seed};
    detail::run_case(rep, "K4", "Thm1.1", [&](VerifyCase& c) {
        Graph g = named_cubic("K4");
        c.predicted = pm_line_formula(g).str();
        c.oracle = count_pm(line_graph(g), CountMethod::enumerate).str();
        c.match = c.predicted == c.oracle;
    });
    for (int t = 0; t < trials; ++t) {
        std::size_t n = 0;
        Graph g = detail::sample_subcubic(seed, static_cast<std::uint64_t>(t), nmax, true, &n);
        std::string desc = "random_subcubic(n=" + std::to_string(n) +
                           ", seed=" + detail::hex_seed(seed) + ", t=" + std::to_string(t) + ")";
        detail::run_case(rep, desc, "Thm1.1", [&](VerifyCase& c) {
            c.predicted = pm_line_formula(g).str();
            c.oracle = count_pm(line_graph(g), CountMethod::enumerate).str();
            c.match = c.predicted == c.oracle;
        });
    }
    return rep;
}

// Vertex-edge counts of even cubic graphs against the closed form.
inline VerificationReport suite_thm14(int nmax = 12, int trials = 30, std::uint64_t seed = 1) {
    VerificationReport rep{"thm14", seed};
    for (const char* name : {"K4", "cube"}) {
        detail::run_case(rep, name, "Thm1.4", [&](VerifyCase& c) {
            Graph g = named_cubic(name);
            c.predicted = pm_middle_cubic_even(g).str();
            c.oracle = count_pm(middle_graph(g), CountMethod::enumerate).str();
            c.match = c.predicted == c.oracle;
        });
    }
    auto sizes = detail::cubic_sizes(nmax);
    for (int t = 0; t < trials; ++t) {
        std::size_t n = sizes[static_cast<std::size_t>(t) % sizes.size()];
        std::uint64_t gseed = mix_seed(seed, 1000 + static_cast<std::uint64_t>(t));
        Graph g = random_cubic(n, gseed);
        std::string desc = "random_cubic(n=" + std::to_string(n) +
                           ", seed=" + detail::hex_seed(gseed) + ")";
        detail::run_case(rep, desc, "Thm1.4", [&](VerifyCase& c) {
            c.predicted = pm_middle_cubic_even(g).str();
            c.oracle = count_pm(middle_graph(g), CountMethod::enumerate).str();
            c.match = c.predicted == c.oracle;
        });
    }
    return rep;
}

// Odd cubic graphs with one non-cut edge removed, every edge of the three
// fixtures, against both oracle forms (delete the edge, then derive; derive,
// then delete the e-vertex).
inline VerificationReport suite_thm15(int = 0, int = 0, std::uint64_t seed = 1) {
    VerificationReport rep{"thm15", seed};
    for (const char* name : {"petersen", "K33", "prism"}) {
        Graph g = named_cubic(name);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            std::string desc = std::string(name) + " minus edge " + std::to_string(e);
            detail::run_case(rep, desc, "Thm1.5", [&](VerifyCase& c) {
                PredictionResult r = pm_middle_cubic_minus_edge(g, e);
                c.tag = formula_tag_name(r.tag);
                c.predicted = r.value->str();
                c.oracle = count_pm(middle_graph(remove_edge(g, e)), CountMethod::enumerate).str();
                VertexId ev = static_cast<VertexId>(g.vertex_count() + e);
                BigCount alt = count_pm(remove_vertex(middle_graph(g), ev),
                                        CountMethod::enumerate);
                c.note = "vertex-deleted oracle " + alt.str();
                c.match = c.predicted == c.oracle && alt.str() == c.predicted;
            });
        }
    }
    return rep;
}

// Cut edges of the two bridged fixtures against both oracle forms.
inline VerificationReport suite_thm16(int = 0, int = 0, std::uint64_t seed = 1) {
    VerificationReport rep{"thm16", seed};
    for (const char* name : {"bridged10", "bridged14"}) {
        Graph g = named_cubic(name);
        for (EdgeId e : g.bridges()) {
            std::string desc = std::string(name) + " minus cut edge " + std::to_string(e);
            detail::run_case(rep, desc, "Thm1.6", [&](VerifyCase& c) {
                PredictionResult r = pm_middle_cubic_minus_edge(g, e);
                c.tag = formula_tag_name(r.tag);
                c.predicted = r.value->str();
                c.oracle = count_pm(middle_graph(remove_edge(g, e)), CountMethod::enumerate).str();
                VertexId ev = static_cast<VertexId>(g.vertex_count() + e);
                BigCount alt = count_pm(remove_vertex(middle_graph(g), ev),
                                        CountMethod::enumerate);
                c.note = "vertex-deleted oracle " + alt.str();
                c.match = c.predicted == c.oracle && alt.str() == c.predicted;
            });
        }
    }
    return rep;
}

// The structured families on even cubic graphs: right number of families,
// right family sizes, pairwise disjoint, and their union is exactly the set
// of dimer coverings of the vertex-edge graph.
inline VerificationReport suite_bijection(int nmax = 12, int trials = 30, std::uint64_t seed = 1) {
    VerificationReport rep{"bijection", seed};
    auto check = [](const Graph& g, VerifyCase& c) {
        const std::size_t n = g.vertex_count();
        const std::size_t m = g.edge_count();
        auto families = structured_pm_families(g);
        BigCount family_count = big_pow(2, m - n + 1);
        BigCount family_size = big_pow(3, n / 4);
        c.predicted = BigCount(family_count * family_size).str();
        bool ok = BigCount(families.size()) == family_count;
        std::set<Matching> all;
        std::size_t total = 0;
        for (const auto& fam : families) {
            ok = ok && BigCount(fam.coverings.size()) == family_size;
            for (const auto& member : fam.coverings) {
                all.insert(member);
                ++total;
            }
        }
        ok = ok && all.size() == total;  // pairwise disjoint
        Graph mg = middle_graph(g);
        std::set<Matching> oracle_set;
        for (Matching pm : enumerate_pm(mg)) {
            std::sort(pm.begin(), pm.end());
            oracle_set.insert(std::move(pm));
        }
        c.oracle = std::to_string(oracle_set.size());
        ok = ok && all == oracle_set;
        c.match = ok && c.predicted == c.oracle;
    };
    for (const char* name : {"K4", "cube"}) {
        detail::run_case(rep, name, "bijection", [&](VerifyCase& c) {
            Graph g = named_cubic(name);
            check(g, c);
        });
    }
    auto sizes = detail::cubic_sizes(nmax);
    for (int t = 0; t < trials; ++t) {
        std::size_t n = sizes[static_cast<std::size_t>(t) % sizes.size()];
        std::uint64_t gseed = mix_seed(seed, 2000 + static_cast<std::uint64_t>(t));
        Graph g = random_cubic(n, gseed);
        std::string desc = "random_cubic(n=" + std::to_string(n) +
                           ", seed=" + detail::hex_seed(gseed) + ")";
        detail::run_case(rep, desc, "bijection", [&](VerifyCase& c) { check(g, c); });
    }
    return rep;
}

// Fixed lattice checks: counts, weighted sums, per-covering weight balance,
// and the structural facts the formulas lean on.
inline VerificationReport suite_lattices(int = 0, int = 0, std::uint64_t seed = 1) {
    VerificationReport rep{"lattices", seed};
    detail::run_case(rep, "kagome(2,2)", "Eq3.1", [&](VerifyCase& c) {
        Graph k = kagome_torus({LatticeFamily::kagome, 2, 2, false});
        c.predicted = pm_kagome_formula(2, 2).str();
        c.oracle = count_pm(k, CountMethod::enumerate).str();
        bool dp_same = count_pm(k, CountMethod::frontier_dp) == BigCount(c.oracle);
        c.match = c.predicted == c.oracle && c.predicted == "32" && dp_same;
    });
    detail::run_case(rep, "kagome(3,2)", "Eq3.1", [&](VerifyCase& c) {
        Graph k = kagome_torus({LatticeFamily::kagome, 3, 2, false});
        c.predicted = pm_kagome_formula(2, 3).str();
        c.oracle = count_pm(k, CountMethod::enumerate).str();
        bool dp_same = count_pm(k, CountMethod::frontier_dp) == BigCount(c.oracle);
        c.match = c.predicted == c.oracle && c.predicted == "128" && dp_same;
    });
    detail::run_case(rep, "kagome(2,2) weighted", "Eq3.2", [&](VerifyCase& c) {
        Graph k = kagome_torus({LatticeFamily::kagome, 2, 2, true});
        Polynomial predicted = pm_kagome_weighted(2, 2);
        Polynomial oracle = weighted_pm_sum(k, CountMethod::enumerate);
        c.predicted = predicted.str();
        c.oracle = oracle.str();
        c.match = predicted == oracle;
    });
    detail::run_case(rep, "kagome weight balance", "Eq3.2", [&](VerifyCase& c) {
        bool ok = true;
        for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}}) {
            Graph k = kagome_torus({LatticeFamily::kagome, rows, cols, true});
            std::size_t half = rows * cols / 2;
            for_each_pm(k, [&](const Matching& pm) {
                std::size_t count[kWeightSymbolCount] = {};
                for (EdgeId e : pm) ++count[symbol_index(k.edge(e).weight)];
                for (WeightSymbol s : {WeightSymbol::a, WeightSymbol::b, WeightSymbol::c})
                    if (count[symbol_index(s)] != half) ok = false;
            });
        }
        c.predicted = "balanced";
        c.oracle = ok ? "balanced" : "unbalanced";
        c.match = ok;
    });
    detail::run_case(rep, "silicate(2,2)", "Remark3.2", [&](VerifyCase& c) {
        Graph s = silicate_torus({LatticeFamily::silicate, 2, 2, false});
        c.predicted = pm_silicate_count(2, 2).str();
        c.oracle = count_pm(s, CountMethod::enumerate).str();
        bool dp_same = count_pm(s, CountMethod::frontier_dp) == BigCount(c.oracle);
        c.match = c.predicted == c.oracle && c.predicted == "288" && dp_same;
    });
    detail::run_case(rep, "silicate(2,2) weighted", "Thm3.1", [&](VerifyCase& c) {
        Graph s = silicate_torus({LatticeFamily::silicate, 2, 2, true});
        Polynomial predicted = pm_silicate_weighted(2, 2);
        Polynomial oracle = weighted_pm_sum(s, CountMethod::enumerate);
        c.predicted = predicted.str();
        c.oracle = oracle.str();
        c.match = predicted == oracle;
    });
    detail::run_case(rep, "honeycomb(2,2) structure", "lattices", [&](VerifyCase& c) {
        Graph h = honeycomb_torus({LatticeFamily::honeycomb, 2, 2, false});
        bool ok = h.is_cubic() && h.connected() && detail::is_bipartite(h) &&
                  h.vertex_count() == 8;
        c.predicted = "cubic bipartite torus";
        c.oracle = ok ? "cubic bipartite torus" : "structure violated";
        c.match = ok;
    });
    detail::run_case(rep, "silicate(2,2) blocks", "lattices", [&](VerifyCase& c) {
        Graph s = silicate_torus({LatticeFamily::silicate, 2, 2, false});
        auto blocks = k4_decomposition(s);
        c.predicted = std::to_string(2 * 2 * 2);
        c.oracle = std::to_string(blocks.size());
        c.match = c.predicted == c.oracle;
    });
    return rep;
}

// Random subcubic graphs: the count of the vertex-edge graph is preserved by
// every reduction step, and the prediction pipeline (closed form, or exact
// count on the reduced base) equals the direct oracle.
inline VerificationReport suite_reduction(int nmax = 10, int trials = 50, std::uint64_t seed = 1) {
    VerificationReport rep{"reduction", seed};
    for (int t = 0; t < trials; ++t) {
        std::size_t n = 0;
        Graph g = detail::sample_subcubic(seed, 3000 + static_cast<std::uint64_t>(t), nmax,
                                          false, &n);
        std::string desc = "random_subcubic(n=" + std::to_string(n) +
                           ", seed=" + detail::hex_seed(seed) + ", t=" + std::to_string(t) + ")";
        detail::run_case(rep, desc, "reduction", [&](VerifyCase& c) {
            BigCount oracle = count_pm(middle_graph(g), CountMethod::enumerate);
            c.oracle = oracle.str();
            auto [base, trace] = reduce_to_base(g);
            bool conserved = true;
            Graph cur = g;
            for (const auto& step : trace.steps) {
                cur = step.kind == ReductionStep::Kind::pendant
                          ? remove_pendant(cur, step.removed)
                          : smooth_degree_two(cur, step.removed);
                if (count_pm(middle_graph(cur), CountMethod::enumerate) != oracle) {
                    conserved = false;
                    break;
                }
            }
            PredictionResult pr = predict_pm_middle(g);
            c.tag = formula_tag_name(pr.tag);
            c.predicted = pm_middle_resolved(g).str();
            c.note = std::string("base ") + base_class_name(trace.base_class) + ", " +
                     std::to_string(trace.steps.size()) + " steps";
            c.match = conserved && c.predicted == c.oracle;
        });
    }
    return rep;
}

// Engine self-consistency on a mixed corpus: both counting backends agree,
// the weighted sum evaluates to the count, odd orders give zero, and the
// weighted DP (when applicable) matches the weighted enumeration.
inline VerificationReport engine_consistency(std::uint64_t seed = 1) {
    VerificationReport rep{"engine", seed};
    std::vector<std::pair<std::string, Graph>> corpus;
    for (const char* name : {"K4", "K33", "prism", "cube", "petersen", "bridged10", "bridged14"})
        corpus.emplace_back(name, named_cubic(name));
    corpus.emplace_back("line(K4)", line_graph(named_cubic("K4")));
    corpus.emplace_back("line(K33)", line_graph(named_cubic("K33")));
    corpus.emplace_back("line(prism)", line_graph(named_cubic("prism")));
    corpus.emplace_back("middle(K4)", middle_graph(named_cubic("K4")));
    auto cycle = [](std::size_t k, bool alternate = false) {
        Graph g(k == 2);
        g.add_vertices(k);
        for (VertexId i = 0; i < k; ++i)
            g.add_edge(i, (i + 1) % k,
                       alternate ? (i % 2 ? WeightSymbol::y : WeightSymbol::x)
                                 : WeightSymbol::unit);
        return g;
    };
    auto path = [](std::size_t k) {
        Graph g;
        g.add_vertices(k);
        for (VertexId i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
        return g;
    };
    for (std::size_t k : {std::size_t(2), std::size_t(3), std::size_t(4), std::size_t(5),
                          std::size_t(6)})
        corpus.emplace_back("C" + std::to_string(k), cycle(k));
    corpus.emplace_back("C6 two-symbol", cycle(6, true));
    for (std::size_t k : {std::size_t(2), std::size_t(3), std::size_t(4)})
        corpus.emplace_back("P" + std::to_string(k), path(k));
    corpus.emplace_back("middle(C3)", middle_graph(cycle(3)));
    corpus.emplace_back("middle(C5)", middle_graph(cycle(5)));
    corpus.emplace_back("middle(P3)", middle_graph(path(3)));
    corpus.emplace_back("K1", path(1));
    corpus.emplace_back("empty", Graph{});
    {
        Graph k4w;
        k4w.add_vertices(4);
        k4w.add_edge(0, 1, WeightSymbol::x);
        k4w.add_edge(0, 2, WeightSymbol::y);
        k4w.add_edge(0, 3, WeightSymbol::z);
        k4w.add_edge(1, 2, WeightSymbol::c);
        k4w.add_edge(1, 3, WeightSymbol::b);
        k4w.add_edge(2, 3, WeightSymbol::a);
        corpus.emplace_back("K4 weighted", k4w);
    }
    corpus.emplace_back("honeycomb(2,2)", honeycomb_torus({LatticeFamily::honeycomb, 2, 2}));
    corpus.emplace_back("honeycomb(2,3)",
                        honeycomb_torus({LatticeFamily::honeycomb, 2, 3}));
    corpus.emplace_back("kagome(2,2)", kagome_torus({LatticeFamily::kagome, 2, 2}));
    for (std::size_t n : {std::size_t(4), std::size_t(6), std::size_t(8)})
        for (std::uint64_t s = 0; s < 3; ++s)
            corpus.emplace_back(
                "random_cubic(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")",
                random_cubic(n, mix_seed(seed, 4000 + 10 * n + s)));
    for (std::uint64_t t = 0; t < 6; ++t) {
        std::size_t n = 0;
        Graph g = detail::sample_subcubic(seed, 5000 + t, 12, false, &n);
        corpus.emplace_back("random_subcubic(n=" + std::to_string(n) + ", t=" +
                                std::to_string(t) + ")",
                            g);
    }

    for (const auto& [name, g] : corpus) {
        if (g.vertex_count() > 16) continue;
        detail::run_case(rep, name, "engine", [&, &graph = g](VerifyCase& c) {
            BigCount via_enum = count_pm(graph, CountMethod::enumerate);
            BigCount via_dp = count_pm(graph, CountMethod::frontier_dp);
            Polynomial weighted = weighted_pm_sum(graph, CountMethod::enumerate);
            bool ok = via_enum == via_dp && weighted.eval_all_ones() == via_enum;
            if (graph.vertex_count() % 2 == 1) ok = ok && via_enum == 0;
            std::set<WeightSymbol> symbols;
            for (EdgeId e = 0; e < graph.edge_count(); ++e)
                if (graph.edge(e).weight != WeightSymbol::unit)
                    symbols.insert(graph.edge(e).weight);
            if (symbols.size() <= 2)
                ok = ok && weighted_pm_sum(graph, CountMethod::frontier_dp) == weighted;
            c.predicted = via_enum.str();
            c.oracle = via_dp.str();
            c.match = ok;
        });
    }
    return rep;
}

inline std::vector<std::string> suite_names() {
    return {"thm11", "thm14", "thm15", "thm16", "bijection", "lattices", "reduction"};
}

// Run one named suite (or `all`, which concatenates the seven) with optional
// overrides; each suite supplies its own defaults otherwise.
inline VerificationReport run_suite(const std::string& name, std::optional<int> nmax,
                                    std::optional<int> trials,
                                    std::optional<std::uint64_t> seed) {
    std::uint64_t s = seed.value_or(1);
    auto pick = [&](int dflt_nmax, int dflt_trials) {
        return std::pair<int, int>(nmax.value_or(dflt_nmax), trials.value_or(dflt_trials));
    };
    if (name == "thm11") {
        auto [k, t] = pick(12, 30);
        return suite_thm11(k, t, s);
    }
    if (name == "thm14") {
        auto [k, t] = pick(12, 30);
        return suite_thm14(k, t, s);
    }
    if (name == "thm15") return suite_thm15(0, 0, s);
    if (name == "thm16") return suite_thm16(0, 0, s);
    if (name == "bijection") {
        auto [k, t] = pick(12, 30);
        return suite_bijection(k, t, s);
    }
    if (name == "lattices") return suite_lattices(0, 0, s);
    if (name == "reduction") {
        auto [k, t] = pick(10, 50);
        return suite_reduction(k, t, s);
    }
    if (name == "all") {
        VerificationReport all{"all", s};
        for (const auto& sub : suite_names()) {
            VerificationReport r = run_suite(sub, nmax, trials, seed);
            for (auto& c : r.cases) all.cases.push_back(std::move(c));
        }
        return all;
    }
    throw PreconditionError("unknown suite \"" + name + "\"");
}

}  // namespace dimerlab
