#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dimerlab/formulas.hpp"
#include "dimerlab/graph.hpp"
#include "dimerlab/matching.hpp"
#include "dimerlab/polynomial.hpp"
#include "dimerlab/transforms.hpp"

namespace dimerlab {

inline constexpr const char* kGraphFormat = "dimerlab-graph-v1";

inline const char* role_name(RoleKind k) {
    switch (k) {
        case RoleKind::plain: return "plain";
        case RoleKind::v_vertex: return "v";
        case RoleKind::e_vertex: return "e";
    }
    return "?";
}

inline RoleKind role_from_name(const std::string& name) {
    if (name == "plain") return RoleKind::plain;
    if (name == "v") return RoleKind::v_vertex;
    if (name == "e") return RoleKind::e_vertex;
    throw FormatError("unknown vertex role \"" + name + "\"");
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["format"] = kGraphFormat;
    j["multigraph"] = g.multigraph();
    auto& vs = j["vertices"] = nlohmann::ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        jv["role"] = role_name(g.role(v).kind);
        if (g.role(v).origin) jv["origin"] = *g.role(v).origin;
        vs.push_back(std::move(jv));
    }
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        nlohmann::ordered_json je;
        je["id"] = e;
        je["u"] = ed.u;
        je["v"] = ed.v;
        je["weight"] = symbol_name(ed.weight);
        es.push_back(std::move(je));
    }
    return j;
}

inline std::string graph_to_json_string(const Graph& g) { return graph_to_json(g).dump(); }

namespace detail {

inline const nlohmann::json& need_field(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::uint32_t need_u32(const nlohmann::json& j, const char* key) {
    const auto& f = need_field(j, key);
    if (!f.is_number_unsigned()) throw FormatError(std::string("field \"") + key +
                                                   "\" must be a non-negative integer");
    auto v = f.get<std::uint64_t>();
    if (v > 0xFFFFFFFFull) throw FormatError(std::string("field \"") + key + "\" out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace detail

// Strict parse of the graph document: dense ids (any order), known roles and
// weights, loop/parallel rules enforced by reconstruction.
inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw FormatError("graph document must be a JSON object");
    const auto& fmt = detail::need_field(j, "format");
    if (!fmt.is_string() || fmt.get<std::string>() != kGraphFormat)
        throw FormatError(std::string("unsupported format; expected \"") + kGraphFormat + "\"");
    bool multigraph = false;
    if (auto it = j.find("multigraph"); it != j.end()) {
        if (!it->is_boolean()) throw FormatError("field \"multigraph\" must be a boolean");
        multigraph = it->get<bool>();
    }
    const auto& vs = detail::need_field(j, "vertices");
    const auto& es = detail::need_field(j, "edges");
    if (!vs.is_array() || !es.is_array())
        throw FormatError("\"vertices\" and \"edges\" must be arrays");

    std::vector<VertexRole> roles(vs.size());
    std::vector<char> seen_v(vs.size(), 0);
    for (const auto& jv : vs) {
        std::uint32_t id = detail::need_u32(jv, "id");
        if (id >= vs.size() || seen_v[id])
            throw FormatError("vertex ids must be exactly 0.." + std::to_string(vs.size() - 1));
        seen_v[id] = 1;
        VertexRole role;
        if (auto it = jv.find("role"); it != jv.end()) {
            if (!it->is_string()) throw FormatError("vertex role must be a string");
            role.kind = role_from_name(it->get<std::string>());
        }
        if (auto it = jv.find("origin"); it != jv.end()) {
            if (role.kind != RoleKind::e_vertex)
                throw FormatError("only e-vertices may carry an origin");
            role.origin = detail::need_u32(jv, "origin");
        }
        roles[id] = role;
    }

    struct ParsedEdge {
        VertexId u, v;
        WeightSymbol w;
    };
    std::vector<ParsedEdge> parsed(es.size());
    std::vector<char> seen_e(es.size(), 0);
    for (const auto& je : es) {
        std::uint32_t id = detail::need_u32(je, "id");
        if (id >= es.size() || seen_e[id])
            throw FormatError("edge ids must be exactly 0.." + std::to_string(es.size() - 1));
        seen_e[id] = 1;
        ParsedEdge pe{detail::need_u32(je, "u"), detail::need_u32(je, "v"), WeightSymbol::unit};
        if (auto it = je.find("weight"); it != je.end()) {
            if (!it->is_string()) throw FormatError("edge weight must be a string");
            pe.w = symbol_from_name(it->get<std::string>());
        }
        parsed[id] = pe;
    }

    Graph g(multigraph);
    for (const auto& role : roles) g.add_vertex(role);
    try {
        for (const auto& pe : parsed) g.add_edge(pe.u, pe.v, pe.w);
    } catch (const PreconditionError& e) {
        throw FormatError(std::string("invalid edge: ") + e.what());
    }
    return g;
}

inline Graph graph_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j);
}

// Graphviz rendering: v-vertices as circles, e-vertices as squares, non-unit
// weights as edge labels.
inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph dimerlab {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        switch (g.role(v).kind) {
            case RoleKind::v_vertex: os << "  " << v << " [shape=circle];\n"; break;
            case RoleKind::e_vertex: os << "  " << v << " [shape=square];\n"; break;
            case RoleKind::plain: os << "  " << v << ";\n"; break;
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        os << "  " << ed.u << " -- " << ed.v;
        if (ed.weight != WeightSymbol::unit)
            os << " [label=\"" << symbol_name(ed.weight) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// Polynomial document: a list of terms sorted by exponent vector, coefficients
// as decimal strings, exponent maps listing only the non-zero symbols.
inline nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = c.str();
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < kWeightSymbolCount; ++i)
            if (m.exps[i]) exps[symbol_name(symbol_at(i))] = m.exps[i];
        term["exps"] = std::move(exps);
        out.push_back(std::move(term));
    }
    return out;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw FormatError("polynomial document must be a JSON array");
    Polynomial p;
    for (const auto& term : j) {
        const auto& coeff = detail::need_field(term, "coeff");
        if (!coeff.is_string()) throw FormatError("coefficient must be a decimal string");
        BigCount c;
        try {
            c = BigCount(coeff.get<std::string>());
        } catch (const std::exception&) {
            throw FormatError("coefficient is not a decimal integer");
        }
        Monomial m;
        const auto& exps = detail::need_field(term, "exps");
        if (!exps.is_object()) throw FormatError("exps must be an object");
        for (auto it = exps.begin(); it != exps.end(); ++it) {
            WeightSymbol s = symbol_from_name(it.key());
            if (s == WeightSymbol::unit) throw FormatError("the unit symbol takes no exponent");
            if (!it->is_number_unsigned()) throw FormatError("exponents must be non-negative");
            m.exps[symbol_index(s)] = it->get<std::uint32_t>();
        }
        p.add_term(m, c);
    }
    return p;
}

inline nlohmann::ordered_json matching_to_json(const Matching& m) {
    Matching sorted = m;
    std::sort(sorted.begin(), sorted.end());
    return nlohmann::ordered_json(sorted);
}

inline nlohmann::ordered_json trace_to_json(const ReductionTrace& t) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : t.steps) {
        nlohmann::ordered_json js;
        js["op"] = s.kind == ReductionStep::Kind::pendant ? "pendant" : "smooth";
        js["removed"] = s.removed;
        if (s.new_edge) js["new_edge"] = *s.new_edge;
        steps.push_back(std::move(js));
    }
    nlohmann::ordered_json out;
    out["steps"] = std::move(steps);
    out["base_class"] = base_class_name(t.base_class);
    return out;
}

inline nlohmann::ordered_json prediction_to_json(const PredictionResult& r) {
    nlohmann::ordered_json out;
    if (r.value) out["value"] = r.value->str();
    out["tag"] = formula_tag_name(r.tag);
    if (r.trace) out["trace"] = trace_to_json(*r.trace);
    return out;
}

inline nlohmann::ordered_json family_to_json(const StructuredFamily& f, std::size_t index) {
    nlohmann::ordered_json out;
    out["l"] = index;
    out["Ml"] = matching_to_json(f.line_cover);
    out["Mlprime"] = matching_to_json(f.replaced);
    out["free_blocks"] = nlohmann::ordered_json(f.free_blocks);
    out["family_size"] = f.coverings.size();
    return out;
}

}  // namespace dimerlab
