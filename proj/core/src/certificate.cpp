#include "oramsey/certificate.hpp"

#include <json.hpp>

#include "oramsey/errors.hpp"
#include "oramsey/graph_ops.hpp"
#include "oramsey/io.hpp"

namespace oramsey::cert {

namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json vertices_json(const auto& vs) {
    Json arr = Json::array();
    for (auto v : vs) arr.push_back(v + 1);
    return arr;
}

void put_color(Json& j, const std::optional<Color>& c) {
    if (c) j["color"] = to_string(*c);
}

Json pattern_json(const OrderedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("certificate: " + what, 0); }

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
    return *it;
}

std::size_t to_size(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        bad(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

Vertex to_vertex(const Json& j) {
    const auto v = to_size(j, "vertex");
    if (v == 0) bad("vertex indices start at 1");
    return v - 1;
}

std::vector<Vertex> vertex_list(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<Vertex> out;
    for (const auto& x : j) out.push_back(to_vertex(x));
    return out;
}

VertexSet vertex_set(const Json& j, const char* what) {
    try {
        return VertexSet(vertex_list(j, what));
    } catch (const DomainError& e) {
        bad(std::string(what) + ": " + e.what());
    }
}

Rational rational(const Json& j, const char* what) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParameterError& e) {
            bad(std::string(what) + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    bad(std::string(what) + " must be a rational string such as \"1/3\"");
}

std::optional<Color> color(const Json& j) {
    auto it = j.find("color");
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) bad("color must be \"red\" or \"blue\"");
    auto c = parse_color(it->get<std::string>());
    if (!c) bad("color must be \"red\" or \"blue\"");
    return c;
}

OrderedGraph pattern(const Json& j) {
    const auto n = to_size(field(j, "n"), "pattern n");
    const auto& edges = field(j, "edges");
    if (!edges.is_array()) bad("pattern edges must be an array");
    std::vector<Edge> out;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) bad("pattern edge must be a pair");
        out.push_back({to_vertex(e[0]), to_vertex(e[1])});
    }
    try {
        return OrderedGraph(n, std::move(out));
    } catch (const DomainError& e) {
        bad(std::string("pattern: ") + e.what());
    }
}

Json to_json_value(const Document& d) {
    return std::visit(
        Overloaded{
            [](const EmbeddingDoc& e) {
                Json j{{"kind", "embedding"}};
                put_color(j, e.color);
                j["pattern"] = pattern_json(e.pattern);
                j["map"] = vertices_json(e.embedding.map);
                return j;
            },
            [](const SparsePairDoc& p) {
                Json j{{"kind", "sparse_pair"}};
                put_color(j, p.color);
                j["A"] = vertices_json(p.pair.a);
                j["B"] = vertices_json(p.pair.b);
                j["c"] = to_string(p.pair.c);
                j["density"] = to_string(p.pair.density);
                return j;
            },
            [](const SparseSetDoc& s) {
                Json j{{"kind", "sparse_set"}};
                put_color(j, s.color);
                j["W"] = vertices_json(s.w);
                j["density"] = to_string(s.density);
                return j;
            },
            [](const SkeletonDoc& s) {
                Json j{{"kind", "skeleton"}};
                put_color(j, s.color);
                j["a"] = s.skeleton.a;
                j["b"] = s.skeleton.b;
                j["spine"] = vertices_json(s.skeleton.spine);
                Json blocks = Json::array();
                for (const auto& blk : s.skeleton.blocks) blocks.push_back(vertices_json(blk));
                j["blocks"] = blocks;
                return j;
            },
            [](const ExhaustedDoc& e) { return Json{{"kind", "exhausted"}, {"trace", e.trace}}; },
            [](const RamseyExactDoc& r) {
                Json j{{"kind", "ramsey_exact"}};
                j["n_star"] = r.n_star ? Json(*r.n_star) : Json(nullptr);
                j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
                return j;
            },
        },
        d);
}

}  // namespace

Document from_certificate(const Certificate& c) {
    return std::visit(Overloaded{
                          [](const MonoCopy& m) -> Document { return EmbeddingDoc{m.color, m.pattern, m.embedding}; },
                          [](const SparseSet& s) -> Document { return SparseSetDoc{s.color, s.w, s.density}; },
                          [](const Exhausted& e) -> Document { return ExhaustedDoc{e.trace}; },
                      },
                      c);
}

Document from_exact(const std::optional<ExactRamsey>& r) {
    if (!r) return RamseyExactDoc{};
    return RamseyExactDoc{r->n_star, io::format_coloring(r->witness)};
}

std::string kind_of(const Document& d) {
    static constexpr const char* names[] = {"embedding", "sparse_pair", "sparse_set",
                                            "skeleton",  "exhausted",   "ramsey_exact"};
    return names[d.index()];
}

std::string to_json(const Document& d) { return to_json_value(d).dump(2) + "\n"; }

Document parse(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    const auto& kind_field = field(j, "kind");
    if (!kind_field.is_string()) bad("kind must be a string");
    const auto kind = kind_field.get<std::string>();
    try {
        if (kind == "embedding") return EmbeddingDoc{color(j), pattern(field(j, "pattern")),
                                                     Embedding{vertex_list(field(j, "map"), "map")}};
        if (kind == "sparse_pair") {
            SparsePairDoc d;
            d.color = color(j);
            d.pair.a = vertex_set(field(j, "A"), "A");
            d.pair.b = vertex_set(field(j, "B"), "B");
            d.pair.c = rational(field(j, "c"), "c");
            d.pair.density = rational(field(j, "density"), "density");
            return d;
        }
        if (kind == "sparse_set")
            return SparseSetDoc{color(j), vertex_set(field(j, "W"), "W"), rational(field(j, "density"), "density")};
        if (kind == "skeleton") {
            SkeletonDoc d;
            d.color = color(j);
            d.skeleton.a = to_size(field(j, "a"), "a");
            d.skeleton.b = to_size(field(j, "b"), "b");
            d.skeleton.spine = vertex_list(field(j, "spine"), "spine");
            const auto& blocks = field(j, "blocks");
            if (!blocks.is_array()) bad("blocks must be an array");
            for (const auto& blk : blocks) d.skeleton.blocks.push_back(vertex_set(blk, "block"));
            return d;
        }
        if (kind == "exhausted") {
            ExhaustedDoc d;
            for (const auto& line : field(j, "trace")) d.trace.push_back(line.get<std::string>());
            return d;
        }
        if (kind == "ramsey_exact") {
            RamseyExactDoc d;
            if (const auto& n = field(j, "n_star"); !n.is_null()) d.n_star = to_size(n, "n_star");
            if (const auto& w = field(j, "witness"); !w.is_null()) d.witness = w.get<std::string>();
            return d;
        }
    } catch (const Json::exception& e) {
        bad(std::string("malformed ") + kind + ": " + e.what());
    }
    bad("unknown kind \"" + kind + "\"");
}

Verdict verify(const Document& d, const Host& host) {
    auto graph_for = [&](const std::optional<Color>& c) -> OrderedGraph {
        if (const auto* coloring = std::get_if<ColoredCompleteGraph>(&host)) {
            if (!c) throw DomainError("certificate names no colour but the host is a colouring");
            return color_class(*coloring, *c);
        }
        if (c) throw DomainError("certificate names a colour but the host is an uncoloured graph");
        return std::get<OrderedGraph>(host);
    };
    auto verdict = [](std::optional<std::string> problem) {
        return problem ? Verdict{false, *problem} : Verdict{true, "ok"};
    };
    return std::visit(
        Overloaded{
            [&](const EmbeddingDoc& e) {
                return verdict(check_embedding(graph_for(e.color), e.pattern, e.embedding));
            },
            [&](const SparsePairDoc& p) -> Verdict {
                const auto g = graph_for(p.color);
                const auto n = g.vertex_count();
                if (p.pair.a.empty() || p.pair.b.empty()) return {false, "A and B must be nonempty"};
                if (p.pair.a.back() >= n || p.pair.b.back() >= n) return {false, "pair leaves the host"};
                if (!precedes(p.pair.a, p.pair.b)) return {false, "A < B fails"};
                const Rational dens = density_between(g, p.pair.a, p.pair.b);
                if (dens > p.pair.c)
                    return {false, "density " + to_string(dens) + " exceeds c = " + to_string(p.pair.c)};
                if (dens != p.pair.density)
                    return {false, "claimed density " + to_string(p.pair.density) + " but recomputed " +
                                       to_string(dens)};
                return {true, "ok"};
            },
            [&](const SparseSetDoc& s) -> Verdict {
                const auto g = graph_for(s.color);
                if (!s.w.empty() && s.w.back() >= g.vertex_count()) return {false, "W leaves the host"};
                const Rational dens = density_within(g, s.w);
                if (dens > s.density)
                    return {false, "density " + to_string(dens) + " exceeds the claimed " + to_string(s.density)};
                return {true, "ok"};
            },
            [&](const SkeletonDoc& s) -> Verdict {
                auto check = verify_skeleton(graph_for(s.color), s.skeleton);
                return check ? Verdict{true, "ok"} : Verdict{false, check.detail};
            },
            [&](const ExhaustedDoc&) -> Verdict {
                throw DomainError("an exhausted report carries nothing to verify");
            },
            [&](const RamseyExactDoc&) -> Verdict {
                throw DomainError("ramsey_exact documents are not verified against a host");
            },
        },
        d);
}

std::string subdivision_sidecar(const Subdivision& s) {
    Json j;
    j["n"] = s.n;
    j["base"] = vertices_json(s.base);
    Json triples = Json::array();
    for (const auto& [tr, v] : s.triple_index)
        triples.push_back(Json{{"triple", vertices_json(tr)}, {"vertex", v + 1}});
    j["triples"] = triples;
    return j.dump(2) + "\n";
}

}  // namespace oramsey::cert
