#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "oramsey/certificate.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/embed.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/exact.hpp"
#include "oramsey/graph_ops.hpp"
#include "oramsey/io.hpp"
#include "oramsey/pipeline.hpp"
#include "oramsey/skeleton.hpp"

namespace fs = std::filesystem;
using namespace oramsey;

namespace {

enum Exit : int {
    kOk = 0,
    kInvalid = 1,
    kInputError = 2,
    kBoundExceeded = 3,
    kExhausted = 4,
    kGenerationFailure = 5,
};

struct RunConfig {
    std::optional<std::uint64_t> seed;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t tuple_cap = kDefaultTupleCap;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t exhaustive_threshold = kDefaultExhaustiveThreshold;
    bool quiet = false;

    std::uint64_t effective_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("ORAMSEY_SEED")) {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(env, &used);
                if (used == std::string(env).size()) return v;
            } catch (const std::exception&) {
            }
            throw ParameterError(std::string("ORAMSEY_SEED is not a 64-bit integer: ") + env);
        }
        return 0;
    }
};

RunConfig cfg;

void note(const std::string& line) {
    if (!cfg.quiet) std::cerr << line << "\n";
}

std::string load(const std::string& path) { return io::read_file(path); }

template <typename F>
auto parse_file(const std::string& path, F&& parse) {
    const std::string text = load(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

OrderedGraph read_graph(const std::string& path) { return parse_file(path, io::parse_ordered_graph); }
ColoredCompleteGraph read_coloring(const std::string& path) { return parse_file(path, io::parse_coloring); }
Tournament read_tournament(const std::string& path) { return parse_file(path, io::parse_tournament); }

bool is_coloring_path(const std::string& path) { return fs::path(path).extension() == ".okc"; }

cert::Host read_host(const std::string& path) {
    if (is_coloring_path(path)) return read_coloring(path);
    return read_graph(path);
}

Color require_color(const std::string& text) {
    auto c = parse_color(text);
    if (!c) throw ParameterError("colour must be red or blue, got '" + text + "'");
    return *c;
}

// Graph to search in: the host itself, or one colour class of a colouring.
OrderedGraph search_graph(const std::string& path, const std::string& color_text, std::optional<Color>& color) {
    if (is_coloring_path(path)) {
        if (color_text.empty()) throw ParameterError("--color is required for a colouring host");
        color = require_color(color_text);
        return color_class(read_coloring(path), *color);
    }
    if (!color_text.empty()) throw ParameterError("--color only applies to colouring hosts");
    return read_graph(path);
}

void emit(const cert::Document& d) { std::cout << cert::to_json(d); }

std::string describe(const Certificate& c) {
    if (const auto* m = std::get_if<MonoCopy>(&c))
        return "found a " + to_string(m->color) + " copy of a pattern on " + std::to_string(m->pattern.vertex_count()) +
               " vertices";
    if (const auto* s = std::get_if<SparseSet>(&c))
        return "found a set of " + std::to_string(s->w.size()) + " vertices with " + to_string(s->color) +
               " density " + to_string(s->density);
    return "exhausted after " + std::to_string(std::get<Exhausted>(c).trace.size()) + " trace entries";
}

int cmd_exact(const std::string& h1_path, const std::string& h2_path, std::size_t max_n) {
    const auto h1 = read_graph(h1_path);
    const auto h2 = read_graph(h2_path);
    auto r = exact_ordered_ramsey(h1, h2, max_n, cfg.threads);
    emit(cert::from_exact(r));
    if (!r) {
        note("N* exceeds " + std::to_string(max_n));
        return kBoundExceeded;
    }
    note("N* = " + std::to_string(r->n_star));
    return kOk;
}

int cmd_search(const std::string& coloring_path, const std::string& h1_path, const std::string& h2_path,
               PipelineOverrides o) {
    const auto coloring = read_coloring(coloring_path);
    const auto h1 = read_graph(h1_path);
    const auto h2 = read_graph(h2_path);
    o.seed = cfg.effective_seed();
    o.tuple_cap = cfg.tuple_cap;
    o.exhaustive_threshold = cfg.exhaustive_threshold;
    const auto params = default_pipeline_params(h1, h2, o);
    auto c = find_mono_copy(coloring, h1, h2, params);
    emit(cert::from_certificate(c));
    note(describe(c));
    return std::holds_alternative<Exhausted>(c) ? kExhausted : kOk;
}

int cmd_embed(const std::string& host_path, const std::string& pattern_path, const std::string& color_text,
              const std::optional<std::string>& greedy) {
    std::optional<Color> color;
    const auto host = search_graph(host_path, color_text, color);
    const auto pattern = read_graph(pattern_path);
    if (!greedy) {
        auto emb = find_ordered_embedding(host, pattern);
        if (!emb) {
            note("no ordered copy");
            emit(cert::ExhaustedDoc{{"exhaustive search found no ordered copy of the pattern"}});
            return kExhausted;
        }
        emit(cert::EmbeddingDoc{color, pattern, *emb});
        note("found an ordered copy");
        return kOk;
    }
    const Rational c = parse_rational(*greedy);
    const std::size_t k = pattern.vertex_count();
    if (k == 0 || host.vertex_count() < k)
        throw ParameterError("host needs at least one vertex per pattern vertex for the greedy slots");
    const std::size_t part = host.vertex_count() / k;
    SlotSystem slots;
    for (std::size_t i = 0; i < k; ++i) slots.slots.push_back(VertexSet::range(i * part, (i + 1) * part));
    auto res = greedy_embed_or_sparse_pair(host, pattern, slots, c);
    if (auto* emb = std::get_if<Embedding>(&res)) {
        emit(cert::EmbeddingDoc{color, pattern, *emb});
        note("greedy embedding succeeded");
    } else {
        const auto& p = std::get<SparsePair>(res);
        emit(cert::SparsePairDoc{color, p});
        note("greedy embedding stalled; sparse pair with |A| = " + std::to_string(p.a.size()) +
             ", |B| = " + std::to_string(p.b.size()));
    }
    return kOk;
}

int cmd_skeleton(const std::string& host_path, const std::string& color_text, std::size_t a,
                 std::optional<std::size_t> n, const std::string& d_text, const std::string& sparse_text,
                 const std::string& c_text, std::size_t samples) {
    if (!sparse_text.empty()) {
        if (!is_coloring_path(host_path)) throw ParameterError("--sparse-color needs a colouring host");
        if (c_text.empty()) throw ParameterError("--c is required with --sparse-color");
        const auto coloring = read_coloring(host_path);
        DenseSkeletonOptions opts;
        opts.samples = samples;
        opts.seed = cfg.effective_seed();
        opts.enforce_preconditions = false;
        auto res = find_skeleton_in_dense(coloring, require_color(sparse_text), a, parse_rational(c_text), opts);
        if (auto* f = std::get_if<SkeletonSearchFailure>(&res)) {
            emit(cert::ExhaustedDoc{{f->reason}});
            note("no skeleton: " + f->reason);
            return kExhausted;
        }
        const auto& ds = std::get<DenseSkeleton>(res);
        emit(cert::SkeletonDoc{ds.color, ds.skeleton});
        note("found a " + to_string(ds.color) + " skeleton with b = " + std::to_string(ds.skeleton.b));
        return kOk;
    }
    std::optional<Color> color;
    const auto host = search_graph(host_path, color_text, color);
    const Rational d = d_text.empty() ? Rational(1) : parse_rational(d_text);
    auto res = find_skeleton_from_cliques(host, n.value_or(4 * a + 1), a, d, cfg.tuple_cap);
    using S = CliqueSkeletonResult::Status;
    if (res.status == S::CapExceeded) {
        if (res.skeleton) {
            emit(cert::SkeletonDoc{color, *res.skeleton});
            note("tuple cap exceeded; skeleton with b = " + std::to_string(res.skeleton->b) + " from the first " +
                 std::to_string(res.tuples) + " tuples");
        } else {
            emit(cert::ExhaustedDoc{{"clique tuple count exceeds the cap of " + std::to_string(cfg.tuple_cap)}});
            note("tuple cap exceeded");
        }
        return kBoundExceeded;
    }
    if (res.status == S::NotFound) {
        emit(cert::ExhaustedDoc{{"no bucket reaches b = " + std::to_string(res.target_b) + " over " +
                                 std::to_string(res.tuples) + " tuples"}});
        note("no skeleton");
        return kExhausted;
    }
    emit(cert::SkeletonDoc{color, *res.skeleton});
    note("found a skeleton with b = " + std::to_string(res.skeleton->b) + " from " + std::to_string(res.tuples) +
         " tuples in " + std::to_string(res.buckets) + " buckets");
    return kOk;
}

int cmd_sparse_set(const std::string& coloring_path, const std::string& h1_path, const std::string& h2_path,
                   const std::string& c_text, SparseSetOptions o) {
    const auto coloring = read_coloring(coloring_path);
    const auto h1 = read_graph(h1_path);
    const auto h2 = read_graph(h2_path);
    o.seed = cfg.effective_seed();
    o.tuple_cap = cfg.tuple_cap;
    auto c = recursive_sparse_set(coloring, h1, h2, parse_rational(c_text), o);
    emit(cert::from_certificate(c));
    note(describe(c));
    return std::holds_alternative<Exhausted>(c) ? kExhausted : kOk;
}

int write_output(const std::optional<std::string>& out, const std::string& text, const std::string& kind,
                 std::size_t vertices, std::size_t arcs) {
    const std::string summary = kind + ": " + std::to_string(vertices) + " vertices, " + std::to_string(arcs) + " arcs";
    if (out) {
        io::write_file(*out, text);
        std::cout << "{\"kind\": \"construction\", \"construction\": \"" << kind << "\", \"vertices\": " << vertices
                  << ", \"arcs\": " << arcs << "}\n";
    } else {
        std::cout << text;
    }
    note(summary);
    return kOk;
}

std::size_t arc_total(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

int cmd_construct_sn(std::size_t n, const std::optional<std::string>& out, const std::optional<std::string>& sidecar) {
    const auto s = build_subdivision_S(n);
    if (sidecar) io::write_file(*sidecar, cert::subdivision_sidecar(s));
    return write_output(out, io::format_digraph(s.digraph), "sn", s.digraph.vertex_count(), s.digraph.arc_count());
}

int cmd_construct_blowup(const std::string& outer_path, const std::string& inner_path,
                         const std::optional<std::string>& out) {
    const auto b = blowup(read_tournament(outer_path), read_tournament(inner_path));
    const auto n = b.tournament.vertex_count();
    return write_output(out, io::format_tournament(b.tournament), "blowup", n, arc_total(n));
}

int cmd_construct_lowerbound(std::size_t n, std::size_t max_tries, const std::optional<std::string>& out) {
    const auto t = iterated_lower_bound_tournament(n, cfg.effective_seed(), max_tries);
    const auto v = t.vertex_count();
    const auto found = contains_subdivision(t, n, cfg.node_budget);
    static constexpr const char* status[] = {"found", "none", "budget exhausted"};
    note("S_" + std::to_string(n) + " containment: " + status[static_cast<int>(found.status)]);
    return write_output(out, io::format_tournament(t), "lowerbound", v, arc_total(v));
}

int cmd_verify(const std::string& cert_path, const std::string& host_path) {
    const auto doc = parse_file(cert_path, cert::parse);
    const auto host = read_host(host_path);
    const auto v = cert::verify(doc, host);
    if (!v.ok) {
        std::cerr << "invalid " << cert::kind_of(doc) << ": " << v.message << "\n";
        return kInvalid;
    }
    note("valid " + cert::kind_of(doc));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordered Ramsey search, certificates and tournament constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "PRNG seed (default: $ORAMSEY_SEED, else 0)");
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--tuple-cap", cfg.tuple_cap, "clique tuple cap")->check(CLI::PositiveNumber);
    app.add_option("--node-budget", cfg.node_budget, "containment search node budget")->check(CLI::PositiveNumber);
    app.add_option("--exhaustive-threshold", cfg.exhaustive_threshold, "exhaustive fallback size")
        ->check(CLI::PositiveNumber);
    app.add_flag("-q,--quiet", cfg.quiet, "no summaries on stderr");

    std::string p1, p2, p3;
    std::string color_text, d_text, c_text, sparse_text;
    std::optional<std::size_t> n_opt;
    std::optional<std::string> out, sidecar, greedy;
    std::size_t max_n = 10, a = 1, n = 0, samples = 64, max_tries = 1000;

    auto* exact = app.add_subcommand("exact", "exact ordered Ramsey number of two patterns");
    exact->add_option("h1", p1, "red pattern (.og)")->required();
    exact->add_option("h2", p2, "blue pattern (.og)")->required();
    exact->add_option("--max-n", max_n, "largest N to try");

    PipelineOverrides po;
    std::string c1_text, c2_text;
    auto* search = app.add_subcommand("search", "monochromatic copy search in a colouring");
    search->add_option("coloring", p1, "colouring (.okc)")->required();
    search->add_option("h1", p2, "red pattern (.og)")->required();
    search->add_option("h2", p3, "blue pattern (.og)")->required();
    search->add_option("--c1", c1_text, "first-phase density");
    search->add_option("--a", po.a, "second skeleton size");
    search->add_option("--c2", c2_text, "second-phase density");
    search->add_option("--spacing", po.spacing, "spacing of the thinned sets");
    search->add_option("--samples", po.samples, "sampled windows and cliques");

    auto* embed = app.add_subcommand("embed", "ordered embedding or greedy sparse pair");
    embed->add_option("host", p1, "host (.og, or .okc with --color)")->required();
    embed->add_option("pattern", p2, "pattern (.og)")->required();
    embed->add_option("--color", color_text, "colour class of a .okc host");
    embed->add_option("--greedy", greedy, "run the greedy process with threshold c");

    auto* skeleton = app.add_subcommand("skeleton", "find an (a, b)-skeleton");
    skeleton->add_option("host", p1, "host (.og, or .okc)")->required();
    skeleton->add_option("--a", a, "spine size")->check(CLI::PositiveNumber);
    skeleton->add_option("--n", n_opt, "window size (default 4a+1)");
    skeleton->add_option("--d", d_text, "clique-window fraction d (default 1)");
    skeleton->add_option("--color", color_text, "colour class of a .okc host");
    skeleton->add_option("--sparse-color", sparse_text, "search a colouring whose given colour is sparse");
    skeleton->add_option("--c", c_text, "density bound of the sparse colour");
    skeleton->add_option("--samples", samples, "sampled windows");

    SparseSetOptions so;
    auto* sparse = app.add_subcommand("sparse-set", "recursive sparse set in a colouring");
    sparse->add_option("coloring", p1, "colouring (.okc)")->required();
    sparse->add_option("h1", p2, "red pattern (.og)")->required();
    sparse->add_option("h2", p3, "blue pattern (.og)")->required();
    sparse->add_option("--c", c_text, "target density, below 1/8")->required();
    sparse->add_option("--k1", so.k1, "red skeleton size");
    sparse->add_option("--k2", so.k2, "blue skeleton size");
    sparse->add_option("--window", so.window, "clique window");
    sparse->add_option("--samples", so.samples, "sampled cliques when the tuple cap is hit");

    auto* construct = app.add_subcommand("construct", "write a construction");
    construct->require_subcommand(1);
    auto* sn = construct->add_subcommand("sn", "(1,2)-subdivision S_n (.dg)");
    sn->add_option("--n", n, "base vertices")->required();
    sn->add_option("--out", out, "output file (default stdout)");
    sn->add_option("--sidecar", sidecar, "triple map JSON");
    auto* bl = construct->add_subcommand("blowup", "blow-up of two tournaments (.trn)");
    bl->add_option("--outer", p1, "outer tournament (.trn)")->required();
    bl->add_option("--inner", p2, "inner tournament (.trn)")->required();
    bl->add_option("--out", out, "output file (default stdout)");
    auto* lb = construct->add_subcommand("lowerbound", "iterated lower-bound tournament (.trn)");
    lb->add_option("--n", n, "subdivision parameter")->required();
    lb->add_option("--max-tries", max_tries, "generation attempts per level");
    lb->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("certificate", p1, "certificate (.json)")->required();
    verify->add_option("host", p2, "host (.og or .okc)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }
    if (seed_opt->count() > 0) cfg.seed = seed;

    try {
        if (*exact) return cmd_exact(p1, p2, max_n);
        if (*search) {
            if (!c1_text.empty()) po.c1 = parse_rational(c1_text);
            if (!c2_text.empty()) po.c2 = parse_rational(c2_text);
            return cmd_search(p1, p2, p3, po);
        }
        if (*embed) return cmd_embed(p1, p2, color_text, greedy);
        if (*skeleton) return cmd_skeleton(p1, color_text, a, n_opt, d_text, sparse_text, c_text, samples);
        if (*sparse) return cmd_sparse_set(p1, p2, p3, c_text, so);
        if (*sn) return cmd_construct_sn(n, out, sidecar);
        if (*bl) return cmd_construct_blowup(p1, p2, out);
        if (*lb) return cmd_construct_lowerbound(n, max_tries, out);
        if (*verify) return cmd_verify(p1, p2);
    } catch (const GenerationFailure& e) {
        std::cerr << "error: " << e.what() << " (" << e.tries() << " tries)\n";
        return kGenerationFailure;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ContractError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
