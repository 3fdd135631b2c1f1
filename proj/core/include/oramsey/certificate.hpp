#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oramsey/constructions.hpp"
#include "oramsey/embed.hpp"
#include "oramsey/exact.hpp"
#include "oramsey/pipeline.hpp"
#include "oramsey/skeleton.hpp"

// JSON certificates. Vertex indices are 1-based, rationals are "p/q".
namespace oramsey::cert {

struct EmbeddingDoc {
    std::optional<Color> color;
    OrderedGraph pattern;
    Embedding embedding;
};

struct SparsePairDoc {
    std::optional<Color> color;
    SparsePair pair;
};

struct SparseSetDoc {
    std::optional<Color> color;
    VertexSet w;
    Rational density;
};

struct SkeletonDoc {
    std::optional<Color> color;
    Skeleton skeleton;
};

struct ExhaustedDoc {
    std::vector<std::string> trace;
};

struct RamseyExactDoc {
    std::optional<std::size_t> n_star;
    std::optional<std::string> witness;  // ".okc" text
};

using Document = std::variant<EmbeddingDoc, SparsePairDoc, SparseSetDoc, SkeletonDoc, ExhaustedDoc, RamseyExactDoc>;

Document from_certificate(const Certificate& c);
Document from_exact(const std::optional<ExactRamsey>& r);

std::string kind_of(const Document& d);

// Pretty-printed JSON with a trailing newline.
std::string to_json(const Document& d);

// Throws ParseError on malformed JSON or missing fields.
Document parse(std::string_view json);

using Host = std::variant<OrderedGraph, ColoredCompleteGraph>;

struct Verdict {
    bool ok = true;
    std::string message;
};

// Re-runs the verifier matching the document kind. A colour field is
// required for colouring hosts and forbidden for graph hosts. Throws
// DomainError when the kind cannot be checked against the host.
Verdict verify(const Document& d, const Host& host);

// {"n": ..., "base": [...], "triples": [{"triple": [i, j, k], "vertex": v}, ...]}
std::string subdivision_sidecar(const Subdivision& s);

}  // namespace oramsey::cert
