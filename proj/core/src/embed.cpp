#include "oramsey/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "matcher.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/graph_ops.hpp"

namespace oramsey {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::string vlabel(Vertex v) { return std::to_string(v + 1); }

void check_c(const Rational& c) {
    if (c <= 0 || c >= 1) throw ParameterError("threshold c must satisfy 0 < c < 1, got " + to_string(c));
}

// count >= c * total, exactly.
bool at_least_fraction(std::size_t count, const Rational& c, std::size_t total) {
    return static_cast<BigInt>(count) * c.denominator() >= static_cast<BigInt>(c.numerator()) * total;
}

}  // namespace

void validate_slots(const SlotSystem& s, std::size_t pattern_n, std::size_t host_n) {
    if (s.slots.size() != pattern_n)
        throw DomainError("slot system has " + std::to_string(s.slots.size()) + " slots for a pattern on " +
                          std::to_string(pattern_n) + " vertices");
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
        if (s.slots[i].empty()) throw DomainError("slot " + std::to_string(i + 1) + " is empty");
        s.slots[i].check_within(host_n, "slot system");
        if (i > 0 && !(s.slots[i - 1].back() < s.slots[i].front()))
            throw DomainError("slots " + std::to_string(i) + " and " + std::to_string(i + 1) +
                              " are not blockwise increasing");
    }
}

std::optional<std::string> check_embedding(const OrderedGraph& host, const OrderedGraph& pattern,
                                           const Embedding& emb, const SlotSystem* slots) {
    if (emb.map.size() != pattern.vertex_count())
        return "map has " + std::to_string(emb.map.size()) + " entries for a pattern on " +
               std::to_string(pattern.vertex_count()) + " vertices";
    for (std::size_t i = 0; i < emb.map.size(); ++i) {
        if (emb.map[i] >= host.vertex_count())
            return "image of pattern vertex " + vlabel(i) + " is outside the host";
        if (i > 0 && !(emb.map[i - 1] < emb.map[i]))
            return "map is not increasing at pattern vertices " + vlabel(i - 1) + ", " + vlabel(i);
        if (slots && !slots->slots.at(i).contains(emb.map[i]))
            return "pattern vertex " + vlabel(i) + " mapped outside its slot";
    }
    for (const auto& e : pattern.edges())
        if (!host.adjacent(emb.map[e.u], emb.map[e.v]))
            return "pattern edge (" + vlabel(e.u) + ", " + vlabel(e.v) + ") maps to non-edge (" +
                   vlabel(emb.map[e.u]) + ", " + vlabel(emb.map[e.v]) + ")";
    return std::nullopt;
}

std::optional<Embedding> find_ordered_embedding(const OrderedGraph& host, const OrderedGraph& pattern,
                                                const std::optional<SlotSystem>& slots) {
    detail::OrderedMatcher matcher(host.adjacency(), pattern);
    std::vector<Bitset> masks;
    if (slots) {
        validate_slots(*slots, pattern.vertex_count(), host.vertex_count());
        for (const auto& s : slots->slots) masks.push_back(s.to_bitset(host.vertex_count()));
        for (std::size_t i = 0; i < masks.size(); ++i) matcher.restrict_slot(i, &masks[i]);
    }
    std::optional<Embedding> found;
    matcher.run([&](std::span<const Vertex> images) {
        found = Embedding{{images.begin(), images.end()}};
        return true;
    });
    return found;
}

std::uint64_t count_embeddings(const OrderedGraph& host, const OrderedGraph& pattern, std::uint64_t cap) {
    if (cap < 1) throw ParameterError("count cap must be at least 1");
    detail::OrderedMatcher matcher(host.adjacency(), pattern);
    std::uint64_t count = 0;
    matcher.run([&](std::span<const Vertex>) { return ++count >= cap; });
    return count;
}

bool meets_greedy_bound(std::size_t size, const Rational& c, std::size_t delta, std::size_t n) {
    if (delta == 0) return true;
    // size * delta * q^delta >= p^delta * n
    BigInt lhs = static_cast<BigInt>(size) * delta, rhs = n;
    for (std::size_t k = 0; k < delta; ++k) {
        lhs *= c.denominator();
        rhs *= c.numerator();
    }
    return lhs >= rhs;
}

EmbedOrPair greedy_embed_or_sparse_pair(const OrderedGraph& host, const OrderedGraph& pattern,
                                        const SlotSystem& slots, const Rational& c,
                                        const GreedyOptions& options) {
    check_c(c);
    const std::size_t n = pattern.vertex_count();
    validate_slots(slots, n, host.vertex_count());

    std::vector<Bitset> cand;  // U_i^{(t)}
    cand.reserve(n);
    for (const auto& s : slots.slots) cand.push_back(s.to_bitset(host.vertex_count()));

    std::vector<std::vector<Vertex>> later(n);  // neighbours v_i with i > t
    for (const auto& e : pattern.edges()) later[e.u].push_back(e.v);
    std::vector<std::size_t> placed_nbrs(n, 0);  // |N_t(v_i)|

    auto check_invariant = [&](std::size_t t) {
        const long double cl = to_long_double(c);
        for (std::size_t i = t + 1; i < n; ++i) {
            const long double need = std::pow(cl, static_cast<long double>(placed_nbrs[i])) *
                                     static_cast<long double>(slots.slots[i].size());
            if (static_cast<long double>(cand[i].count()) < need * (1 - 1e-12L))
                throw ContractError("greedy candidate invariant broken at step " + std::to_string(t + 1) +
                                    " for pattern vertex " + vlabel(i));
        }
    };

    Embedding emb{std::vector<Vertex>(n)};
    for (std::size_t t = 0; t < n; ++t) {
        const auto& nexts = later[t];
        std::size_t chosen = Bitset::npos;
        for (auto w = cand[t].find_first(); w != Bitset::npos; w = cand[t].find_next(w + 1)) {
            const bool ok = std::all_of(nexts.begin(), nexts.end(), [&](Vertex i) {
                return at_least_fraction(host.neighbors(w).intersect_count(cand[i]), c, cand[i].count());
            });
            if (ok) {
                chosen = w;
                break;
            }
        }
        if (chosen != Bitset::npos) {
            emb.map[t] = chosen;
            cand[t].reset_all();
            cand[t].set(chosen);
            for (auto i : nexts) {
                cand[i] &= host.neighbors(chosen);
                ++placed_nbrs[i];
            }
            if (options.check_invariants) check_invariant(t);
            continue;
        }

        // Every candidate fails for some later neighbour. Assign each to its
        // smallest failing neighbour and take the smallest neighbour whose
        // group holds at least a 1/|later| share.
        if (nexts.empty() || cand[t].none())
            throw ContractError("greedy embedding stuck without a failing neighbour");
        std::vector<std::size_t> group(nexts.size(), 0);
        const std::size_t total = cand[t].count();
        cand[t].for_each([&](std::size_t w) {
            for (std::size_t k = 0; k < nexts.size(); ++k) {
                const auto i = nexts[k];
                if (!at_least_fraction(host.neighbors(w).intersect_count(cand[i]), c, cand[i].count())) {
                    ++group[k];
                    break;
                }
            }
        });
        std::size_t pick = nexts.size();
        for (std::size_t k = 0; k < nexts.size(); ++k)
            if (group[k] * nexts.size() >= total) {
                pick = k;
                break;
            }
        if (pick == nexts.size()) throw ContractError("pigeonhole step found no large group");
        const Vertex i = nexts[pick];
        std::vector<Vertex> a;
        cand[t].for_each([&](std::size_t w) {
            if (!at_least_fraction(host.neighbors(w).intersect_count(cand[i]), c, cand[i].count()))
                a.push_back(w);
        });
        SparsePair pair{VertexSet(std::move(a)), VertexSet::from_bitset(cand[i]), c, Rational(0)};
        pair.density = density_between(host, pair.a, pair.b);
        return pair;
    }
    if (auto bad = check_embedding(host, pattern, emb, &slots))
        throw ContractError("greedy embedding failed verification: " + *bad);
    return emb;
}

long double skeleton_required_b(const Rational& c, std::size_t a, std::size_t m) {
    const long double md = static_cast<long double>(m);
    return 2 * md * md * std::pow(to_long_double(c), -2 * md / static_cast<long double>(a));
}

long double skeleton_pair_bound(const Rational& c, std::size_t a, std::size_t b, std::size_t m) {
    const long double md = static_cast<long double>(m);
    return std::pow(to_long_double(c), 2 * md / static_cast<long double>(a)) * static_cast<long double>(b) /
           (2 * md * md);
}

EmbedOrPair skeleton_embed_or_sparse_pair(const OrderedGraph& host, const Skeleton& skeleton,
                                          const OrderedGraph& pattern, const Rational& c,
                                          const SkeletonEmbedOptions& options) {
    check_c(c);
    const std::size_t n = pattern.vertex_count();
    const std::size_t m = pattern.edge_count();
    if (m == 0) throw DomainError("pattern must have at least one edge");
    for (Vertex v = 0; v < n; ++v)
        if (pattern.degree(v) == 0) throw DomainError("pattern vertex " + vlabel(v) + " is isolated");
    if (auto check = verify_skeleton(host, skeleton); !check)
        throw DomainError("not a skeleton of the host: " + check.detail);
    if (skeleton.a == 0) throw ParameterError("skeleton must have a >= 1");
    if (options.enforce_b_bound) {
        const long double need = skeleton_required_b(c, skeleton.a, m);
        if (static_cast<long double>(skeleton.b) < need)
            throw ParameterError("skeleton b = " + std::to_string(skeleton.b) +
                                 " is below the required 2 m^2 c^(-2m/a) = " + std::to_string(need));
    }

    // The a highest-degree pattern vertices (ties to the smaller index) go on
    // the spine, in increasing order.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return pattern.degree(x) > pattern.degree(y); });
    const std::size_t on_spine = std::min(skeleton.a, n);
    std::vector<Vertex> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(on_spine));
    std::sort(chosen.begin(), chosen.end());

    // Non-chosen vertices between consecutive chosen ones share block V_j,
    // which is cut into equal contiguous parts; the top remainder is unused.
    std::vector<Vertex> rest;
    SlotSystem slots;
    std::size_t next_chosen = 0;
    std::size_t j = 0;  // current block
    std::vector<std::vector<Vertex>> per_block(on_spine + 1);
    for (Vertex v = 0; v < n; ++v) {
        if (next_chosen < chosen.size() && chosen[next_chosen] == v) {
            ++next_chosen;
            ++j;
            continue;
        }
        per_block[j].push_back(v);
        rest.push_back(v);
    }
    for (std::size_t blk = 0; blk <= on_spine; ++blk) {
        const auto count = per_block[blk].size();
        if (count == 0) continue;
        const auto& members = skeleton.blocks[blk].members();
        const std::size_t part = members.size() / count;
        if (part == 0)
            throw ParameterError("block V_" + std::to_string(blk) + " has " + std::to_string(members.size()) +
                                 " vertices, too few for " + std::to_string(count) + " pattern vertices");
        for (std::size_t k = 0; k < count; ++k)
            slots.slots.emplace_back(std::vector<Vertex>(members.begin() + static_cast<std::ptrdiff_t>(k * part),
                                                         members.begin() + static_cast<std::ptrdiff_t>((k + 1) * part)));
    }

    const OrderedGraph remainder = pattern.induced(VertexSet(rest));
    EmbedOrPair inner = greedy_embed_or_sparse_pair(host, remainder, slots, c);
    if (std::holds_alternative<SparsePair>(inner)) return inner;

    const auto& part = std::get<Embedding>(inner).map;
    Embedding full{std::vector<Vertex>(n)};
    for (std::size_t k = 0; k < chosen.size(); ++k) full.map[chosen[k]] = skeleton.spine[k];
    for (std::size_t k = 0; k < rest.size(); ++k) full.map[rest[k]] = part[k];
    if (auto bad = check_embedding(host, pattern, full))
        throw ContractError("skeleton embedding failed verification: " + *bad);
    return full;
}

}  // namespace oramsey
