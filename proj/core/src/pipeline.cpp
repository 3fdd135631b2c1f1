#include "oramsey/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "oramsey/errors.hpp"
#include "oramsey/graph_ops.hpp"
#include "oramsey/random.hpp"

namespace oramsey {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr int idx(Color c) { return c == Color::Red ? 0 : 1; }
constexpr std::array<Color, 2> kColors{Color::Red, Color::Blue};

std::string size_str(std::size_t n) { return std::to_string(n); }

VertexSet lift(const VertexSet& outer, const VertexSet& local) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (auto v : local) out.push_back(outer[v]);
    return VertexSet(std::move(out));
}

std::vector<Vertex> lift(const VertexSet& outer, std::span<const Vertex> local) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (auto v : local) out.push_back(outer[v]);
    return out;
}

// Position of v inside x; v must be a member.
Vertex local_index(const VertexSet& x, Vertex v) {
    auto it = std::lower_bound(x.begin(), x.end(), v);
    if (it == x.end() || *it != v) throw ContractError("vertex " + std::to_string(v + 1) + " is not in the set");
    return static_cast<Vertex>(it - x.begin());
}

VertexSet localize(const VertexSet& x, const VertexSet& global) {
    std::vector<Vertex> out;
    out.reserve(global.size());
    for (auto v : global) out.push_back(local_index(x, v));
    return VertexSet(std::move(out));
}

Rational pow2_inv(std::size_t h) {
    if (h > 62) throw ParameterError("halving budget " + std::to_string(h) + " is too large");
    return Rational(1, std::int64_t{1} << h);
}

// The `keep` vertices of `from` with the fewest neighbours in `into`; ties go
// to the smaller vertex. Returned in increasing order.
VertexSet lowest_degree(const OrderedGraph& g, const VertexSet& from, const Bitset& into, std::size_t keep) {
    std::vector<std::pair<std::size_t, Vertex>> scored;
    scored.reserve(from.size());
    for (auto v : from) scored.emplace_back(g.neighbors(v).intersect_count(into), v);
    std::sort(scored.begin(), scored.end());
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < keep && k < scored.size(); ++k) out.push_back(scored[k].second);
    return VertexSet(std::move(out));
}

// Subset of w of exactly t vertices with density <= bound. Greedily drops
// the highest-degree vertex (larger index on ties); small sets fall back to
// a lexicographic scan of all t-subsets.
std::optional<VertexSet> trim_to(const OrderedGraph& g, const VertexSet& w, std::size_t t, const Rational& bound) {
    if (w.size() < t) return std::nullopt;
    Bitset cur = w.to_bitset(g.vertex_count());
    std::size_t size = w.size();
    while (size > t) {
        Vertex drop = Bitset::npos;
        std::size_t best = 0;
        cur.for_each([&](std::size_t v) {
            const auto d = g.neighbors(v).intersect_count(cur);
            if (drop == Bitset::npos || d >= best) {
                drop = v;
                best = d;
            }
        });
        cur.reset(drop);
        --size;
    }
    VertexSet greedy = VertexSet::from_bitset(cur);
    if (density_within(g, greedy) <= bound) return greedy;
    if (w.size() > 20) return std::nullopt;
    std::vector<std::size_t> pick(t);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    const std::size_t n = w.size();
    while (true) {
        std::vector<Vertex> members;
        for (auto k : pick) members.push_back(w[k]);
        VertexSet cand(std::move(members));
        if (density_within(g, cand) <= bound) return cand;
        std::size_t k = t;
        while (k > 0 && pick[k - 1] == n - t + k - 1) --k;
        if (k == 0) return std::nullopt;
        ++pick[k - 1];
        for (std::size_t l = k; l < t; ++l) pick[l] = pick[l - 1] + 1;
    }
}

// Skeleton from random greedy cliques of size >= 4a+1, blocks expanded.
std::optional<Skeleton> sampled_clique_skeleton(const OrderedGraph& host, std::size_t a, std::size_t samples,
                                                std::uint64_t seed) {
    const std::size_t n = host.vertex_count();
    const std::size_t len = 4 * a + 1;
    if (n < len) return std::nullopt;
    Rng rng(seed);
    CliqueTupleIndex index(n, a);
    std::vector<Vertex> tuple(len);
    for (std::size_t s = 0; s < samples; ++s) {
        Bitset cand(n, true);
        std::vector<Vertex> clique;
        while (cand.any()) {
            auto k = uniform_below(rng, cand.count());
            Vertex v = cand.find_first();
            while (k-- > 0) v = cand.find_next(v + 1);
            clique.push_back(v);
            cand &= host.neighbors(v);
        }
        if (clique.size() < len) continue;
        std::sort(clique.begin(), clique.end());
        for (std::size_t j = 0; j < len; ++j) tuple[j] = clique[j * (clique.size() - 1) / (len - 1)];
        index.add_unchecked(tuple);
    }
    auto found = extract_skeleton(index, 1);
    if (!found) return std::nullopt;
    return expand_blocks(host, found->skeleton.spine);
}

struct TreeContext {
    const ColoredCompleteGraph& coloring;
    std::array<const OrderedGraph*, 2> patterns;
    const RecursionParams& p;
};

class BinaryTree {
public:
    explicit BinaryTree(TreeContext ctx) : ctx_(ctx) {}

    Certificate run(const VertexSet& x, std::array<std::size_t, 2> h, std::size_t depth) {
        const auto& c = ctx_.p.c;
        for (auto col : kColors)
            if (h[idx(col)] == 0) return sparse(col, x, x);
        if (x.size() == 1) return SparseSet{Color::Red, x, Rational(0)};

        const std::size_t hsum = h[0] + h[1];
        const long double floor_size = std::pow(ctx_.p.alpha, static_cast<long double>(hsum)) * x.size();
        const std::size_t t = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(floor_size)));
        const std::string where = "depth " + size_str(depth) + ", |X| = " + size_str(x.size()) + ", h = (" +
                                  size_str(h[0]) + ", " + size_str(h[1]) + ")";
        std::vector<std::string> trace;
        auto fail = [&](const std::string& reason) -> Certificate {
            if (floor_size <= 1.0L) return SparseSet{Color::Red, VertexSet{x.front()}, Rational(0)};
            trace.push_back(where + ": " + reason);
            return Exhausted{std::move(trace)};
        };

        const ColoredCompleteGraph sub = ctx_.coloring.restrict(x);
        const std::array<OrderedGraph, 2> g{color_class(sub, Color::Red), color_class(sub, Color::Blue)};

        const Color first = h[1] > h[0] ? Color::Blue : Color::Red;
        std::optional<Color> chosen;
        SparsePair pair;
        std::string reasons;
        for (auto col : {first, other(first)}) {
            const auto& host = g[idx(col)];
            const auto& pattern = *ctx_.patterns[idx(col)];
            std::string why;
            auto skel = find_skeleton(host, col, depth, why);
            if (!skel) {
                reasons += " [" + to_string(col) + ": " + why + "]";
                continue;
            }
            EmbedOrPair res;
            try {
                res = skeleton_embed_or_sparse_pair(host, *skel, pattern, c / 8, SkeletonEmbedOptions{false});
            } catch (const ParameterError& e) {
                reasons += " [" + to_string(col) + ": " + e.what() + "]";
                continue;
            }
            if (auto* emb = std::get_if<Embedding>(&res))
                return MonoCopy{col, pattern, Embedding{lift(x, std::span<const Vertex>(emb->map))}};
            pair = std::get<SparsePair>(res);
            chosen = col;
            break;
        }
        if (!chosen) return fail("no skeleton pair in either colour" + reasons);

        const Color i = *chosen;
        const auto& gi = g[idx(i)];
        auto hh = h;
        --hh[idx(i)];
        const Rational child_bound = pow2_inv(hh[idx(i)]) + c / 2;

        const VertexSet a_half =
            lowest_degree(gi, pair.a, pair.b.to_bitset(x.size()), pair.a.size() / 2);
        if (a_half.empty()) return fail("pair side A has fewer than 2 vertices");
        auto first_child = run(lift(x, a_half), hh, depth + 1);
        if (std::holds_alternative<MonoCopy>(first_child)) return first_child;
        if (auto* ex = std::get_if<Exhausted>(&first_child)) {
            trace = std::move(ex->trace);
            return fail("first child exhausted");
        }
        auto& s1 = std::get<SparseSet>(first_child);
        if (s1.color != i) {
            if (static_cast<long double>(s1.w.size()) >= floor_size) return first_child;
            return fail("first child returned a " + to_string(s1.color) + " set below the size law");
        }
        auto w1 = trim_to(gi, localize(x, s1.w), t, child_bound);
        if (!w1) return fail("could not trim the first child set to " + size_str(t) + " vertices");

        const VertexSet b_half = lowest_degree(gi, pair.b, w1->to_bitset(x.size()), pair.b.size() / 2);
        if (b_half.empty()) return fail("pair side B has fewer than 2 vertices");
        auto second_child = run(lift(x, b_half), hh, depth + 1);
        if (std::holds_alternative<MonoCopy>(second_child)) return second_child;
        if (auto* ex = std::get_if<Exhausted>(&second_child)) {
            trace = std::move(ex->trace);
            return fail("second child exhausted");
        }
        auto& s2 = std::get<SparseSet>(second_child);
        if (s2.color != i) {
            if (static_cast<long double>(s2.w.size()) >= floor_size) return second_child;
            return fail("second child returned a " + to_string(s2.color) + " set below the size law");
        }
        auto w2 = trim_to(gi, localize(x, s2.w), t, child_bound);
        if (!w2) return fail("could not trim the second child set to " + size_str(t) + " vertices");

        std::vector<Vertex> joined(w1->begin(), w1->end());
        joined.insert(joined.end(), w2->begin(), w2->end());
        const VertexSet w(std::move(joined));
        const Rational dens = density_within(gi, w);
        if (dens > pow2_inv(h[idx(i)]) + c / 2)
            throw ContractError("union of the two halves exceeds the density bound at " + where);
        return SparseSet{i, lift(x, w), dens};
    }

private:
    Certificate sparse(Color col, const VertexSet& global, const VertexSet& x) const {
        const OrderedGraph g = color_class(ctx_.coloring.restrict(x), col);
        return SparseSet{col, global, density_within(g, VertexSet::range(0, x.size()))};
    }

    std::optional<Skeleton> find_skeleton(const OrderedGraph& host, Color col, std::size_t depth,
                                          std::string& why) const {
        const auto& p = ctx_.p;
        const std::size_t a = col == Color::Red ? p.k1 : p.k2;
        const std::size_t n = host.vertex_count();
        std::size_t window = n;
        if (p.window) {
            window = std::min(*p.window, n);
        } else {
            const long double w = std::pow(4.0L, static_cast<long double>(p.k1 + p.k2));
            if (w < static_cast<long double>(n)) window = static_cast<std::size_t>(w);
        }
        if (window < 4 * a + 1) {
            why = "window of " + size_str(window) + " vertices is below 4a+1 = " + size_str(4 * a + 1);
            return std::nullopt;
        }
        auto res = find_skeleton_from_cliques(host, window, a, Rational(1, 2), p.tuple_cap);
        using S = CliqueSkeletonResult::Status;
        if (res.status == S::Found) return res.skeleton;
        if (res.status == S::NotFound) {
            why = "no bucket reaches b = " + size_str(res.target_b);
            return std::nullopt;
        }
        auto sampled = sampled_clique_skeleton(host, a, p.samples, p.seed + depth);
        if (!sampled) why = "tuple cap exceeded and sampling found no clique on 4a+1 vertices";
        return sampled;
    }

    TreeContext ctx_;
};

long double loglog_clamped(std::size_t m) {
    const long double l = std::log(std::log(static_cast<long double>(m)));
    return std::isfinite(l) ? std::max(1.0L, l) : 1.0L;
}

Rational approx_rational(long double x) {
    constexpr std::int64_t den = 1'000'000;
    const auto num = static_cast<std::int64_t>(std::floor(x * den));
    return Rational(std::max<std::int64_t>(num, 1), den);
}

// Places the unfixed pattern vertices on the least free vertices of pool
// while keeping the images increasing.
std::optional<std::vector<Vertex>> extend_over_gaps(const std::vector<std::optional<Vertex>>& fixed,
                                                    const std::vector<Vertex>& pool) {
    std::vector<Vertex> out(fixed.size());
    std::optional<Vertex> last;
    for (std::size_t u = 0; u < fixed.size(); ++u) {
        std::optional<Vertex> next_fixed;
        for (std::size_t w = u + 1; w < fixed.size() && !next_fixed; ++w) next_fixed = fixed[w];
        if (fixed[u]) {
            if (last && *fixed[u] <= *last) return std::nullopt;
            out[u] = *fixed[u];
        } else {
            auto it = last ? std::upper_bound(pool.begin(), pool.end(), *last) : pool.begin();
            if (it == pool.end() || (next_fixed && *it >= *next_fixed)) return std::nullopt;
            out[u] = *it;
        }
        last = out[u];
    }
    return out;
}

std::vector<Vertex> every_kth(const std::vector<Vertex>& from, std::size_t k) {
    std::vector<Vertex> out;
    for (std::size_t j = k - 1; j < from.size(); j += k) out.push_back(from[j]);
    if (!out.empty()) out.pop_back();
    return out;
}

class MonoCopySearch {
public:
    MonoCopySearch(const ColoredCompleteGraph& coloring, const PipelineParams& p) : coloring_(coloring), p_(p) {}

    Certificate solve(const VertexSet& x, const std::array<OrderedGraph, 2>& pat, std::size_t depth) {
        for (auto col : kColors)
            if (pat[idx(col)].vertex_count() == 0) return MonoCopy{col, pat[idx(col)], Embedding{}};

        const ColoredCompleteGraph sub = coloring_.restrict(x);
        if (x.size() <= p_.exhaustive_threshold) {
            if (auto found = exhaustive(sub, x, pat, x.size())) return *found;
            return Exhausted{{where(depth, x) + ": exhaustive search found no copy"}};
        }
        std::vector<std::string> trace;
        auto fallback = [&](const std::string& reason) -> Certificate {
            trace.push_back(where(depth, x) + ": " + reason);
            const std::size_t win = std::min(x.size(), p_.exhaustive_threshold);
            if (auto found = exhaustive(sub, x, pat, win)) return *found;
            trace.push_back(where(depth, x) + ": exhaustive search on the first " + size_str(win) +
                            " vertices found no copy");
            return Exhausted{std::move(trace)};
        };

        // Phase 1: a set that is sparse in one colour.
        SparseSetOptions so;
        so.tuple_cap = p_.tuple_cap;
        so.samples = p_.samples;
        so.seed = p_.seed + depth;
        Certificate first;
        try {
            first = recursive_sparse_set(sub, pat[0], pat[1], p_.c1, so);
        } catch (const ParameterError& e) {
            return fallback(std::string("sparse set: ") + e.what());
        }
        if (auto* mc = std::get_if<MonoCopy>(&first))
            return MonoCopy{mc->color, mc->pattern, Embedding{lift(x, std::span<const Vertex>(mc->embedding.map))}};
        if (auto* ex = std::get_if<Exhausted>(&first)) {
            trace = ex->trace;
            return fallback("sparse set search exhausted (c1 = " + to_string(p_.c1) + ")");
        }
        const auto& s1 = std::get<SparseSet>(first);
        const Color i1 = s1.color;
        const VertexSet& w = s1.w;  // local to x

        // Phase 2: skeleton inside W.
        DenseSkeletonOptions dso;
        dso.samples = p_.samples;
        dso.seed = p_.seed + depth;
        dso.enforce_preconditions = false;
        const ColoredCompleteGraph on_w = sub.restrict(w);
        auto dense = find_skeleton_in_dense(on_w, i1, p_.a, p_.c1, dso);
        if (auto* f = std::get_if<SkeletonSearchFailure>(&dense))
            return fallback("skeleton in the " + to_string(i1) + "-sparse set of " + size_str(w.size()) +
                            " vertices: " + f->reason);
        const auto& ds = std::get<DenseSkeleton>(dense);
        const Color i2 = ds.color;
        const Color i3 = other(i2);

        // Phase 3: copy of H_{i2} or a pair sparse in colour i2.
        EmbedOrPair res;
        try {
            res = skeleton_embed_or_sparse_pair(color_class(on_w, i2), ds.skeleton, pat[idx(i2)], p_.c2,
                                                SkeletonEmbedOptions{false});
        } catch (const ParameterError& e) {
            return fallback("skeleton embedding in " + to_string(i2) + ": " + e.what());
        }
        if (auto* emb = std::get_if<Embedding>(&res)) {
            auto local = lift(w, std::span<const Vertex>(emb->map));
            return MonoCopy{i2, pat[idx(i2)], Embedding{lift(x, std::span<const Vertex>(local))}};
        }
        const auto& sp = std::get<SparsePair>(res);
        const VertexSet a_set = lift(w, sp.a);
        const VertexSet b_set = lift(w, sp.b);

        // Phase 4: left half of H_{i3} inside A.
        const OrderedGraph& h3 = pat[idx(i3)];
        const auto split = split_pattern(h3);
        const auto left = remove_isolated(h3.induced(split.left));
        const auto right = remove_isolated(h3.induced(split.right));
        const OrderedGraph g3 = color_class(sub, i3);
        const Bitset b_bits = b_set.to_bitset(x.size());
        std::vector<Vertex> a_prime;
        const Rational keep = Rational(1) - 2 * p_.c2;
        for (auto v : a_set) {
            const auto deg = g3.neighbors(v).intersect_count(b_bits);
            if (static_cast<BigInt>(deg) * keep.denominator() >= static_cast<BigInt>(keep.numerator()) * b_set.size())
                a_prime.push_back(v);
        }
        const VertexSet a_spaced(every_kth(a_prime, p_.spacing));

        auto half_copy = [&](const VertexSet& spaced, const IsolatedRemoval& half, const VertexSet& part,
                             const std::vector<Vertex>& pool, const char* name,
                             std::vector<Vertex>& images) -> std::optional<Certificate> {
            std::array<OrderedGraph, 2> sub_pat;
            sub_pat[idx(i2)] = pat[idx(i2)];
            sub_pat[idx(i3)] = half.graph;
            auto got = solve(lift(x, spaced), sub_pat, depth + 1);
            if (auto* ex = std::get_if<Exhausted>(&got)) {
                trace = ex->trace;
                return fallback(std::string(name) + " half recursion exhausted");
            }
            auto& mc = std::get<MonoCopy>(got);
            if (mc.color == i2) return got;
            std::vector<std::optional<Vertex>> fixed(part.size());
            for (std::size_t k = 0; k < part.size(); ++k)
                if (auto nv = half.mapping[k]) fixed[k] = local_index(x, mc.embedding.map[*nv]);
            auto ext = extend_over_gaps(fixed, pool);
            if (!ext) return fallback(std::string("isolated vertices of the ") + name + " half do not fit");
            images = std::move(*ext);
            return std::nullopt;
        };

        std::vector<Vertex> phi_left;
        if (auto done = half_copy(a_spaced, left, split.left, a_prime, "left", phi_left)) return *done;

        // Phase 5: right half inside the common neighbourhood of the left images.
        Bitset common = b_bits;
        for (auto v : phi_left) common &= g3.neighbors(v);
        const std::vector<Vertex> b_prime = common.to_vector();
        const VertexSet b_spaced(every_kth(b_prime, p_.spacing));
        std::vector<Vertex> phi_right;
        if (auto done = half_copy(b_spaced, right, split.right, b_prime, "right", phi_right)) return *done;

        // Phase 6: stitch.
        std::vector<Vertex> phi = phi_left;
        phi.insert(phi.end(), phi_right.begin(), phi_right.end());
        Embedding local{phi};
        if (auto bad = check_embedding(g3, h3, local))
            throw ContractError("stitched embedding fails at " + where(depth, x) + ": " + *bad);
        return MonoCopy{i3, h3, Embedding{lift(x, std::span<const Vertex>(phi))}};
    }

private:
    static std::string where(std::size_t depth, const VertexSet& x) {
        return "depth " + size_str(depth) + ", |X| = " + size_str(x.size());
    }

    std::optional<Certificate> exhaustive(const ColoredCompleteGraph& sub, const VertexSet& x,
                                          const std::array<OrderedGraph, 2>& pat, std::size_t window) const {
        const VertexSet first = VertexSet::range(0, window);
        const ColoredCompleteGraph head = sub.restrict(first);
        for (auto col : kColors) {
            if (auto emb = find_ordered_embedding(color_class(head, col), pat[idx(col)]))
                return MonoCopy{col, pat[idx(col)], Embedding{lift(x, std::span<const Vertex>(emb->map))}};
        }
        return std::nullopt;
    }

    const ColoredCompleteGraph& coloring_;
    const PipelineParams& p_;
};

void check_pattern(const OrderedGraph& h, const char* name) {
    if (h.edge_count() == 0) throw DomainError(std::string(name) + " has no edges");
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 0)
            throw DomainError(std::string(name) + " has isolated vertex " + std::to_string(v + 1));
}

}  // namespace

std::optional<std::string> check_certificate(const ColoredCompleteGraph& coloring, const Certificate& cert) {
    if (const auto* mc = std::get_if<MonoCopy>(&cert))
        return check_embedding(color_class(coloring, mc->color), mc->pattern, mc->embedding);
    if (const auto* ss = std::get_if<SparseSet>(&cert)) {
        if (!ss->w.empty() && ss->w.back() >= coloring.vertex_count()) return "sparse set leaves the colouring";
        const Rational d = density_within(color_class(coloring, ss->color), ss->w);
        if (d > ss->density) return "density " + to_string(d) + " exceeds the claimed " + to_string(ss->density);
    }
    return std::nullopt;
}

void validate(const RecursionParams& p) {
    if (p.c <= 0 || p.c >= Rational(1, 8)) throw ParameterError("c must satisfy 0 < c < 1/8, got " + to_string(p.c));
    if (p.k1 < 1 || p.k2 < 1) throw ParameterError("skeleton sizes k1, k2 must be at least 1");
    if (!(p.alpha > 0 && p.alpha < 1)) throw ParameterError("alpha must lie in (0, 1)");
}

Certificate binary_tree_sparse(const ColoredCompleteGraph& coloring, const VertexSet& x, const OrderedGraph& h1,
                               const OrderedGraph& h2, const RecursionParams& p) {
    validate(p);
    if (x.empty()) throw DomainError("X must be nonempty");
    x.check_within(coloring.vertex_count(), "X");
    BinaryTree tree(TreeContext{coloring, {&h1, &h2}, p});
    return tree.run(x, {p.h1, p.h2}, 0);
}

std::size_t halving_budget(const Rational& c) {
    if (c <= 0 || c >= Rational(1, 8)) throw ParameterError("c must satisfy 0 < c < 1/8, got " + to_string(c));
    // least h with 2^h >= 2/c, i.e. 2^h c >= 2
    std::size_t h = 0;
    BigInt pw = 1;
    while (pw * c.numerator() < 2 * static_cast<BigInt>(c.denominator())) {
        pw *= 2;
        ++h;
    }
    return h;
}

RecursionParams sparse_set_params(std::size_t n, const OrderedGraph& h1, const OrderedGraph& h2, const Rational& c,
                                  const SparseSetOptions& options) {
    const std::size_t m1 = h1.edge_count();
    const std::size_t m2 = h2.edge_count();
    if (m1 == 0 || m2 == 0) throw ParameterError("patterns must have at least one edge");
    const std::size_t big = std::max(m1, m2);
    const std::size_t small = std::min(m1, m2);
    const long double ll = loglog_clamped(big);
    const long double k_small = std::sqrt(static_cast<long double>(small) * ll);
    const long double k_big = static_cast<long double>(big) * k_small / static_cast<long double>(small);
    auto round_k = [](long double k) { return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(k))); };

    RecursionParams p;
    p.c = c;
    p.k1 = options.k1.value_or(round_k(m1 >= m2 ? k_big : k_small));
    p.k2 = options.k2.value_or(round_k(m1 >= m2 ? k_small : k_big));
    p.window = options.window;
    const long double window = options.window
                                   ? static_cast<long double>(*options.window)
                                   : std::min(static_cast<long double>(n),
                                              std::pow(4.0L, static_cast<long double>(p.k1 + p.k2)));
    const long double cl = to_long_double(c);
    p.alpha = options.alpha.value_or(std::pow(cl / 8, 2 * std::sqrt(static_cast<long double>(small) / ll)) /
                                     (8 * std::pow(window, 5.0L) * static_cast<long double>(big) * big));
    p.h1 = p.h2 = halving_budget(c);
    p.tuple_cap = options.tuple_cap;
    p.samples = options.samples;
    p.seed = options.seed;
    return p;
}

Certificate recursive_sparse_set(const ColoredCompleteGraph& coloring, const OrderedGraph& h1, const OrderedGraph& h2,
                                 const Rational& c, const SparseSetOptions& options) {
    const std::size_t n = coloring.vertex_count();
    if (n == 0) throw DomainError("colouring has no vertices");
    const RecursionParams p = sparse_set_params(n, h1, h2, c, options);
    validate(p);
    const VertexSet all = VertexSet::range(0, n);
    for (auto col : kColors) {
        const Rational d = density_within(color_class(coloring, col), all);
        if (d <= c) return SparseSet{col, all, d};
    }
    auto cert = binary_tree_sparse(coloring, all, h1, h2, p);
    if (const auto* ss = std::get_if<SparseSet>(&cert); ss && ss->density > c)
        throw ContractError("sparse set density " + to_string(ss->density) + " exceeds c = " + to_string(c));
    return cert;
}

PatternSplit split_pattern(const OrderedGraph& h) {
    const std::size_t m = h.edge_count();
    if (m == 0) throw DomainError("pattern has no edges");
    const std::size_t n = h.vertex_count();
    // prefix[l] = edges inside the first l vertices
    std::vector<std::size_t> prefix(n + 1, 0);
    for (const auto& e : h.edges()) ++prefix[e.v + 1];
    for (std::size_t l = 1; l <= n; ++l) prefix[l] += prefix[l - 1];
    std::size_t ell = 1;
    for (std::size_t l = 1; l <= n; ++l)
        if (2 * prefix[l] <= m) ell = l;
    return PatternSplit{VertexSet::range(0, ell), VertexSet::range(ell, n)};
}

PipelineParams default_pipeline_params(const OrderedGraph& h1, const OrderedGraph& h2,
                                       const PipelineOverrides& o) {
    const std::size_t big = std::max(h1.edge_count(), h2.edge_count());
    const std::size_t small = std::min(h1.edge_count(), h2.edge_count());
    if (small == 0) throw ParameterError("patterns must have at least one edge");
    const long double l = std::max(1.0L, std::log(static_cast<long double>(big)));

    PipelineParams p;
    p.c1 = o.c1.value_or(std::min(approx_rational(small / (big * l * l)), Rational(1, 10)));
    if (o.a) {
        p.a = *o.a;
    } else {
        const auto by_formula =
            static_cast<std::size_t>(std::ceil(10 * big * l * l / std::sqrt(static_cast<long double>(small))));
        const Rational inv = Rational(10) / p.c1;
        const auto by_c1 = static_cast<std::size_t>((inv.numerator() + inv.denominator() - 1) / inv.denominator());
        p.a = std::max(by_formula, by_c1);
    }
    p.c2 = o.c2.value_or(Rational(1, static_cast<std::int64_t>(6 * big)));
    p.spacing = o.spacing.value_or(3 * big);
    p.exhaustive_threshold = o.exhaustive_threshold.value_or(kDefaultExhaustiveThreshold);
    p.tuple_cap = o.tuple_cap.value_or(kDefaultTupleCap);
    p.samples = o.samples.value_or(64);
    p.seed = o.seed.value_or(0);
    return p;
}

void validate(const PipelineParams& p) {
    if (p.c1 <= 0 || p.c1 >= Rational(1, 8)) throw ParameterError("c1 must satisfy 0 < c1 < 1/8");
    if (p.c2 <= 0 || p.c2 >= 1) throw ParameterError("c2 must satisfy 0 < c2 < 1");
    if (p.a < 1) throw ParameterError("a must be at least 1");
    if (p.spacing < 1) throw ParameterError("spacing must be at least 1");
}

Certificate find_mono_copy(const ColoredCompleteGraph& coloring, const OrderedGraph& h1, const OrderedGraph& h2,
                           const PipelineParams& params) {
    validate(params);
    check_pattern(h1, "H1");
    check_pattern(h2, "H2");
    MonoCopySearch search(coloring, params);
    auto cert = search.solve(VertexSet::range(0, coloring.vertex_count()), {h1, h2}, 0);
    if (std::holds_alternative<SparseSet>(cert)) throw ContractError("pipeline produced a bare sparse set");
    if (auto bad = check_certificate(coloring, cert)) throw ContractError("pipeline copy fails verification: " + *bad);
    return cert;
}

}  // namespace oramsey
