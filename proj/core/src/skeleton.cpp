#include "oramsey/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "oramsey/errors.hpp"
#include "oramsey/graph_ops.hpp"
#include "oramsey/random.hpp"

namespace oramsey {

namespace {

std::string vlabel(Vertex v) { return std::to_string(v + 1); }

SkeletonCheck fail(char cond, std::string detail) {
    SkeletonCheck r;
    r.ok = false;
    r.condition = cond;
    r.detail = std::string("condition (") + cond + "): " + std::move(detail);
    return r;
}

}  // namespace

std::size_t Skeleton::min_block_size() const {
    std::size_t best = blocks.empty() ? 0 : blocks.front().size();
    for (const auto& blk : blocks) best = std::min(best, blk.size());
    return best;
}

SkeletonCheck verify_skeleton(const OrderedGraph& host, const Skeleton& s) {
    const auto n = host.vertex_count();
    if (s.spine.size() != s.a)
        return fail('a', "spine has " + std::to_string(s.spine.size()) + " vertices, expected a = " +
                             std::to_string(s.a));
    if (s.blocks.size() != s.a + 1)
        return fail('a', "expected " + std::to_string(s.a + 1) + " blocks, found " + std::to_string(s.blocks.size()));
    for (std::size_t k = 0; k < s.spine.size(); ++k) {
        if (s.spine[k] >= n) return fail('a', "spine vertex outside the host");
        if (k > 0 && !(s.spine[k - 1] < s.spine[k])) return fail('a', "spine is not increasing");
    }
    for (std::size_t j = 0; j < s.blocks.size(); ++j) {
        const auto& blk = s.blocks[j];
        if (blk.empty()) continue;
        if (blk.back() >= n) {
            auto r = fail('a', "block " + std::to_string(j) + " has a vertex outside the host");
            r.block = j;
            return r;
        }
        const bool after_prev = j == 0 || s.spine[j - 1] < blk.front();
        const bool before_next = j == s.a || blk.back() < s.spine[j];
        if (!after_prev || !before_next) {
            auto r = fail('a', "block " + std::to_string(j) + " is not between its spine vertices");
            r.block = j;
            return r;
        }
    }
    for (std::size_t j = 0; j < s.blocks.size(); ++j)
        if (s.blocks[j].size() < s.b) {
            auto r = fail('b', "block " + std::to_string(j) + " has " + std::to_string(s.blocks[j].size()) +
                                   " vertices, fewer than b = " + std::to_string(s.b));
            r.block = j;
            return r;
        }
    auto missing = [&](Vertex x, Vertex y) {
        auto r = fail('c', "missing edge (" + vlabel(std::min(x, y)) + ", " + vlabel(std::max(x, y)) + ")");
        r.pair = std::pair{std::min(x, y), std::max(x, y)};
        return r;
    };
    for (std::size_t x = 0; x < s.spine.size(); ++x)
        for (std::size_t y = x + 1; y < s.spine.size(); ++y)
            if (!host.adjacent(s.spine[x], s.spine[y])) return missing(s.spine[x], s.spine[y]);
    for (auto sv : s.spine)
        for (const auto& blk : s.blocks)
            for (auto x : blk)
                if (!host.adjacent(sv, x)) return missing(sv, x);
    return {};
}

CliqueTupleIndex::CliqueTupleIndex(std::size_t host_n, std::size_t a) : host_n_(host_n), a_(a) {
    if (a == 0) throw ParameterError("clique tuple index needs a >= 1");
    key_scratch_.resize(2 * a);
}

void CliqueTupleIndex::add(const OrderedGraph& host, std::span<const Vertex> tuple) {
    if (tuple.size() != tuple_length())
        throw DomainError("tuple has length " + std::to_string(tuple.size()) + ", expected " +
                          std::to_string(tuple_length()));
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (tuple[k] >= host_n_) throw DomainError("tuple vertex outside the host");
        if (k > 0 && !(tuple[k - 1] < tuple[k])) throw DomainError("tuple is not strictly increasing");
        for (std::size_t l = 0; l < k; ++l)
            if (!host.adjacent(tuple[l], tuple[k]))
                throw DomainError("tuple is not a clique: missing (" + vlabel(tuple[l]) + ", " +
                                  vlabel(tuple[k]) + ")");
    }
    add_unchecked(tuple);
}

void CliqueTupleIndex::add_unchecked(std::span<const Vertex> tuple) {
    for (std::size_t k = 0; k < 2 * a_; ++k) key_scratch_[k] = tuple[2 * k + 1];
    auto it = buckets_.find(key_scratch_);
    if (it == buckets_.end()) {
        Bucket fresh;
        fresh.key = key_scratch_;
        fresh.positions.assign(2 * a_ + 1, Bitset(host_n_));
        it = buckets_.emplace(key_scratch_, std::move(fresh)).first;
    }
    auto& bucket = it->second;
    ++bucket.count;
    for (std::size_t k = 0; k <= 2 * a_; ++k) bucket.positions[k].set(tuple[2 * k]);
    ++tuples_;
}

std::vector<const CliqueTupleIndex::Bucket*> CliqueTupleIndex::buckets_by_count() const {
    std::vector<const Bucket*> out;
    out.reserve(buckets_.size());
    for (const auto& [key, bucket] : buckets_) out.push_back(&bucket);
    // buckets_ iterates in key order, so a stable sort keeps key ties ascending
    std::stable_sort(out.begin(), out.end(), [](const Bucket* x, const Bucket* y) { return x->count > y->count; });
    return out;
}

EnumerationStatus enumerate_clique_tuples(const OrderedGraph& host, std::size_t a, std::uint64_t cap,
                                          CliqueTupleIndex& index) {
    const std::size_t n = host.vertex_count();
    const std::size_t len = 4 * a + 1;
    std::vector<Bitset> up(n, Bitset(n));  // neighbours above v
    for (Vertex v = 0; v < n; ++v) {
        up[v] = host.neighbors(v);
        Bitset above(n);
        above.set_range(v + 1, n);
        up[v] &= above;
    }
    std::vector<Bitset> cand(len + 1, Bitset(n));
    cand[0].set_all();
    std::vector<Vertex> tuple(len);
    std::uint64_t seen = 0;
    bool exceeded = false;

    auto dfs = [&](auto& self, std::size_t depth) -> void {
        if (depth == len) {
            if (++seen > cap) {
                exceeded = true;
                return;
            }
            index.add_unchecked(tuple);
            return;
        }
        if (cand[depth].count() < len - depth) return;
        for (auto v = cand[depth].find_first(); v != Bitset::npos && !exceeded; v = cand[depth].find_next(v + 1)) {
            tuple[depth] = v;
            cand[depth + 1].assign_and(cand[depth], up[v]);
            self(self, depth + 1);
        }
    };
    if (n >= len) dfs(dfs, 0);
    return exceeded ? EnumerationStatus::CapExceeded : EnumerationStatus::Complete;
}

std::optional<IndexSkeleton> extract_skeleton(const CliqueTupleIndex& index, std::size_t min_b) {
    const std::size_t a = index.a();
    for (const auto* bucket : index.buckets_by_count()) {
        std::vector<std::size_t> evens(2 * a + 1);
        std::iota(evens.begin(), evens.end(), std::size_t{0});
        std::vector<std::size_t> sizes(2 * a + 1);
        for (std::size_t k = 0; k <= 2 * a; ++k) sizes[k] = bucket->positions[k].count();
        std::stable_sort(evens.begin(), evens.end(), [&](auto x, auto y) { return sizes[x] > sizes[y]; });
        evens.resize(a + 1);
        std::sort(evens.begin(), evens.end());
        std::size_t b = sizes[evens.front()];
        for (auto k : evens) b = std::min(b, sizes[k]);
        if (b < std::max<std::size_t>(min_b, 1)) continue;

        IndexSkeleton out;
        out.bucket_tuples = bucket->count;
        out.skeleton.a = a;
        out.skeleton.b = b;
        // Even position 2k is followed by odd position 2k+1 = key[k].
        for (std::size_t j = 0; j < a; ++j) out.skeleton.spine.push_back(bucket->key[evens[j]]);
        for (auto k : evens) out.skeleton.blocks.push_back(VertexSet::from_bitset(bucket->positions[k]));
        return out;
    }
    return std::nullopt;
}

Skeleton expand_blocks(const OrderedGraph& host, const std::vector<Vertex>& spine) {
    const auto n = host.vertex_count();
    Bitset common(n, true);
    for (auto s : spine) {
        common &= host.neighbors(s);
        common.reset(s);
    }
    Skeleton out;
    out.a = spine.size();
    out.spine = spine;
    for (std::size_t j = 0; j <= spine.size(); ++j) {
        const Vertex lo = j == 0 ? 0 : spine[j - 1] + 1;
        const Vertex hi = j == spine.size() ? n : spine[j];
        std::vector<Vertex> members;
        for (auto v = common.find_next(lo); v != Bitset::npos && v < hi; v = common.find_next(v + 1))
            members.push_back(v);
        out.blocks.emplace_back(std::move(members));
    }
    out.b = out.min_block_size();
    return out;
}

CliqueSkeletonResult find_skeleton_from_cliques(const OrderedGraph& host, std::size_t n, std::size_t a,
                                                const Rational& d, std::uint64_t tuple_cap) {
    const std::size_t big_n = host.vertex_count();
    if (a < 1) throw ParameterError("skeleton size a must be at least 1");
    if (n < 4 * a + 1)
        throw ParameterError("window n = " + std::to_string(n) + " is below 4a+1 = " + std::to_string(4 * a + 1));
    if (big_n < n)
        throw ParameterError("host has " + std::to_string(big_n) + " vertices, fewer than n = " + std::to_string(n));
    if (d < 0 || d > 1) throw ParameterError("d must lie in [0, 1]");

    using boost::multiprecision::cpp_int;
    CliqueSkeletonResult result;
    {
        // ceil(d N / n^5)
        cpp_int num = static_cast<cpp_int>(d.numerator()) * big_n;
        cpp_int den = static_cast<cpp_int>(d.denominator());
        for (int k = 0; k < 5; ++k) den *= n;
        cpp_int t = (num + den - 1) / den;
        result.target_b = t < 1 ? 1 : (t > big_n ? big_n + 1 : static_cast<std::size_t>(t));
    }

    CliqueTupleIndex index(big_n, a);
    const auto status = enumerate_clique_tuples(host, a, tuple_cap, index);
    result.tuples = index.tuple_count();
    result.buckets = index.bucket_count();
    auto found = extract_skeleton(index, result.target_b);
    if (found) {
        if (auto check = verify_skeleton(host, found->skeleton); !check)
            throw ContractError("assembled skeleton fails verification: " + check.detail);
    }
    if (status == EnumerationStatus::CapExceeded) {
        result.status = CliqueSkeletonResult::Status::CapExceeded;
    } else if (!found) {
        result.status = CliqueSkeletonResult::Status::NotFound;
        return result;
    } else {
        result.status = CliqueSkeletonResult::Status::Found;
    }
    if (!found) return result;
    result.selected_bucket_tuples = found->bucket_tuples;
    result.skeleton = std::move(found->skeleton);
    return result;
}

long double es_bound(std::size_t n, const Rational& eps) {
    const long double e = to_long_double(eps);
    return std::log(static_cast<long double>(n)) / (100 * e * std::log(1 / e));
}

EsWitness es_clique_or_independent(const OrderedGraph& g, const Rational& eps) {
    const std::size_t n = g.vertex_count();
    if (eps <= 0 || eps >= Rational(1, 2)) throw ParameterError("eps must satisfy 0 < eps < 1/2");
    if (Rational(static_cast<std::int64_t>(n)) * eps < 1)
        throw ParameterError("graph has " + std::to_string(n) + " vertices, fewer than 1/eps");
    const Rational dens = density_within(g, VertexSet::range(0, n));
    if (dens > eps) throw ParameterError("graph density " + to_string(dens) + " exceeds eps = " + to_string(eps));

    // Independent branch: repeatedly take a minimum-degree vertex of what is
    // left and discard its neighbours.
    std::vector<Vertex> indep;
    {
        Bitset cand(n, true);
        while (cand.any()) {
            Vertex pick = Bitset::npos;
            std::size_t best = 0;
            cand.for_each([&](std::size_t v) {
                const auto deg = g.neighbors(v).intersect_count(cand);
                if (pick == Bitset::npos || deg < best) {
                    pick = v;
                    best = deg;
                }
            });
            indep.push_back(pick);
            cand.subtract(g.neighbors(pick));
            cand.reset(pick);
        }
    }
    // Clique branch: repeatedly take a maximum-degree vertex and keep only its
    // neighbours.
    std::vector<Vertex> clique;
    {
        Bitset cand(n, true);
        while (cand.any()) {
            Vertex pick = Bitset::npos;
            std::size_t best = 0;
            cand.for_each([&](std::size_t v) {
                const auto deg = g.neighbors(v).intersect_count(cand);
                if (pick == Bitset::npos || deg > best) {
                    pick = v;
                    best = deg;
                }
            });
            clique.push_back(pick);
            cand &= g.neighbors(pick);
        }
    }

    EsWitness w;
    w.bound = es_bound(n, eps);
    if (clique.size() > indep.size()) {
        w.kind = EsWitness::Kind::Clique;
        w.vertices = VertexSet(std::move(clique));
    } else {
        w.kind = EsWitness::Kind::Independent;
        w.vertices = VertexSet(std::move(indep));
    }
    const bool want_edge = w.kind == EsWitness::Kind::Clique;
    for (std::size_t x = 0; x < w.vertices.size(); ++x)
        for (std::size_t y = x + 1; y < w.vertices.size(); ++y)
            if (g.adjacent(w.vertices[x], w.vertices[y]) != want_edge)
                throw ContractError("clique/independent witness failed its pairwise check");
    if (static_cast<long double>(w.vertices.size()) < w.bound)
        throw ContractError("witness of size " + std::to_string(w.vertices.size()) + " misses the bound " +
                            std::to_string(static_cast<double>(w.bound)));
    return w;
}

DenseSkeletonResult find_skeleton_in_dense(const ColoredCompleteGraph& coloring, Color sparse_color, std::size_t a,
                                           const Rational& c, const DenseSkeletonOptions& options) {
    const std::size_t n = coloring.vertex_count();
    if (c <= 0 || c >= 1) throw ParameterError("c must satisfy 0 < c < 1");
    if (a < 1) throw ParameterError("skeleton size a must be at least 1");
    const OrderedGraph sparse = color_class(coloring, sparse_color);
    const OrderedGraph dense = color_class(coloring, other(sparse_color));
    const VertexSet everything = VertexSet::range(0, n);
    if (options.enforce_preconditions) {
        if (Rational(static_cast<std::int64_t>(a)) * c < 10)
            throw ParameterError("a = " + std::to_string(a) + " is below 10/c = " + to_string(Rational(10) / c));
        if (const auto d = density_within(sparse, everything); d > c)
            throw ParameterError("sparse colour density " + to_string(d) + " exceeds c = " + to_string(c));
    }

    const std::size_t len = 4 * a + 1;
    const long double cl = to_long_double(c);
    std::size_t window = n;
    if (options.window) {
        window = std::min(*options.window, n);
    } else {
        const long double lemma_n = std::exp(1000 * static_cast<long double>(a) * cl * std::log(1 / cl));
        if (lemma_n < static_cast<long double>(n)) window = static_cast<std::size_t>(std::ceil(lemma_n));
    }
    window = std::min(n, std::max(window, len));

    std::vector<std::vector<Vertex>> windows;
    if (window == n) {
        windows.push_back(everything.members());
    } else {
        Rng rng(options.seed);
        for (std::size_t s = 0; s < options.samples; ++s) windows.push_back(sample_subset(rng, n, window));
    }

    std::vector<std::vector<Vertex>> cliques[2];  // indexed by Color
    for (const auto& w : windows) {
        const VertexSet ws(w);
        const OrderedGraph local = sparse.induced(ws);
        const Rational dw = density_within(local, VertexSet::range(0, ws.size()));
        const Rational eps = std::max(dw, Rational(1, static_cast<std::int64_t>(std::max<std::size_t>(ws.size(), 1))));
        if (eps >= Rational(1, 2)) continue;
        const EsWitness wit = es_clique_or_independent(local, eps);
        if (wit.vertices.size() < len) continue;
        const Color col = wit.kind == EsWitness::Kind::Clique ? sparse_color : other(sparse_color);
        std::vector<Vertex> global;
        for (auto v : wit.vertices) global.push_back(ws[v]);
        cliques[static_cast<int>(col)].push_back(std::move(global));
    }

    const auto reds = cliques[static_cast<int>(Color::Red)].size();
    const auto blues = cliques[static_cast<int>(Color::Blue)].size();
    if (reds == 0 && blues == 0)
        return SkeletonSearchFailure{"no window produced a monochromatic clique on " + std::to_string(len) +
                                     " vertices"};
    const Color col = reds >= blues ? Color::Red : Color::Blue;
    const OrderedGraph& host = col == sparse_color ? sparse : dense;

    CliqueTupleIndex index(n, a);
    std::vector<Vertex> tuple(len);
    for (const auto& k : cliques[static_cast<int>(col)]) {
        // evenly spaced sub-tuple of the clique
        for (std::size_t j = 0; j < len; ++j) tuple[j] = k[j * (k.size() - 1) / (len - 1)];
        index.add(host, tuple);
    }
    auto extracted = extract_skeleton(index, 1);
    if (!extracted) return SkeletonSearchFailure{"clique index yielded no skeleton"};

    DenseSkeleton out;
    out.color = col;
    out.skeleton = expand_blocks(host, extracted->skeleton.spine);
    out.lemma_b = std::exp(-6000 * static_cast<long double>(a) * cl * std::log(1 / cl)) * static_cast<long double>(n);
    out.lemma_bound_met = static_cast<long double>(out.skeleton.b) >= out.lemma_b;
    out.windows = windows.size();
    out.color_windows = col == Color::Red ? reds : blues;
    if (auto check = verify_skeleton(host, out.skeleton); !check)
        throw ContractError("dense skeleton fails verification: " + check.detail);
    return out;
}

}  // namespace oramsey
