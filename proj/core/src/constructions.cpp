#include "oramsey/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "oramsey/errors.hpp"
#include "oramsey/random.hpp"

namespace oramsey {

namespace {

std::vector<std::array<Vertex, 3>> triples_of(std::size_t n) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            for (Vertex k = j + 1; k < n; ++k) out.push_back({i, j, k});
    return out;
}

class SubdivisionSearcher {
public:
    SubdivisionSearcher(const Tournament& t, std::size_t n, std::uint64_t budget)
        : t_(t), n_(n), big_n_(t.vertex_count()), budget_(budget), triples_(triples_of(n)),
          image_(n), used_(big_n_) {
        for (std::size_t q = 0; q < triples_.size(); ++q) by_last_[triples_[q][2]].push_back(q);
    }

    SubdivisionSearch run() {
        SubdivisionSearch out;
        if (place(0)) {
            out.status = SubdivisionSearch::Status::Found;
            out.injection = image_;
            out.injection.insert(out.injection.end(), match_.begin(), match_.end());
        } else {
            out.status = exhausted_ ? SubdivisionSearch::Status::BudgetExhausted : SubdivisionSearch::Status::None;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    bool tick() {
        if (++nodes_ > budget_) exhausted_ = true;
        return !exhausted_;
    }

    Bitset candidates(const std::array<Vertex, 3>& tr) const {
        Bitset c = t_.out_neighbors(image_[tr[0]]);
        c &= t_.in_neighbors(image_[tr[1]]);
        c &= t_.in_neighbors(image_[tr[2]]);
        c.subtract(used_);
        return c;
    }

    bool place(std::size_t r) {
        if (!tick()) return false;
        if (r == n_) return match_triples();
        for (Vertex v = 0; v < big_n_; ++v) {
            if (used_.test(v)) continue;
            image_[r] = v;
            used_.set(v);
            bool viable = true;
            for (auto q : by_last_[r])
                if (candidates(triples_[q]).none()) {
                    viable = false;
                    break;
                }
            if (viable && place(r + 1)) return true;
            used_.reset(v);
            if (exhausted_) return false;
        }
        return false;
    }

    bool match_triples() {
        cand_.clear();
        for (const auto& tr : triples_) cand_.push_back(candidates(tr));
        owner_.assign(big_n_, npos);
        for (std::size_t q = 0; q < triples_.size(); ++q) {
            seen_.assign(big_n_, false);
            if (!augment(q)) return false;
            if (exhausted_) return false;
        }
        match_.assign(triples_.size(), 0);
        for (Vertex v = 0; v < big_n_; ++v)
            if (owner_[v] != npos) match_[owner_[v]] = v;
        return true;
    }

    bool augment(std::size_t q) {
        if (!tick()) return false;
        for (auto v = cand_[q].find_first(); v != Bitset::npos; v = cand_[q].find_next(v + 1)) {
            if (seen_[v]) continue;
            seen_[v] = true;
            if (owner_[v] == npos || augment(owner_[v])) {
                owner_[v] = q;
                return true;
            }
            if (exhausted_) return false;
        }
        return false;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const Tournament& t_;
    std::size_t n_;
    std::size_t big_n_;
    std::uint64_t budget_;
    std::vector<std::array<Vertex, 3>> triples_;
    std::map<Vertex, std::vector<std::size_t>> by_last_;
    std::vector<Vertex> image_;
    Bitset used_;
    std::vector<Bitset> cand_;
    std::vector<std::size_t> owner_;
    std::vector<bool> seen_;
    std::vector<Vertex> match_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

std::uint64_t subdivision_vertex_count(std::size_t n) {
    const std::uint64_t m = n;
    return m + (m < 3 ? 0 : m * (m - 1) * (m - 2) / 6);
}

Subdivision build_subdivision_S(std::size_t n) {
    if (n < 3) throw ParameterError("S_n needs n >= 3, got " + std::to_string(n));
    Subdivision s;
    s.n = n;
    for (Vertex v = 0; v < n; ++v) s.base.push_back(v);
    std::vector<Arc> arcs;
    Vertex next = n;
    for (const auto& tr : triples_of(n)) {
        s.triple_index.emplace(tr, next);
        arcs.push_back({tr[0], next});
        arcs.push_back({next, tr[1]});
        arcs.push_back({next, tr[2]});
        ++next;
    }
    s.digraph = Digraph(next, std::move(arcs));
    return s;
}

std::optional<std::vector<Vertex>> find_transitive_subtournament(const Tournament& t, std::size_t k) {
    if (k < 1) throw ParameterError("transitive subtournament size must be at least 1");
    const std::size_t n = t.vertex_count();
    if (k > n) return std::nullopt;
    std::vector<Vertex> chosen;
    std::vector<Bitset> cand(k + 1, Bitset(n));
    cand[0].set_all();
    auto dfs = [&](auto& self, std::size_t depth) -> bool {
        if (depth == k) return true;
        if (cand[depth].count() < k - depth) return false;
        for (auto v = cand[depth].find_first(); v != Bitset::npos; v = cand[depth].find_next(v + 1)) {
            chosen.push_back(v);
            cand[depth + 1].assign_and(cand[depth], t.out_neighbors(v));
            if (self(self, depth + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return chosen;
}

Tournament random_tournament_avoiding(std::size_t m, std::size_t k, std::uint64_t seed, std::size_t max_tries) {
    if (m < 1) throw ParameterError("tournament size must be at least 1");
    if (k < 2) throw ParameterError("forbidden transitive size must be at least 2");
    Rng rng(seed);
    for (std::size_t tries = 1; tries <= max_tries; ++tries) {
        Tournament t = random_tournament(rng, m);
        if (!find_transitive_subtournament(t, k)) return t;
    }
    throw GenerationFailure("no tournament on " + std::to_string(m) + " vertices without a transitive " +
                                std::to_string(k) + "-set after " + std::to_string(max_tries) + " tries",
                            max_tries);
}

BlowupTournament blowup(const Tournament& outer, const Tournament& inner) {
    const std::size_t s = inner.vertex_count();
    const std::size_t m = outer.vertex_count();
    BlowupTournament out;
    out.outer = outer;
    out.inner = inner;
    out.tournament = Tournament::from_function(m * s, [&](Vertex u, Vertex v) {
        const Vertex bu = u / s;
        const Vertex bv = v / s;
        return bu == bv ? inner.beats(u % s, v % s) : outer.beats(bu, bv);
    });
    for (std::size_t l = 0; l < m; ++l) out.blocks.push_back(VertexSet::range(l * s, (l + 1) * s));
    return out;
}

Tournament base_lower_bound_tournament() {
    return Tournament::from_function(4, [](Vertex u, Vertex v) {
        if (v == 3) return true;
        return !(u == 0 && v == 2);  // 0 -> 1, 1 -> 2, 2 -> 0
    });
}

LowerBoundParams lower_bound_params(std::size_t n) {
    const long double ln = std::log(static_cast<long double>(n));
    LowerBoundParams p;
    p.m = std::max<std::size_t>(1, n / 10);
    p.k = static_cast<std::size_t>(std::ceil(4 * ln));
    p.n_prime = std::max<std::size_t>(3, static_cast<std::size_t>(std::floor(n / (40 * ln))));
    return p;
}

LowerBoundConstruction lower_bound_construction(std::size_t n, std::uint64_t seed, std::size_t max_tries) {
    if (n < 3) throw ParameterError("lower bound construction needs n >= 3, got " + std::to_string(n));
    LowerBoundConstruction out;
    if (n <= 20) {
        out.tournament = base_lower_bound_tournament();
        return out;
    }
    const auto p = lower_bound_params(n);
    Tournament outer = random_tournament_avoiding(p.m, p.k, seed, max_tries);
    Tournament inner = iterated_lower_bound_tournament(p.n_prime, seed + 1, max_tries);
    out.top = blowup(outer, inner);
    out.tournament = out.top->tournament;
    out.params = p;
    return out;
}

Tournament iterated_lower_bound_tournament(std::size_t n, std::uint64_t seed, std::size_t max_tries) {
    return lower_bound_construction(n, seed, max_tries).tournament;
}

SubdivisionSearch contains_subdivision(const Tournament& t, std::size_t n, std::uint64_t budget) {
    if (n < 3) throw ParameterError("S_n needs n >= 3, got " + std::to_string(n));
    if (subdivision_vertex_count(n) > t.vertex_count()) return {};
    return SubdivisionSearcher(t, n, budget).run();
}

std::optional<std::string> check_subdivision_copy(const Tournament& t, const Subdivision& s,
                                                  const std::vector<Vertex>& inj) {
    const std::size_t vn = s.digraph.vertex_count();
    if (inj.size() != vn)
        return "injection has " + std::to_string(inj.size()) + " entries, expected " + std::to_string(vn);
    Bitset seen(t.vertex_count());
    for (std::size_t v = 0; v < vn; ++v) {
        if (inj[v] >= t.vertex_count()) return "image of vertex " + std::to_string(v + 1) + " is outside";
        if (seen.test(inj[v])) return "vertex " + std::to_string(inj[v] + 1) + " is used twice";
        seen.set(inj[v]);
    }
    for (const auto& a : s.digraph.arcs())
        if (!t.beats(inj[a.from], inj[a.to]))
            return "arc " + std::to_string(a.from + 1) + " -> " + std::to_string(a.to + 1) + " is reversed";
    return std::nullopt;
}

BucketReport verify_bucket_claims(const BlowupTournament& t, const std::vector<Vertex>& inj, std::size_t n,
                                  std::size_t n_prime) {
    const Subdivision s = build_subdivision_S(n);
    if (auto bad = check_subdivision_copy(t.tournament, s, inj)) throw DomainError("not a copy of S_n: " + *bad);
    const std::size_t size = t.inner.vertex_count();
    BucketReport r;
    r.bucket_sizes.assign(t.outer.vertex_count(), 0);
    for (Vertex i = 0; i < n; ++i) ++r.bucket_sizes[inj[i] / size];
    r.n_prime = n_prime;
    r.log_bound = 4 * std::log(static_cast<long double>(n));
    r.buckets_below_n_prime =
        std::all_of(r.bucket_sizes.begin(), r.bucket_sizes.end(), [&](auto b) { return b < n_prime; });
    const auto large = std::count_if(r.bucket_sizes.begin(), r.bucket_sizes.end(), [](auto b) { return b >= 2; });
    r.few_large_buckets = static_cast<long double>(large) < r.log_bound;
    r.sum_inequality = static_cast<long double>(t.outer.vertex_count()) + r.log_bound * n_prime <
                       static_cast<long double>(n);
    return r;
}

}  // namespace oramsey
