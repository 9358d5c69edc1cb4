#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "edom/bitset.hpp"
#include "edom/incidence.hpp"
#include "edom/rng.hpp"

namespace edom {

/// Point set X and block set Y with no incidences between them.
/// Index lists are kept sorted ascending.
struct IncidenceFreePair {
    std::vector<std::uint32_t> X;
    std::vector<std::uint32_t> Y;

    bool equinumerous() const { return X.size() == Y.size(); }
    std::uint32_t alpha() const { return static_cast<std::uint32_t>(std::min(X.size(), Y.size())); }
};

inline bool is_incidence_free(const IncidenceStructure& D, const std::vector<std::uint32_t>& X,
                              const std::vector<std::uint32_t>& Y) {
    DynBitset yb(D.b());
    for (auto y : Y) yb.set(y);
    for (auto x : X)
        for (auto blk : D.point_row(x))
            if (yb.test(blk)) return false;
    return true;
}

inline bool is_incidence_free(const IncidenceStructure& D, const IncidenceFreePair& pair) {
    return is_incidence_free(D, pair.X, pair.Y);
}

/// Drop highest-index elements from the larger side until |X| = |Y|.
inline IncidenceFreePair trim_equinumerous(IncidenceFreePair pair) {
    std::size_t m = std::min(pair.X.size(), pair.Y.size());
    pair.X.resize(m);
    pair.Y.resize(m);
    return pair;
}

// ---------------------------------------------------------------------------
// Polarities and polarity graphs
// ---------------------------------------------------------------------------

/// A polarity is carried as sigma: point index -> block index. The induced
/// involution on points u blocks maps block j back to point sigma^{-1}(j).
struct Polarity {
    std::vector<std::uint32_t> sigma;
};

/// Bijectivity plus the incidence-preservation law P in s(Q) <=> Q in s(P).
inline bool is_polarity(const IncidenceStructure& D, const std::vector<std::uint32_t>& sigma) {
    if (D.v() != D.b() || sigma.size() != D.v()) return false;
    std::vector<char> hit(D.b(), 0);
    for (auto j : sigma) {
        if (j >= D.b() || hit[j]) return false;
        hit[j] = 1;
    }
    for (std::uint32_t p = 0; p < D.v(); ++p)
        for (std::uint32_t q = p; q < D.v(); ++q)
            if (D.incident(p, sigma[q]) != D.incident(q, sigma[p])) return false;
    return true;
}

/// Vertices are points; P ~ Q iff P lies on sigma(Q). Loops sit at absolute
/// points and count as edges, so cocliques avoid absolute points.
struct PolarityGraph {
    std::uint32_t n = 0;
    std::vector<DynBitset> adj; // without loops; loops tracked via `absolute`
    DynBitset absolute;
};

inline PolarityGraph polarity_graph(const IncidenceStructure& D, const std::vector<std::uint32_t>& sigma) {
    require(is_polarity(D, sigma), ErrorKind::NotAPolarity, "sigma fails the polarity predicate");
    PolarityGraph R;
    R.n = D.v();
    R.adj.assign(R.n, DynBitset(R.n));
    R.absolute = DynBitset(R.n);
    for (std::uint32_t q = 0; q < R.n; ++q) {
        for (auto p : D.block(sigma[q])) {
            if (p == q)
                R.absolute.set(q);
            else {
                R.adj[p].set(q);
                R.adj[q].set(p);
            }
        }
    }
    return R;
}

struct CocliqueResult {
    std::vector<std::uint32_t> members;
    bool certified = false; // search ran to completion
    std::uint64_t nodes = 0;
};

/// Exact maximum coclique by include/exclude search with the |C| + |allowed|
/// cutoff. Deterministic: first optimum in canonical order is kept.
inline CocliqueResult coclique_exact(const PolarityGraph& R, std::uint64_t budget = 10'000'000) {
    CocliqueResult best;
    std::vector<std::uint32_t> cur;
    std::uint64_t nodes = 0;
    bool exhausted = true;

    DynBitset allowed = R.absolute.complement();

    auto rec = [&](auto&& self, DynBitset avail) -> void {
        if (++nodes > budget) {
            exhausted = false;
            return;
        }
        if (cur.size() > best.members.size()) best.members = cur;
        std::size_t first = avail.next_set();
        if (first == avail.size()) return;
        if (cur.size() + avail.count() <= best.members.size()) return;
        std::uint32_t pivot = static_cast<std::uint32_t>(first);
        // include
        DynBitset in = avail;
        in.reset(pivot);
        in.subtract(R.adj[pivot]);
        cur.push_back(pivot);
        self(self, in);
        cur.pop_back();
        // exclude
        avail.reset(pivot);
        self(self, avail);
    };
    rec(rec, allowed);
    best.certified = exhausted;
    best.nodes = nodes;
    return best;
}

inline std::vector<std::uint32_t> coclique_greedy(const PolarityGraph& R, std::uint64_t seed) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t i = 0; i < R.n; ++i)
        if (!R.absolute.test(i)) order.push_back(i);
    SplitMix64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    DynBitset blocked(R.n);
    std::vector<std::uint32_t> out;
    for (auto vtx : order)
        if (!blocked.test(vtx)) {
            out.push_back(vtx);
            blocked |= R.adj[vtx];
            blocked.set(vtx);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Coclique C of the polarity graph gives the equinumerous incidence-free
/// pair (C, sigma(C)); fully re-verified before returning.
inline IncidenceFreePair pair_from_coclique(const IncidenceStructure& D, const std::vector<std::uint32_t>& sigma,
                                            const std::vector<std::uint32_t>& coclique) {
    IncidenceFreePair pair;
    pair.X = coclique;
    std::sort(pair.X.begin(), pair.X.end());
    for (auto p : pair.X) pair.Y.push_back(sigma[p]);
    std::sort(pair.Y.begin(), pair.Y.end());
    require(is_incidence_free(D, pair), ErrorKind::Internal, "coclique did not give an incidence-free pair");
    return pair;
}

// ---------------------------------------------------------------------------
// Exact maximum equinumerous incidence-free pair
// ---------------------------------------------------------------------------

struct AlphaResult {
    std::uint32_t alpha = 0;
    IncidenceFreePair witness;
    bool certified = false;
    std::uint64_t nodes = 0;
    /// Interval lower end when not certified (= alpha found so far).
    std::uint32_t lower_bound = 0;
    /// Optional cap from a design bound; UINT32_MAX when none applies.
    std::uint32_t upper_bound = UINT32_MAX;
};

/// Branch on points in canonical order; Y is forced to the blocks avoiding X,
/// and the objective is min(|X|, |Y_avail|), which only the X side can raise.
/// `upper_cap`, when given, lets the search stop as soon as it is attained.
inline AlphaResult alpha_exact(const IncidenceStructure& D, std::uint64_t budget = 10'000'000,
                               std::uint32_t upper_cap = UINT32_MAX) {
    AlphaResult res;
    res.upper_bound = upper_cap;
    std::uint32_t v = D.v();
    std::uint64_t nodes = 0;
    bool exhausted = true;
    std::vector<std::uint32_t> cur;

    DynBitset yavail = DynBitset::full(D.b());

    auto record = [&](std::uint32_t value, const DynBitset& avail) {
        if (value > res.alpha) {
            res.alpha = value;
            IncidenceFreePair w;
            w.X = cur;
            w.Y = avail.to_indices();
            res.witness = trim_equinumerous(std::move(w));
        }
    };

    auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t ycount) -> void {
        if (++nodes > budget) {
            exhausted = false;
            return;
        }
        std::uint32_t value = std::min<std::uint32_t>(static_cast<std::uint32_t>(cur.size()), ycount);
        record(value, yavail);
        if (res.alpha >= upper_cap) return;
        if (cur.size() >= ycount) return; // growing X can only shrink Y
        if (i == v) return;
        std::uint32_t ub = std::min<std::uint32_t>(static_cast<std::uint32_t>(cur.size()) + (v - i), ycount);
        if (ub <= res.alpha) return;

        // include point i
        std::vector<std::uint32_t> removed;
        for (auto blk : D.point_row(i))
            if (yavail.test(blk)) {
                yavail.reset(blk);
                removed.push_back(blk);
            }
        cur.push_back(i);
        self(self, i + 1, ycount - static_cast<std::uint32_t>(removed.size()));
        cur.pop_back();
        for (auto blk : removed) yavail.set(blk);
        if (res.alpha >= upper_cap) return;

        // exclude point i
        self(self, i + 1, ycount);
    };
    rec(rec, 0, D.b());

    res.certified = exhausted || res.alpha >= upper_cap;
    res.nodes = nodes;
    res.lower_bound = res.alpha;
    return res;
}

// ---------------------------------------------------------------------------
// Maximal arcs
// ---------------------------------------------------------------------------

struct MaximalArc {
    std::vector<std::uint32_t> S;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> dual_arc; // blocks missing S
    bool trivial = false;                // one point, all points, or a block complement
};

/// The unique n with every block meeting S in 0 or n points, or nullopt.
inline std::optional<std::uint32_t> is_maximal_arc(const IncidenceStructure& D,
                                                   const std::vector<std::uint32_t>& S) {
    if (S.empty()) return std::nullopt;
    std::vector<std::uint32_t> cnt(D.b(), 0);
    for (auto p : S)
        for (auto blk : D.point_row(p)) ++cnt[blk];
    std::uint32_t n = 0;
    for (auto c : cnt) {
        if (c == 0) continue;
        if (n == 0) n = c;
        if (c != n) return std::nullopt;
    }
    return n == 0 ? std::nullopt : std::optional<std::uint32_t>(n);
}

inline std::vector<std::uint32_t> dual_arc(const IncidenceStructure& D, const std::vector<std::uint32_t>& S) {
    std::vector<char> meets(D.b(), 0);
    for (auto p : S)
        for (auto blk : D.point_row(p)) meets[blk] = 1;
    std::vector<std::uint32_t> T;
    for (std::uint32_t j = 0; j < D.b(); ++j)
        if (!meets[j]) T.push_back(j);
    return T;
}

inline bool arc_is_trivial(const IncidenceStructure& D, const std::vector<std::uint32_t>& S) {
    if (S.size() == 1 || S.size() == D.v()) return true;
    // complement of a block?
    DynBitset sb(D.v());
    for (auto p : S) sb.set(p);
    for (std::uint32_t j = 0; j < D.b(); ++j) {
        if (D.block_size(j) + S.size() != D.v()) continue;
        bool disjoint = true;
        for (auto p : D.block(j))
            if (sb.test(p)) {
                disjoint = false;
                break;
            }
        if (disjoint) return true;
    }
    return false;
}

inline MaximalArc make_arc(const IncidenceStructure& D, std::vector<std::uint32_t> S, std::uint32_t order) {
    MaximalArc arc;
    arc.S = std::move(S);
    std::sort(arc.S.begin(), arc.S.end());
    arc.order = order;
    arc.dual_arc = dual_arc(D, arc.S);
    arc.trivial = arc_is_trivial(D, arc.S);
    return arc;
}

struct ArcSearchResult {
    std::optional<MaximalArc> arc;
    bool exhausted = true;
    std::uint64_t nodes = 0;
    std::uint64_t target_size = 0;
};

/// Exhaustive search for a maximal arc of order n in a design (where the size
/// 1 + r(n-1)/lambda is forced). First arc in canonical point order wins.
inline ArcSearchResult maximal_arc_search(const IncidenceStructure& D, std::uint32_t n, std::uint32_t r,
                                          std::uint32_t lambda, std::uint64_t budget = 10'000'000) {
    ArcSearchResult res;
    require(n >= 1, ErrorKind::BadOrder, "arc order must be positive");
    std::uint64_t num = static_cast<std::uint64_t>(r) * (n - 1);
    if (num % lambda != 0) return res; // size not integral: no arc of this order
    std::uint64_t target = 1 + num / lambda;
    res.target_size = target;
    if (target > D.v()) return res;

    std::uint32_t v = D.v();
    std::vector<std::uint32_t> cnt(D.b(), 0);
    std::vector<std::uint32_t> cur;
    std::uint64_t nodes = 0;

    auto rec = [&](auto&& self, std::uint32_t i) -> bool {
        if (++nodes > budget) {
            res.exhausted = false;
            return false;
        }
        if (cur.size() == target) {
            for (auto c : cnt)
                if (c != 0 && c != n) return false;
            res.arc = make_arc(D, cur, n);
            return true;
        }
        if (i == v || cur.size() + (v - i) < target) return false;
        // include i if no block overflows the order
        bool ok = true;
        for (auto blk : D.point_row(i))
            if (cnt[blk] + 1 > n) {
                ok = false;
                break;
            }
        if (ok) {
            for (auto blk : D.point_row(i)) ++cnt[blk];
            cur.push_back(i);
            if (self(self, i + 1)) return true;
            cur.pop_back();
            for (auto blk : D.point_row(i)) --cnt[blk];
        }
        return self(self, i + 1);
    };
    rec(rec, 0);
    res.nodes = nodes;
    return res;
}

// ---------------------------------------------------------------------------
// Probabilistic sampler
// ---------------------------------------------------------------------------

struct RandomPairResult {
    IncidenceFreePair best;
    std::uint32_t best_trial = 0;
    std::uint64_t seed = 0;
    std::uint32_t trials = 0;
};

/// Per trial: include each point independently with probability ln(k)/(2k),
/// take the blocks meeting no chosen point, trim to equinumerous height.
/// Trial t uses the derived seed (seed + t). Best pair wins; ties go to the
/// lexicographically least (X, Y).
inline RandomPairResult random_ifpair(const IncidenceStructure& D, std::uint64_t seed, std::uint32_t trials) {
    RandomPairResult res;
    res.seed = seed;
    res.trials = trials;
    if (D.b() == 0 || trials == 0) return res;
    std::uint32_t k = D.block_size(0);
    for (std::uint32_t j = 1; j < D.b(); ++j)
        require(D.block_size(j) == k, ErrorKind::NotSIS, "sampler needs uniform block size");
    double p = k >= 2 ? std::log(static_cast<double>(k)) / (2.0 * k) : 0.5;

    std::vector<char> blocked(D.b());
    for (std::uint32_t t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + t);
        IncidenceFreePair pair;
        std::fill(blocked.begin(), blocked.end(), 0);
        for (std::uint32_t i = 0; i < D.v(); ++i)
            if (rng.bernoulli(p)) {
                pair.X.push_back(i);
                for (auto blk : D.point_row(i)) blocked[blk] = 1;
            }
        for (std::uint32_t j = 0; j < D.b(); ++j)
            if (!blocked[j]) pair.Y.push_back(j);
        pair = trim_equinumerous(std::move(pair));
        bool better = pair.alpha() > res.best.alpha() ||
                      (pair.alpha() == res.best.alpha() &&
                       (pair.X < res.best.X || (pair.X == res.best.X && pair.Y < res.best.Y)));
        if (t == 0 || better) {
            res.best = std::move(pair);
            res.best_trial = t;
        }
    }
    require(is_incidence_free(D, res.best), ErrorKind::Internal, "sampler produced an incident pair");
    return res;
}

} // namespace edom
