#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "edom/bitset.hpp"
#include "edom/formulas.hpp"
#include "edom/ifpair.hpp"
#include "edom/incidence.hpp"

namespace edom {

/// Bipartite graph in CSR form with original-vertex maps, so induced
/// subgraphs of an incidence graph remember where they came from.
struct BipGraph {
    std::uint32_t nu = 0, nv = 0;
    std::vector<std::vector<std::uint32_t>> adj; // adj[u] = neighbours in V, ascending
    std::vector<std::uint32_t> u_orig, v_orig;   // local -> original indices

    static BipGraph full(const IncidenceStructure& D) {
        BipGraph G;
        G.nu = D.v();
        G.nv = D.b();
        G.adj.resize(G.nu);
        for (std::uint32_t p = 0; p < D.v(); ++p) G.adj[p] = D.point_row(p);
        G.u_orig.resize(G.nu);
        G.v_orig.resize(G.nv);
        for (std::uint32_t i = 0; i < G.nu; ++i) G.u_orig[i] = i;
        for (std::uint32_t j = 0; j < G.nv; ++j) G.v_orig[j] = j;
        return G;
    }

    /// Induced subgraph of I(D) on given point and block subsets (sorted).
    static BipGraph induced(const IncidenceStructure& D, const std::vector<std::uint32_t>& points,
                            const std::vector<std::uint32_t>& blocks) {
        BipGraph G;
        G.nu = static_cast<std::uint32_t>(points.size());
        G.nv = static_cast<std::uint32_t>(blocks.size());
        G.u_orig = points;
        G.v_orig = blocks;
        std::vector<std::uint32_t> blocal(D.b(), UINT32_MAX);
        for (std::uint32_t j = 0; j < blocks.size(); ++j) blocal[blocks[j]] = j;
        G.adj.resize(G.nu);
        for (std::uint32_t i = 0; i < G.nu; ++i)
            for (auto blk : D.point_row(points[i]))
                if (blocal[blk] != UINT32_MAX) G.adj[i].push_back(blocal[blk]);
        return G;
    }

    std::uint64_t edge_count() const {
        std::uint64_t e = 0;
        for (const auto& a : adj) e += a.size();
        return e;
    }
};

/// Matching in I(D), stored as (point, block) pairs over original indices.
struct Matching {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::size_t size() const { return edges.size(); }
};

struct EdgeDominatingSet {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    bool is_maximal_matching = false;
    std::size_t size() const { return edges.size(); }
};

/// Every edge of I(D) must meet an edge of gamma.
inline bool is_edge_dominating(const IncidenceStructure& D,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    DynBitset pcov(D.v()), bcov(D.b());
    for (auto [p, blk] : edges) {
        if (p >= D.v() || blk >= D.b() || !D.incident(p, blk)) return false;
        pcov.set(p);
        bcov.set(blk);
    }
    for (std::uint32_t p = 0; p < D.v(); ++p) {
        if (pcov.test(p)) continue;
        for (auto blk : D.point_row(p))
            if (!bcov.test(blk)) return false;
    }
    return true;
}

inline bool is_matching(const IncidenceStructure& D,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    DynBitset pcov(D.v()), bcov(D.b());
    for (auto [p, blk] : edges) {
        if (p >= D.v() || blk >= D.b() || !D.incident(p, blk)) return false;
        if (pcov.test(p) || bcov.test(blk)) return false;
        pcov.set(p);
        bcov.set(blk);
    }
    return true;
}

namespace detail {

/// Hopcroft-Karp on a local BipGraph. pair_u/pair_v use UINT32_MAX for free.
struct HopcroftKarp {
    static constexpr std::uint32_t NIL = UINT32_MAX;
    const BipGraph& G;
    std::vector<std::uint32_t> pair_u, pair_v, dist;

    explicit HopcroftKarp(const BipGraph& g)
        : G(g), pair_u(g.nu, NIL), pair_v(g.nv, NIL), dist(g.nu, 0) {}

    bool bfs() {
        std::queue<std::uint32_t> q;
        std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
        bool reachable_free = false;
        for (std::uint32_t u = 0; u < G.nu; ++u) {
            if (pair_u[u] == NIL) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = inf;
            }
        }
        std::uint32_t limit = inf;
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            if (dist[u] >= limit) continue;
            for (auto v : G.adj[u]) {
                std::uint32_t w = pair_v[v];
                if (w == NIL) {
                    limit = std::min(limit, dist[u] + 1);
                    reachable_free = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(std::uint32_t u) {
        for (auto v : G.adj[u]) {
            std::uint32_t w = pair_v[v];
            if (w == NIL || (dist[w] == dist[u] + 1 && dfs(w))) {
                pair_u[u] = v;
                pair_v[v] = u;
                return true;
            }
        }
        dist[u] = std::numeric_limits<std::uint32_t>::max();
        return false;
    }

    std::uint32_t run() {
        std::uint32_t m = 0;
        while (bfs())
            for (std::uint32_t u = 0; u < G.nu; ++u)
                if (pair_u[u] == NIL && dfs(u)) ++m;
        return m;
    }
};

/// Konig vertex cover from a maximum matching: Z = vertices alternating-
/// reachable from free U vertices; cover = (U \ Z) u (V n Z).
struct KonigCover {
    std::vector<std::uint32_t> u_side, v_side; // local indices
    DynBitset zu, zv;                          // the alternating-reachable sets
};

inline KonigCover konig_cover(const BipGraph& G, const HopcroftKarp& hk) {
    KonigCover C;
    C.zu = DynBitset(G.nu);
    C.zv = DynBitset(G.nv);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t u = 0; u < G.nu; ++u)
        if (hk.pair_u[u] == HopcroftKarp::NIL) {
            C.zu.set(u);
            stack.push_back(u);
        }
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (auto v : G.adj[u]) {
            if (C.zv.test(v)) continue;
            C.zv.set(v); // edge u-v is unmatched or matched elsewhere; v reached
            std::uint32_t w = hk.pair_v[v];
            if (w != HopcroftKarp::NIL && !C.zu.test(w)) {
                C.zu.set(w);
                stack.push_back(w);
            }
        }
    }
    for (std::uint32_t u = 0; u < G.nu; ++u)
        if (!C.zu.test(u)) C.u_side.push_back(u);
    for (std::uint32_t v = 0; v < G.nv; ++v)
        if (C.zv.test(v)) C.v_side.push_back(v);
    return C;
}

} // namespace detail

/// Maximum-cardinality matching; the Konig cover certificate is re-checked
/// (cover size equals matching size and covers every edge) before returning.
inline Matching max_matching(const BipGraph& G) {
    detail::HopcroftKarp hk(G);
    std::uint32_t m = hk.run();
    auto cover = detail::konig_cover(G, hk);
    require(cover.u_side.size() + cover.v_side.size() == m, ErrorKind::Internal,
            "Konig certificate size mismatch");
    DynBitset cu(G.nu), cv(G.nv);
    for (auto u : cover.u_side) cu.set(u);
    for (auto v : cover.v_side) cv.set(v);
    for (std::uint32_t u = 0; u < G.nu; ++u)
        for (auto v : G.adj[u])
            require(cu.test(u) || cv.test(v), ErrorKind::Internal, "Konig certificate misses an edge");

    Matching out;
    for (std::uint32_t u = 0; u < G.nu; ++u)
        if (hk.pair_u[u] != detail::HopcroftKarp::NIL)
            out.edges.emplace_back(G.u_orig[u], G.v_orig[hk.pair_u[u]]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

inline Matching max_matching(const IncidenceStructure& D) { return max_matching(BipGraph::full(D)); }

/// Matching covering the smaller side of a biregular graph; the Hall-type
/// lemma guarantees one exists, so failure is a contract violation.
/// Side U is the point side when nu <= nv, else the block side.
inline Matching biregular_cover_matching(const BipGraph& G) {
    auto constant_degree = [](const std::vector<std::vector<std::uint32_t>>& adj) {
        for (std::size_t i = 1; i < adj.size(); ++i)
            if (adj[i].size() != adj[0].size()) return false;
        return true;
    };
    std::vector<std::uint32_t> vdeg(G.nv, 0);
    for (const auto& a : G.adj)
        for (auto v : a) ++vdeg[v];
    bool vregular = true;
    for (auto d : vdeg) vregular &= d == vdeg[0];
    require(constant_degree(G.adj) && vregular, ErrorKind::NotBiregular, "graph is not biregular");

    detail::HopcroftKarp hk(G);
    std::uint32_t m = hk.run();
    std::uint32_t small = std::min(G.nu, G.nv);
    require(m == small, ErrorKind::Internal, "biregular graph failed to cover its small side");
    Matching out;
    for (std::uint32_t u = 0; u < G.nu; ++u)
        if (hk.pair_u[u] != detail::HopcroftKarp::NIL)
            out.edges.emplace_back(G.u_orig[u], G.v_orig[hk.pair_u[u]]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

/// Either a perfect matching of the stated induced subgraph, or a Hall
/// violator S (original point indices) with |N(S)| < |S|.
struct HallCertificate {
    std::optional<Matching> perfect;
    std::vector<std::uint32_t> violator;
    std::vector<std::uint32_t> violator_neighborhood;
    bool has_matching() const { return perfect.has_value(); }
};

/// Perfect matching between P \ X and B \ Y, or a Hall violator inside P \ X.
inline HallCertificate complement_perfect_matching(const IncidenceStructure& D,
                                                   const std::vector<std::uint32_t>& X,
                                                   const std::vector<std::uint32_t>& Y) {
    DynBitset xb(D.v()), yb(D.b());
    for (auto p : X) xb.set(p);
    for (auto blk : Y) yb.set(blk);
    std::vector<std::uint32_t> points, blocks;
    for (std::uint32_t p = 0; p < D.v(); ++p)
        if (!xb.test(p)) points.push_back(p);
    for (std::uint32_t j = 0; j < D.b(); ++j)
        if (!yb.test(j)) blocks.push_back(j);
    require(points.size() == blocks.size(), ErrorKind::UnequalSides,
            "complement sides differ: " + std::to_string(points.size()) + " vs " + std::to_string(blocks.size()));

    BipGraph G = BipGraph::induced(D, points, blocks);
    detail::HopcroftKarp hk(G);
    std::uint32_t m = hk.run();
    HallCertificate cert;
    if (m == G.nu) {
        Matching out;
        for (std::uint32_t u = 0; u < G.nu; ++u) out.edges.emplace_back(G.u_orig[u], G.v_orig[hk.pair_u[u]]);
        std::sort(out.edges.begin(), out.edges.end());
        cert.perfect = std::move(out);
        return cert;
    }
    // Hall violator: U-side alternating-reachable set from free U vertices;
    // |N(S)| = |S| - (#free U in S) < |S|.
    auto cover = detail::konig_cover(G, hk);
    cover.zu.for_each_set([&](std::size_t u) { cert.violator.push_back(G.u_orig[u]); });
    cover.zv.for_each_set([&](std::size_t v) { cert.violator_neighborhood.push_back(G.v_orig[v]); });
    require(cert.violator_neighborhood.size() < cert.violator.size(), ErrorKind::Internal,
            "Hall violator certificate is not violating");
    return cert;
}

/// Edge dominating set of size v - |X| from an equinumerous incidence-free
/// pair, when the complement has a perfect matching. The pathway that fails
/// here (returning the violator) is a legitimate outcome, not an error.
struct DominatingFromPairResult {
    std::optional<EdgeDominatingSet> dominating;
    HallCertificate certificate;
};

inline DominatingFromPairResult dominating_from_ifpair(const IncidenceStructure& D, const IncidenceFreePair& pair) {
    require(is_incidence_free(D, pair), ErrorKind::NotDominating, "pair is not incidence-free");
    DominatingFromPairResult res;
    res.certificate = complement_perfect_matching(D, pair.X, pair.Y);
    if (!res.certificate.has_matching()) return res;
    EdgeDominatingSet eds;
    eds.edges = res.certificate.perfect->edges;
    eds.is_maximal_matching = true;
    require(is_matching(D, eds.edges) && is_edge_dominating(D, eds.edges), ErrorKind::Internal,
            "complement matching is not a maximal matching");
    res.dominating = std::move(eds);
    return res;
}

/// Edge dominating set of size v - |S| from a maximal arc whose order sits at
/// the equality case of the counting bound; the complement of (S, dual arc)
/// is then biregular with equal sides and carries a perfect matching.
inline EdgeDominatingSet arc_to_dominating(const IncidenceStructure& D, const MaximalArc& arc,
                                           std::uint32_t k, std::uint32_t r, std::uint32_t lambda) {
    double want = arc_equality_order(k, r, lambda);
    require(std::abs(static_cast<double>(arc.order) - want) < 1e-6, ErrorKind::WrongOrder,
            "arc order " + std::to_string(arc.order) + " is not the equality-case order");
    auto verified = is_maximal_arc(D, arc.S);
    require(verified.has_value() && *verified == arc.order, ErrorKind::WrongOrder,
            "arc failed the maximal-arc predicate");
    auto res = dominating_from_ifpair(D, IncidenceFreePair{arc.S, arc.dual_arc});
    require(res.dominating.has_value(), ErrorKind::Internal, "equality-case complement had no perfect matching");
    return *res.dominating;
}

/// The hypothesis checklist under which an equinumerous incidence-free pair
/// in an SIS is guaranteed to complete to an edge dominating set:
/// v <= (9/5) k^2/lambda, k >= 100, |X| <= k^2/(10 lambda), and every point or
/// block outside the pair keeps at least 2|X|/k neighbours outside it.
struct SisMatchingReport {
    bool v_condition = false;
    bool k_condition = false;
    bool alpha_condition = false;
    bool min_degree_condition = false;
    bool all_hold = false;
};

inline SisMatchingReport check_sis_matching_conditions(const IncidenceStructure& D, std::uint32_t k,
                                                       std::uint32_t lambda, const IncidenceFreePair& pair) {
    require(pair.equinumerous(), ErrorKind::UnequalSides, "pair must be equinumerous");
    require(is_incidence_free(D, pair), ErrorKind::NotDominating, "pair is not incidence-free");
    SisMatchingReport rep;
    std::uint64_t v = D.v(), kk = static_cast<std::uint64_t>(k) * k, a = pair.X.size();
    rep.v_condition = 5 * v * lambda <= 9 * kk;
    rep.k_condition = k >= 100;
    rep.alpha_condition = 10 * a * lambda <= kk;

    DynBitset xb(D.v()), yb(D.b());
    for (auto x : pair.X) xb.set(x);
    for (auto y : pair.Y) yb.set(y);
    bool mindeg = true;
    for (std::uint32_t p = 0; p < D.v() && mindeg; ++p) {
        if (xb.test(p)) continue;
        std::uint64_t deg = 0;
        for (auto blk : D.point_row(p)) deg += !yb.test(blk);
        mindeg = deg * k >= 2 * a;
    }
    for (std::uint32_t j = 0; j < D.b() && mindeg; ++j) {
        if (yb.test(j)) continue;
        std::uint64_t deg = 0;
        for (auto p : D.block(j)) deg += !xb.test(p);
        mindeg = deg * k >= 2 * a;
    }
    rep.min_degree_condition = mindeg;
    rep.all_hold = rep.v_condition && rep.k_condition && rep.alpha_condition && rep.min_degree_condition;
    if (rep.all_hold) {
        auto dom = dominating_from_ifpair(D, pair);
        require(dom.dominating.has_value(), ErrorKind::Internal,
                "matching guarantee failed although every hypothesis holds");
    }
    return rep;
}

/// One incident block per point: the trivial size-<=v edge dominating set.
inline EdgeDominatingSet dominating_trivial(const IncidenceStructure& D) {
    EdgeDominatingSet eds;
    for (std::uint32_t p = 0; p < D.v(); ++p) {
        require(D.point_degree(p) > 0, ErrorKind::IsolatedPoint,
                "point " + std::to_string(p) + " lies in no block");
        eds.edges.emplace_back(p, D.point_row(p)[0]);
    }
    require(is_edge_dominating(D, eds.edges), ErrorKind::Internal, "trivial set failed the dominating scan");
    return eds;
}

/// The size-(v-1) edge dominating set of a design with r < v: cover the r
/// blocks through the first point by a matching avoiding it, then give every
/// remaining point one edge.
inline EdgeDominatingSet dominating_v_minus_1(const IncidenceStructure& D, std::uint32_t r, std::uint32_t v) {
    require(r < v, ErrorKind::WrongOrder, "construction requires r < v");
    std::uint32_t p0 = 0;
    std::vector<std::uint32_t> other_points;
    for (std::uint32_t p = 1; p < D.v(); ++p) other_points.push_back(p);
    BipGraph G = BipGraph::induced(D, other_points, D.point_row(p0));
    // biregular: points of P \ {p0} vs the r blocks through p0
    detail::HopcroftKarp hk(G);
    std::uint32_t m = hk.run();
    require(m == G.nv, ErrorKind::Internal, "failed to cover the blocks through the chosen point");

    EdgeDominatingSet eds;
    DynBitset pcov(D.v());
    pcov.set(p0); // p0 deliberately stays uncovered
    for (std::uint32_t vloc = 0; vloc < G.nv; ++vloc) {
        std::uint32_t u = hk.pair_v[vloc];
        eds.edges.emplace_back(G.u_orig[u], G.v_orig[vloc]);
        pcov.set(G.u_orig[u]);
    }
    for (std::uint32_t p = 0; p < D.v(); ++p) {
        if (pcov.test(p)) continue;
        require(D.point_degree(p) > 0, ErrorKind::IsolatedPoint, "isolated point");
        eds.edges.emplace_back(p, D.point_row(p)[0]);
    }
    std::sort(eds.edges.begin(), eds.edges.end());
    require(eds.edges.size() == static_cast<std::size_t>(D.v()) - 1, ErrorKind::Internal, "size is not v-1");
    require(is_edge_dominating(D, eds.edges), ErrorKind::Internal, "v-1 construction failed the dominating scan");
    return eds;
}

} // namespace edom
