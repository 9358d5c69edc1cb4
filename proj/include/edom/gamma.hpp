#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "edom/bitset.hpp"
#include "edom/incidence.hpp"
#include "edom/matching.hpp"

namespace edom {

struct GammaResult {
    std::uint32_t gamma = 0; // best maximal-matching size found
    bool certified = false;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> witness;
    std::uint64_t nodes = 0;
    std::uint32_t lower_bound = 0; // certified lower end of the interval
};

inline constexpr std::uint64_t kDefaultGammaBudget = 10'000'000;

/// Exact minimum maximal matching of I(D) by depth-first branch and bound.
///
/// At each node the lexicographically first undominated edge (p,b) must be
/// dominated: branch over including (p,b') for each free block b' on p, then
/// (p',b) for each free point p' on b. Prune with |M| + ceil(g/2) where g is a
/// greedy matching of the undominated subgraph (an edge dominating set of a
/// graph with a size-g matching needs at least g/2 edges), and stop once the
/// incumbent meets `lower_bound` (pass the best counting/spectral bound;
/// ceil(max matching / 2) is folded in automatically).
inline GammaResult gamma_exact(const IncidenceStructure& D, std::uint64_t budget = kDefaultGammaBudget,
                               std::uint32_t lower_bound = 0) {
    require(D.has_bitsets(), ErrorKind::TooLarge, "exact solver needs the dense bitset view");
    const std::uint32_t v = D.v();

    GammaResult res;
    {
        Matching mm = max_matching(D);
        std::uint32_t nu = static_cast<std::uint32_t>(mm.size());
        lower_bound = std::max(lower_bound, (nu + 1) / 2);
    }
    res.lower_bound = lower_bound;

    DynBitset matched_p(v), matched_b(D.b());
    DynBitset used(D.b()); // scratch for the greedy sweep
    const std::size_t bw = used.nwords();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cur;

    // Lexicographic greedy maximal matching seeds the incumbent so a budget
    // cut still leaves a valid witness.
    std::uint32_t best;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> best_witness;
    {
        DynBitset taken(D.b());
        for (std::uint32_t p = 0; p < v; ++p) {
            DynBitset avail = D.point_bits(p);
            avail.subtract(taken);
            std::size_t blk = avail.next_set();
            if (blk != avail.size()) {
                taken.set(blk);
                best_witness.emplace_back(p, static_cast<std::uint32_t>(blk));
            }
        }
        best = static_cast<std::uint32_t>(best_witness.size());
    }
    std::uint64_t nodes = 0;
    bool exhausted = true;
    std::uint32_t max_depth = std::min(v, D.b()) + 1;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cand_pool(max_depth);

    // Lexicographically first undominated edge + greedy matching size of the
    // undominated subgraph, one sweep over free points.
    auto inspect = [&](std::uint32_t& fp, std::uint32_t& fb) -> std::uint32_t {
        fp = UINT32_MAX;
        fb = UINT32_MAX;
        used = matched_b;
        std::uint32_t g = 0;
        for (std::uint32_t p = 0; p < v; ++p) {
            if (matched_p.test(p)) continue;
            const DynBitset& row = D.point_bits(p);
            if (fp == UINT32_MAX) {
                for (std::size_t wi = 0; wi < bw; ++wi) {
                    std::uint64_t w = row.word(wi) & ~matched_b.word(wi);
                    if (w) {
                        fp = p;
                        fb = static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w));
                        break;
                    }
                }
            }
            for (std::size_t wi = 0; wi < bw; ++wi) {
                std::uint64_t w = row.word(wi) & ~used.word(wi);
                if (w) {
                    used.set((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                    ++g;
                    break;
                }
            }
        }
        return g;
    };

    auto rec = [&](auto&& self, std::uint32_t depth) -> bool { // true = abort search
        if (++nodes > budget) {
            exhausted = false;
            return true;
        }
        std::uint32_t fp, fb;
        std::uint32_t g = inspect(fp, fb);
        if (fp == UINT32_MAX) { // maximal matching reached
            if (cur.size() < best) {
                best = static_cast<std::uint32_t>(cur.size());
                best_witness = cur;
                if (best <= lower_bound) return true;
            }
            return false;
        }
        if (static_cast<std::uint32_t>(cur.size()) + (g + 1) / 2 >= best) return false;

        auto& cands = cand_pool[depth];
        cands.clear();
        {
            const DynBitset& row = D.point_bits(fp);
            for (std::size_t wi = 0; wi < bw; ++wi) {
                std::uint64_t w = row.word(wi) & ~matched_b.word(wi);
                while (w) {
                    cands.emplace_back(fp, static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w)));
                    w &= w - 1;
                }
            }
            const DynBitset& col = D.block_bits(fb);
            for (std::size_t wi = 0; wi < col.nwords(); ++wi) {
                std::uint64_t w = col.word(wi) & ~matched_p.word(wi);
                while (w) {
                    std::uint32_t p = static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w));
                    if (p != fp) cands.emplace_back(p, fb);
                    w &= w - 1;
                }
            }
        }
        for (auto [p, blk] : cands) {
            matched_p.set(p);
            matched_b.set(blk);
            cur.emplace_back(p, blk);
            bool abort = self(self, depth + 1);
            cur.pop_back();
            matched_p.reset(p);
            matched_b.reset(blk);
            if (abort) return true;
        }
        return false;
    };
    if (best > lower_bound) rec(rec, 0);

    res.nodes = nodes;
    res.gamma = best;
    res.witness = best_witness;
    std::sort(res.witness.begin(), res.witness.end());
    res.certified = best != UINT32_MAX && (best <= lower_bound || exhausted);
    if (res.certified) res.lower_bound = best;

    require(best != UINT32_MAX, ErrorKind::Internal, "no maximal matching found");
    require(is_matching(D, res.witness) && is_edge_dominating(D, res.witness), ErrorKind::Internal,
            "witness failed verification");
    return res;
}

} // namespace edom
