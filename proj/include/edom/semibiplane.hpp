#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "edom/gf.hpp"
#include "edom/ifpair.hpp"
#include "edom/incidence.hpp"
#include "edom/pg.hpp"

namespace edom {

// ---------------------------------------------------------------------------
// Elation quotient: q even. Points are classes {(x1,x2),(x1,x2+1)}, blocks
// classes {l_{m,b}, l_{m,b+1}}, incident iff x2 + m x1 + b lies in {0,1}.
// Class representatives take the lexicographically smaller tuple (even code).
// ---------------------------------------------------------------------------

struct ElationSbp {
    IncidenceStructure D;
    GF field; // GF(q), q = 2^h >= 4
    std::vector<std::uint32_t> block_of_label;

    std::uint32_t half() const { return static_cast<std::uint32_t>(field.q() / 2); }
    std::uint32_t point_index(GFElem x1, GFElem x2) const { return x1 * half() + (x2 >> 1); }
    std::uint32_t block_index(GFElem m, GFElem b) const { return block_of_label[m * half() + (b >> 1)]; }
};

inline ElationSbp sbp_elation(const GF& F) {
    require(F.p() == 2, ErrorKind::OddQ, "elation quotient requires even q");
    require(F.q() >= 4, ErrorKind::OutOfRange, "need q >= 4");
    std::uint32_t q = static_cast<std::uint32_t>(F.q());
    std::uint32_t half = q / 2;
    std::uint32_t v = q * half;

    std::vector<std::vector<std::uint32_t>> blocks(v);
    for (GFElem m = 0; m < q; ++m)
        for (std::uint32_t bi = 0; bi < half; ++bi) {
            GFElem b = static_cast<GFElem>(bi << 1);
            auto& blk = blocks[m * half + bi];
            blk.reserve(q);
            for (GFElem x1 = 0; x1 < q; ++x1) {
                GFElem x2 = F.add(F.mul(m, x1), b); // x2 + m x1 + b = 0
                blk.push_back(x1 * half + (x2 >> 1));
            }
            std::sort(blk.begin(), blk.end());
        }
    std::vector<std::uint32_t> old_to_new;
    auto D = IncidenceStructure::from_blocks(v, std::move(blocks), true, &old_to_new);
    return ElationSbp{std::move(D), F, std::move(old_to_new)};
}

/// The span-based incidence-free pair on the elation quotient: x1 and m range
/// over the span F of 1, omega, ..., omega^f with f = floor(h/2) - 1; the top
/// omega-coordinate of x2 is 0 on the X side and 1 for b on the Y side.
inline IncidenceFreePair ifpair_elation(const ElationSbp& S) {
    const GF& F = S.field;
    std::uint32_t h = F.h();
    require(h >= 2, ErrorKind::ParameterMismatch, "pair construction needs q >= 4");
    std::uint32_t f = h / 2 - 1;

    std::vector<GFElem> span{0};
    GFElem w = 1;
    for (std::uint32_t i = 0; i <= f; ++i) {
        std::size_t cur = span.size();
        for (std::size_t t = 0; t < cur; ++t) span.push_back(F.add(span[t], w));
        w = F.mul(w, F.omega());
    }
    std::sort(span.begin(), span.end());

    std::uint32_t q = static_cast<std::uint32_t>(F.q());
    IncidenceFreePair pair;
    for (auto x1 : span)
        for (GFElem x2 = 0; x2 < q; x2 += 2)
            if (F.omega_coords(static_cast<GFElem>(x2))[h - 1] == 0 &&
                F.omega_coords(static_cast<GFElem>(x2 + 1))[h - 1] == 0)
                pair.X.push_back(S.point_index(x1, x2));
    for (auto m : span)
        for (GFElem b = 0; b < q; b += 2)
            if (F.omega_coords(static_cast<GFElem>(b))[h - 1] == 1 &&
                F.omega_coords(static_cast<GFElem>(b + 1))[h - 1] == 1)
                pair.Y.push_back(S.block_index(m, b));
    std::sort(pair.X.begin(), pair.X.end());
    std::sort(pair.Y.begin(), pair.Y.end());
    require(is_incidence_free(S.D, pair), ErrorKind::Internal, "elation pair is not incidence-free");
    require(pair.equinumerous(), ErrorKind::Internal, "elation pair is not equinumerous");
    return pair;
}

// ---------------------------------------------------------------------------
// Homology quotient: q odd. Points are classes {(x1,x2), (-x1,-x2)} over
// GF(q^2) minus the origin; blocks l_{a,b} with incidence a x1 + b x2 = +-1.
// ---------------------------------------------------------------------------

struct HomologySbp {
    IncidenceStructure D;
    GF field; // GF(q^2)
    std::uint32_t q = 0;
    std::vector<std::uint32_t> class_index; // by x1 * q^2 + x2, valid on representatives
    std::vector<std::uint32_t> block_of_class;

    bool is_rep(GFElem x1, GFElem x2) const {
        GFElem n1 = field.neg(x1), n2 = field.neg(x2);
        return std::pair(x1, x2) <= std::pair(n1, n2);
    }
    std::uint32_t point_index(GFElem x1, GFElem x2) const {
        if (!is_rep(x1, x2)) {
            x1 = field.neg(x1);
            x2 = field.neg(x2);
        }
        return class_index[static_cast<std::size_t>(x1) * field.q() + x2];
    }
    std::uint32_t block_index(GFElem a, GFElem b) const {
        if (!is_rep(a, b)) {
            a = field.neg(a);
            b = field.neg(b);
        }
        return block_of_class[class_index[static_cast<std::size_t>(a) * field.q() + b]];
    }
};

inline HomologySbp sbp_homology(const GF& Fq2, std::uint32_t q) {
    require(q % 2 == 1, ErrorKind::EvenQ, "homology quotient requires odd q");
    require(Fq2.q() == static_cast<std::uint64_t>(q) * q, ErrorKind::ParameterMismatch,
            "field must be GF(q^2)");
    std::uint32_t q2 = static_cast<std::uint32_t>(Fq2.q());

    HomologySbp S;
    S.field = Fq2;
    S.q = q;
    S.class_index.assign(static_cast<std::size_t>(q2) * q2, UINT32_MAX);
    std::uint32_t count = 0;
    std::vector<std::pair<GFElem, GFElem>> reps;
    for (GFElem x1 = 0; x1 < q2; ++x1)
        for (GFElem x2 = 0; x2 < q2; ++x2) {
            if (x1 == 0 && x2 == 0) continue;
            GFElem n1 = Fq2.neg(x1), n2 = Fq2.neg(x2);
            if (std::pair(x1, x2) > std::pair(n1, n2)) continue;
            S.class_index[static_cast<std::size_t>(x1) * q2 + x2] = count++;
            reps.emplace_back(x1, x2);
        }
    std::uint32_t v = count; // (q^4 - 1) / 2

    std::vector<std::vector<std::uint32_t>> blocks(v);
    for (std::uint32_t c = 0; c < v; ++c) {
        auto [a, b] = reps[c];
        auto& blk = blocks[c];
        blk.reserve(q2);
        for (int sign = 0; sign < 2; ++sign) {
            GFElem target = sign == 0 ? 1 : Fq2.neg(1);
            if (b != 0) {
                GFElem binv = Fq2.inv(b);
                for (GFElem x1 = 0; x1 < q2; ++x1) {
                    GFElem x2 = Fq2.mul(Fq2.sub(target, Fq2.mul(a, x1)), binv);
                    blk.push_back(S.point_index(x1, x2));
                }
            } else {
                GFElem x1 = Fq2.mul(target, Fq2.inv(a));
                for (GFElem x2 = 0; x2 < q2; ++x2) blk.push_back(S.point_index(x1, x2));
            }
        }
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
    }
    std::vector<std::uint32_t> old_to_new;
    S.D = IncidenceStructure::from_blocks(v, std::move(blocks), true, &old_to_new);
    S.block_of_class = std::move(old_to_new);
    return S;
}

/// The zeta-window pair: x1, a in the subfield F_q; x2^{q-1} among the first
/// (q+1)/2 powers of zeta (exponents 0..(q-1)/2), b^{q-1} among exponents
/// 1..(q+1)/2, where zeta is a primitive (q+1)st root of unity.
inline IncidenceFreePair ifpair_homology(const HomologySbp& S) {
    const GF& F = S.field;
    std::uint32_t q = S.q, q2 = static_cast<std::uint32_t>(F.q());
    GFElem zeta = F.root_of_unity(q + 1);
    std::map<GFElem, std::uint32_t> zeta_exp;
    {
        GFElem z = 1;
        for (std::uint32_t i = 0; i <= q; ++i) {
            zeta_exp[z] = i;
            z = F.mul(z, zeta);
        }
    }
    auto subfield = F.subfield(F.h() / 2);
    std::vector<char> in_subfield(q2, 0);
    for (auto s : subfield) in_subfield[s] = 1;

    IncidenceFreePair pair;
    for (GFElem x1 = 0; x1 < q2; ++x1) {
        if (!in_subfield[x1]) continue;
        for (GFElem x2 = 1; x2 < q2; ++x2) {
            if (!S.is_rep(x1, x2)) continue;
            std::uint32_t e = zeta_exp.at(F.pow(x2, q - 1));
            if (e <= (q - 1) / 2) pair.X.push_back(S.point_index(x1, x2));
        }
    }
    for (GFElem a = 0; a < q2; ++a) {
        if (!in_subfield[a]) continue;
        for (GFElem b = 1; b < q2; ++b) {
            if (!S.is_rep(a, b)) continue;
            std::uint32_t e = zeta_exp.at(F.pow(b, q - 1));
            if (e >= 1 && e <= (q + 1) / 2) pair.Y.push_back(S.block_index(a, b));
        }
    }
    std::sort(pair.X.begin(), pair.X.end());
    std::sort(pair.Y.begin(), pair.Y.end());
    require(pair.equinumerous(), ErrorKind::Internal, "homology pair is not equinumerous");
    require(is_incidence_free(S.D, pair), ErrorKind::Internal, "homology pair is not incidence-free");
    return pair;
}

// ---------------------------------------------------------------------------
// Baer quotient in PG(2,q^2): the involution is coordinate-wise x -> x^q.
// Points and lines not fixed, identified with their conjugates.
// ---------------------------------------------------------------------------

struct BaerSbp {
    IncidenceStructure D;
    GF field; // GF(q^2)
    std::uint32_t q = 0;
    std::vector<std::uint32_t> point_class;  // by PG point index; UINT32_MAX on fixed points
    std::vector<std::uint32_t> line_class;   // by PG line label index; UINT32_MAX on fixed lines
    std::vector<std::uint32_t> block_of_class;

    std::uint32_t point_index(std::uint32_t pg_point) const { return point_class[pg_point]; }
    std::uint32_t block_index(std::uint32_t pg_line) const { return block_of_class[line_class[pg_line]]; }
};

inline BaerSbp sbp_baer(const GF& Fq2, std::uint32_t q) {
    require(Fq2.q() == static_cast<std::uint64_t>(q) * q, ErrorKind::ParameterMismatch,
            "field must be GF(q^2)");
    ProjectiveSpace pg(Fq2, 2);
    std::uint32_t np = static_cast<std::uint32_t>(pg.point_count());

    auto frob = [&](const std::vector<GFElem>& x) {
        std::vector<GFElem> y(3);
        for (int i = 0; i < 3; ++i) y[i] = Fq2.pow(x[i], q);
        return y; // normalized stays normalized: leading 1 maps to 1
    };

    BaerSbp S;
    S.field = Fq2;
    S.q = q;
    S.point_class.assign(np, UINT32_MAX);
    std::vector<std::uint32_t> conj(np);
    std::uint32_t vcount = 0;
    for (std::uint32_t i = 0; i < np; ++i) {
        auto x = pg.point_coords(i);
        std::uint32_t j = pg.point_index(frob(x));
        conj[i] = j;
        if (j == i) continue; // Baer subplane point, fixed
        if (j > i) S.point_class[i] = vcount++;
    }
    for (std::uint32_t i = 0; i < np; ++i)
        if (S.point_class[i] == UINT32_MAX && conj[i] != i) S.point_class[i] = S.point_class[conj[i]];
    std::uint32_t v = vcount; // q (q^3 - 1) / 2

    // lines share the point indexing: line [a:b:c] has the same canonical tuples
    S.line_class.assign(np, UINT32_MAX);
    std::uint32_t bcount = 0;
    std::vector<std::uint32_t> line_reps;
    for (std::uint32_t i = 0; i < np; ++i) {
        auto a = pg.point_coords(i);
        std::uint32_t j = pg.point_index(frob(a));
        if (j == i) continue;
        if (j > i) {
            S.line_class[i] = bcount;
            line_reps.push_back(i);
            ++bcount;
        } else {
            S.line_class[i] = S.line_class[j];
        }
    }

    std::vector<std::vector<std::uint32_t>> blocks(bcount);
    for (std::uint32_t c = 0; c < bcount; ++c) {
        auto a = pg.point_coords(line_reps[c]);
        auto aq = frob(a);
        auto& blk = blocks[c];
        for (std::uint32_t x = 0; x < np; ++x) {
            if (conj[x] == x) continue; // fixed points never lie in blocks
            auto pt = pg.point_coords(x);
            GFElem d1 = 0, d2 = 0;
            for (int t = 0; t < 3; ++t) {
                d1 = Fq2.add(d1, Fq2.mul(a[t], pt[t]));
                d2 = Fq2.add(d2, Fq2.mul(aq[t], pt[t]));
            }
            if (d1 == 0 || d2 == 0) blk.push_back(S.point_class[x]);
        }
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
    }
    std::vector<std::uint32_t> old_to_new;
    S.D = IncidenceStructure::from_blocks(v, std::move(blocks), true, &old_to_new);
    S.block_of_class = std::move(old_to_new);
    return S;
}

struct BaerPairResult {
    IncidenceFreePair pair;
    bool adjusted = false; // the q = 3 mod 4 trim was applied
};

/// The zeta-window pair on the Baer quotient, with the extra block family and
/// the matching trim of X when q = 3 mod 4.
inline BaerPairResult ifpair_baer(const BaerSbp& S) {
    const GF& F = S.field;
    std::uint32_t q = S.q, q2 = static_cast<std::uint32_t>(F.q());
    std::uint32_t f = (q + 1) / 4;
    ProjectiveSpace pg(F, 2);

    GFElem zeta = F.root_of_unity(q + 1);
    std::map<GFElem, std::uint32_t> zeta_exp;
    {
        GFElem z = 1;
        for (std::uint32_t i = 0; i <= q; ++i) {
            zeta_exp[z] = i;
            z = F.mul(z, zeta);
        }
    }
    auto subfield = F.subfield(F.h() / 2);
    std::vector<char> in_sub(q2, 0);
    for (auto s : subfield) in_sub[s] = 1;

    // (x0,x1) canonical pairs of PG(1,q) embedded: (0,1) and (1,t), t in F_q
    auto pg1q = [&](GFElem x0, GFElem x1) { return (x0 == 0 && x1 == 1) || (x0 == 1 && in_sub[x1]); };
    auto window = [&](GFElem x2, std::uint32_t lo, std::uint32_t hi) {
        if (x2 == 0) return false;
        std::uint32_t e = zeta_exp.at(F.pow(x2, q - 1));
        return e >= lo && e <= hi;
    };

    IncidenceFreePair pair;
    std::uint32_t np = static_cast<std::uint32_t>(pg.point_count());
    for (std::uint32_t i = 0; i < np; ++i) {
        if (S.point_class[i] == UINT32_MAX) continue;
        auto x = pg.point_coords(i);
        if (pg1q(x[0], x[1]) && window(x[2], 1, f)) pair.X.push_back(S.point_class[i]);
    }
    std::sort(pair.X.begin(), pair.X.end());
    pair.X.erase(std::unique(pair.X.begin(), pair.X.end()), pair.X.end());
    for (std::uint32_t i = 0; i < np; ++i) {
        if (S.line_class[i] == UINT32_MAX) continue;
        auto a = pg.point_coords(i);
        if (pg1q(a[0], a[1]) && window(a[2], f + 1, 2 * f)) pair.Y.push_back(S.block_of_class[S.line_class[i]]);
    }
    std::sort(pair.X.begin(), pair.X.end());
    std::sort(pair.Y.begin(), pair.Y.end());
    pair.Y.erase(std::unique(pair.Y.begin(), pair.Y.end()), pair.Y.end());

    BaerPairResult res;
    if (q % 4 == 3) {
        // add the block classes of l_{a,1,0} with a outside F_q: canonical (1,u,0), u not in F_q
        for (std::uint32_t i = 0; i < np; ++i) {
            if (S.line_class[i] == UINT32_MAX) continue;
            auto a = pg.point_coords(i);
            if (a[0] == 1 && a[2] == 0 && !in_sub[a[1]]) pair.Y.push_back(S.block_of_class[S.line_class[i]]);
        }
        std::sort(pair.Y.begin(), pair.Y.end());
        pair.Y.erase(std::unique(pair.Y.begin(), pair.Y.end()), pair.Y.end());
        require(pair.Y.size() <= pair.X.size(), ErrorKind::Internal, "baer adjustment overfilled Y");
        pair.X.resize(pair.Y.size()); // drop highest-index points
        res.adjusted = true;
    }
    require(pair.equinumerous(), ErrorKind::Internal, "baer pair is not equinumerous");
    require(is_incidence_free(S.D, pair), ErrorKind::Internal, "baer pair is not incidence-free");
    res.pair = std::move(pair);
    return res;
}

// ---------------------------------------------------------------------------
// Binary affine semi-biplanes: points are the even-weight vectors of AG(n,2),
// blocks the translates y + S over odd-weight y.
// ---------------------------------------------------------------------------

struct AffineSbp {
    IncidenceStructure D;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> S; // odd-weight generator set (bitmask codes)
    std::vector<std::uint32_t> point_rank;  // code -> point index (even codes)
    std::vector<std::uint32_t> point_code;  // point index -> code
    std::vector<std::uint32_t> block_of_y;  // code -> canonical block index (odd codes)

    std::uint32_t point_index(std::uint32_t code) const { return point_rank[code]; }
    std::uint32_t block_index(std::uint32_t y) const { return block_of_y[y]; }
};

inline std::vector<std::uint32_t> weight_one_generators(std::uint32_t n) {
    std::vector<std::uint32_t> S;
    for (std::uint32_t i = 0; i < n; ++i) S.push_back(1u << i);
    return S;
}

inline AffineSbp sbp_affine_binary(std::uint32_t n, const std::vector<std::uint32_t>& S) {
    require(n >= 2 && n < 21, ErrorKind::OutOfRange, "need 2 <= n <= 20");
    require(!S.empty(), ErrorKind::SpanTooSmall, "S must be non-empty");
    std::uint32_t full = 1u << n;
    for (auto s : S) {
        require(s < full, ErrorKind::OutOfRange, "vector outside AG(n,2)");
        require(std::popcount(s) % 2 == 1, ErrorKind::OutOfRange, "S must consist of odd-weight vectors");
    }
    {
        auto copy = S;
        std::sort(copy.begin(), copy.end());
        for (std::size_t i = 1; i < copy.size(); ++i)
            require(copy[i - 1] != copy[i], ErrorKind::OutOfRange, "repeated vector in S");
    }

    // affine span of S must be the full odd-weight class W: rank of {s + s0} = n-1
    {
        std::vector<std::uint32_t> basis;
        for (auto s : S) {
            std::uint32_t x = s ^ S[0];
            for (auto bvec : basis) x = std::min(x, x ^ bvec);
            if (x) basis.push_back(x);
        }
        require(basis.size() == n - 1, ErrorKind::SpanTooSmall,
                "affine span of S has dimension " + std::to_string(basis.size()) + " < " + std::to_string(n - 1));
    }
    // no affine plane: all pairwise sums distinct
    {
        std::vector<std::uint32_t> sums;
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = i + 1; j < S.size(); ++j) sums.push_back(S[i] ^ S[j]);
        std::sort(sums.begin(), sums.end());
        for (std::size_t i = 1; i < sums.size(); ++i)
            require(sums[i - 1] != sums[i], ErrorKind::ContainsPlane, "S contains an affine plane");
    }

    AffineSbp out;
    out.n = n;
    out.S = S;
    std::sort(out.S.begin(), out.S.end());
    out.point_rank.assign(full, UINT32_MAX);
    for (std::uint32_t code = 0; code < full; ++code)
        if (std::popcount(code) % 2 == 0) {
            out.point_rank[code] = static_cast<std::uint32_t>(out.point_code.size());
            out.point_code.push_back(code);
        }

    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> ys;
    for (std::uint32_t y = 0; y < full; ++y) {
        if (std::popcount(y) % 2 == 0) continue;
        std::vector<std::uint32_t> blk;
        blk.reserve(S.size());
        for (auto s : out.S) blk.push_back(out.point_rank[y ^ s]);
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
        ys.push_back(y);
    }
    std::vector<std::uint32_t> old_to_new;
    out.D = IncidenceStructure::from_blocks(full / 2, std::move(blocks), true, &old_to_new);
    out.block_of_y.assign(full, UINT32_MAX);
    for (std::size_t t = 0; t < ys.size(); ++t) out.block_of_y[ys[t]] = old_to_new[t];
    return out;
}

struct AffineRemarkPair {
    AffineSbp sbp;
    IncidenceFreePair pair;
    std::uint32_t obstruction_point = 0; // a point with no neighbours outside Y
};

/// The counterexample pair on the weight-one affine semi-biplane: X holds the
/// light even-weight vectors, Y the translates of heavy odd-weight vectors.
/// Its complement has no perfect matching; a heavy point sees only blocks of Y.
inline AffineRemarkPair ifpair_affine_remark(std::uint32_t n) {
    require(n >= 6, ErrorKind::TooSmallN, "need n >= 6 so the obstructing heavy point exists");
    AffineRemarkPair res{sbp_affine_binary(n, weight_one_generators(n)), {}, 0};
    const auto& A = res.sbp;
    std::uint32_t full = 1u << n;

    for (std::uint32_t code = 0; code < full; ++code) {
        int w = std::popcount(code);
        if (w % 2 == 0 && w <= static_cast<int>(n / 2) - 1) res.pair.X.push_back(A.point_rank[code]);
    }
    for (std::uint32_t y = 0; y < full; ++y) {
        int w = std::popcount(y);
        if (w % 2 == 1 && w >= static_cast<int>((n + 1) / 2) + 1) res.pair.Y.push_back(A.block_of_y[y]);
    }
    std::sort(res.pair.X.begin(), res.pair.X.end());
    std::sort(res.pair.Y.begin(), res.pair.Y.end());
    res.pair = trim_equinumerous(std::move(res.pair));
    require(is_incidence_free(A.D, res.pair), ErrorKind::Internal, "remark pair is not incidence-free");

    // obstruction: first point outside X whose blocks all lie in Y
    DynBitset xb(A.D.v()), yb(A.D.b());
    for (auto x : res.pair.X) xb.set(x);
    for (auto y : res.pair.Y) yb.set(y);
    bool found = false;
    for (std::uint32_t p = 0; p < A.D.v() && !found; ++p) {
        if (xb.test(p)) continue;
        bool all_in_y = true;
        for (auto blk : A.D.point_row(p)) all_in_y &= yb.test(blk);
        if (all_in_y) {
            res.obstruction_point = p;
            found = true;
        }
    }
    require(found, ErrorKind::Internal, "expected an obstructed point");
    return res;
}

} // namespace edom
