#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "edom/gf.hpp"
#include "edom/incidence.hpp"

namespace edom {

/// Points of PG(n,q) with canonical coordinates: (n+1)-tuples over GF(q),
/// first nonzero coordinate 1, ordered lexicographically (coordinate 0 most
/// significant, field elements by code). Index arithmetic avoids lookup tables.
class ProjectiveSpace {
public:
    ProjectiveSpace(GF field, std::uint32_t n) : F_(std::move(field)), n_(n) {
        // theta_[d] = |PG(d,q)| = (q^{d+1}-1)/(q-1), saturating well above the guardrail
        constexpr std::uint64_t cap = 1ull << 62;
        theta_.assign(n_ + 1, 0);
        std::uint64_t acc = 0;
        for (std::uint32_t d = 0; d <= n_; ++d) {
            acc = acc >= cap / F_.q() ? cap : acc * F_.q() + 1;
            theta_[d] = acc;
        }
    }

    const GF& field() const { return F_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t q() const { return F_.q(); }
    /// theta_d = |PG(d,q)|
    std::uint64_t theta(std::uint32_t d) const { return theta_[d]; }
    std::uint64_t point_count() const { return theta_[n_]; }

    /// Canonical representative: scale so the first nonzero coordinate is 1.
    std::vector<GFElem> normalize(std::vector<GFElem> x) const {
        for (auto& c : x)
            if (c != 0) {
                if (c != 1) {
                    GFElem s = F_.inv(c);
                    for (auto& d : x) d = F_.mul(d, s);
                }
                break;
            }
        return x;
    }

    std::uint32_t point_index(const std::vector<GFElem>& canonical) const {
        std::uint32_t lead = 0;
        while (canonical[lead] == 0) ++lead;
        // points with a later lead come first
        std::uint64_t idx = lead == n_ ? 0 : theta_[n_ - lead - 1];
        std::uint64_t tail = 0;
        for (std::uint32_t j = lead + 1; j <= n_; ++j) tail = tail * F_.q() + canonical[j];
        return static_cast<std::uint32_t>(idx + tail);
    }

    std::vector<GFElem> point_coords(std::uint32_t index) const {
        // points with lead position l occupy [theta_{n-l-1}, theta_{n-l})
        std::vector<GFElem> x(n_ + 1, 0);
        std::uint32_t lead = n_;
        std::uint64_t idx = index;
        while (idx >= theta_[n_ - lead]) --lead;
        std::uint64_t base = lead == n_ ? 0 : theta_[n_ - lead - 1];
        std::uint64_t tail = idx - base;
        x[lead] = 1;
        for (std::uint32_t j = n_; j > lead; --j) {
            x[j] = static_cast<GFElem>(tail % F_.q());
            tail /= F_.q();
        }
        return x;
    }

    std::vector<std::vector<GFElem>> all_points() const {
        std::vector<std::vector<GFElem>> pts;
        pts.reserve(point_count());
        for (std::uint32_t i = 0; i < point_count(); ++i) pts.push_back(point_coords(i));
        return pts;
    }

private:
    GF F_;
    std::uint32_t n_;
    std::vector<std::uint64_t> theta_;
};

namespace detail {

/// Enumerate RREF matrices with `rows` rows over `cols` columns, in
/// lexicographic order of (pivot columns, free entries). One per subspace.
template <typename F>
void enumerate_rref(const GF& gf, std::uint32_t rows, std::uint32_t cols, F&& emit) {
    std::vector<std::uint32_t> pivots(rows);
    std::vector<std::uint32_t> first(rows);
    // iterate pivot-column combinations in lex order
    for (std::uint32_t i = 0; i < rows; ++i) pivots[i] = i;
    while (true) {
        // free positions: (i, j) with j > pivots[i], j not a pivot
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        std::vector<char> is_pivot(cols, 0);
        for (auto p : pivots) is_pivot[p] = 1;
        for (std::uint32_t i = 0; i < rows; ++i)
            for (std::uint32_t j = pivots[i] + 1; j < cols; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<std::vector<GFElem>> m(rows, std::vector<GFElem>(cols, 0));
        for (std::uint32_t i = 0; i < rows; ++i) m[i][pivots[i]] = 1;
        std::uint64_t combos = 1;
        bool overflow = false;
        for (std::size_t t = 0; t < free_pos.size(); ++t) {
            combos *= gf.q();
            if (combos > (1ull << 62)) overflow = true;
        }
        require(!overflow, ErrorKind::TooLarge, "subspace enumeration too large");
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::uint64_t c = code;
            // most significant digit at the lexicographically first free position
            for (std::size_t t = free_pos.size(); t-- > 0;) {
                m[free_pos[t].first][free_pos[t].second] = static_cast<GFElem>(c % gf.q());
                c /= gf.q();
            }
            emit(m);
        }

        // next combination of pivot columns
        std::int32_t i = static_cast<std::int32_t>(rows) - 1;
        while (i >= 0 && pivots[i] == cols - rows + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (std::uint32_t j = i + 1; j < rows; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

} // namespace detail

/// Gaussian binomial [n choose k]_q: number of k-dim subspaces of F_q^n.
/// Interleaved division keeps every partial product integral.
inline std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
    if (k > n) return 0;
    auto qpow = [&](std::uint32_t e) {
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < e; ++i) r *= q;
        return r;
    };
    __uint128_t acc = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        acc *= qpow(n - i) - 1;
        acc /= qpow(i + 1) - 1;
    }
    return static_cast<std::uint64_t>(acc);
}

struct PointSubspaceDesign {
    IncidenceStructure D;
    std::uint32_t n = 0, k = 0;
    std::uint64_t q = 0;
};

/// Design of points and k-spaces of PG(n,q). Blocks come out canonical.
inline PointSubspaceDesign pg_points_kspaces(std::uint32_t n, const GF& field, std::uint32_t k) {
    require(n >= 2, ErrorKind::OutOfRange, "need n >= 2");
    require(k >= 1 && k <= n - 1, ErrorKind::OutOfRange, "need 1 <= k <= n-1");
    ProjectiveSpace pg(field, n);
    require(pg.point_count() <= kMaxSide, ErrorKind::TooLarge, "theta_n exceeds guardrail");
    std::uint64_t nblocks = gaussian_binomial(n + 1, k + 1, field.q());
    require(nblocks <= kMaxSide, ErrorKind::TooLarge, "number of k-spaces exceeds guardrail");

    std::vector<std::vector<std::uint32_t>> blocks;
    blocks.reserve(nblocks);
    std::uint32_t dim = k + 1;
    // enumerate normalized coefficient vectors once per block
    std::vector<std::vector<GFElem>> lambdas;
    {
        ProjectiveSpace small(field, k);
        lambdas.reserve(small.point_count());
        for (std::uint32_t i = 0; i < small.point_count(); ++i) lambdas.push_back(small.point_coords(i));
    }
    detail::enumerate_rref(field, dim, n + 1, [&](const std::vector<std::vector<GFElem>>& m) {
        std::vector<std::uint32_t> blk;
        blk.reserve(lambdas.size());
        std::vector<GFElem> x(n + 1);
        for (const auto& lam : lambdas) {
            std::fill(x.begin(), x.end(), 0);
            for (std::uint32_t i = 0; i < dim; ++i) {
                if (lam[i] == 0) continue;
                for (std::uint32_t j = 0; j <= n; ++j)
                    x[j] = field.add(x[j], field.mul(lam[i], m[i][j]));
            }
            blk.push_back(pg.point_index(x));
        }
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
    });

    PointSubspaceDesign out{IncidenceStructure::from_blocks(static_cast<std::uint32_t>(pg.point_count()),
                                                            std::move(blocks)),
                            n, k, field.q()};
    return out;
}

/// Replication number of the point/k-space design: the number of k-spaces
/// through a fixed point, prod_{i=1}^{k} (q^{n-k+i}-1)/(q^i-1).
inline std::uint64_t pg_replication_number(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
    return gaussian_binomial(n, k, q);
}

/// Denniston arc of order n = 2^d in PG(2,q), q = 2^h, n | q, 1 < n < q:
/// the points (1, x, y) with Q(x,y) in H, for Q the first irreducible binary
/// quadratic x^2 + beta x y + y^2 and H the span of 1, omega, ..., omega^{d-1}.
/// Size (n-1)q + n. Point indices follow the canonical PG ordering; callers
/// validate with the maximal-arc predicate (the predicate is the contract).
inline std::vector<std::uint32_t> denniston_arc_points(const GF& field, std::uint32_t arc_order) {
    require(field.p() == 2, ErrorKind::BadOrder, "Denniston arcs need even q");
    std::uint32_t q = static_cast<std::uint32_t>(field.q());
    require(arc_order > 1 && arc_order < q && q % arc_order == 0, ErrorKind::BadOrder,
            "arc order must divide q with 1 < n < q");
    std::uint32_t d = 0;
    while ((1u << (d + 1)) <= arc_order) ++d;
    require((1u << d) == arc_order, ErrorKind::BadOrder, "arc order must be a power of two");

    // lexicographically first beta making x^2 + beta x + 1 rootless
    GFElem beta = 0;
    bool found = false;
    for (std::uint64_t cand = 0; cand < q && !found; ++cand) {
        bool rootless = true;
        for (std::uint64_t x = 0; x < q && rootless; ++x) {
            GFElem xe = static_cast<GFElem>(x);
            GFElem val = field.add(field.add(field.mul(xe, xe), field.mul(static_cast<GFElem>(cand), xe)), 1);
            rootless = val != 0;
        }
        if (rootless) {
            beta = static_cast<GFElem>(cand);
            found = true;
        }
    }
    require(found, ErrorKind::Internal, "no irreducible quadratic found");

    // H = span of 1, omega, ..., omega^{d-1}
    std::vector<GFElem> H{0};
    GFElem w = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        std::size_t cur = H.size();
        for (std::size_t t = 0; t < cur; ++t) H.push_back(field.add(H[t], w));
        w = field.mul(w, field.omega());
    }
    std::vector<char> in_h(q, 0);
    for (auto x : H) in_h[x] = 1;

    ProjectiveSpace pg(field, 2);
    std::vector<std::uint32_t> S;
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y) {
            GFElem xe = static_cast<GFElem>(x), ye = static_cast<GFElem>(y);
            GFElem val = field.add(field.add(field.mul(xe, xe), field.mul(beta, field.mul(xe, ye))),
                                   field.mul(ye, ye));
            if (in_h[val]) S.push_back(pg.point_index({1, xe, ye}));
        }
    std::sort(S.begin(), S.end());
    return S;
}

/// The standard polarity of the point/hyperplane design: point (a_0..a_n)
/// swaps with the hyperplane a_0 X_0 + ... + a_n X_n = 0.
/// Returned as a map from point index to block index.
inline std::vector<std::uint32_t> pg_standard_polarity(const PointSubspaceDesign& design, const GF& field) {
    require(design.k == design.n - 1, ErrorKind::OutOfRange, "standard polarity lives on the hyperplane design");
    std::uint32_t n = design.n;
    ProjectiveSpace pg(field, n);
    std::map<std::vector<std::uint32_t>, std::uint32_t> block_index;
    for (std::uint32_t j = 0; j < design.D.b(); ++j) block_index[design.D.block(j)] = j;

    std::vector<std::uint32_t> sigma(design.D.v());
    for (std::uint32_t i = 0; i < design.D.v(); ++i) {
        auto a = pg.point_coords(i);
        std::vector<std::uint32_t> hyp;
        hyp.reserve(pg.theta(n - 1));
        for (std::uint32_t x = 0; x < design.D.v(); ++x) {
            auto pt = pg.point_coords(x);
            GFElem dot = 0;
            for (std::uint32_t t = 0; t <= n; ++t) dot = field.add(dot, field.mul(a[t], pt[t]));
            if (dot == 0) hyp.push_back(x);
        }
        auto it = block_index.find(hyp);
        require(it != block_index.end(), ErrorKind::Internal, "hyperplane not found among blocks");
        sigma[i] = it->second;
    }
    return sigma;
}

} // namespace edom
