#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "edom/gf.hpp"
#include "edom/incidence.hpp"

namespace edom {

/// Square +-1 matrix. Flags are computed by the predicates below, never assumed.
struct HadamardMatrix {
    std::uint32_t n = 0;
    std::vector<std::int8_t> e; // row-major entries in {+1,-1}

    std::int8_t at(std::uint32_t i, std::uint32_t j) const { return e[static_cast<std::size_t>(i) * n + j]; }
    std::int8_t& at(std::uint32_t i, std::uint32_t j) { return e[static_cast<std::size_t>(i) * n + j]; }
};

/// MtM = nI, checked in integer arithmetic.
inline bool is_hadamard(const HadamardMatrix& M) {
    for (std::uint32_t i = 0; i < M.n; ++i)
        for (std::uint32_t j = i; j < M.n; ++j) {
            std::int64_t dot = 0;
            for (std::uint32_t t = 0; t < M.n; ++t) dot += static_cast<std::int64_t>(M.at(t, i)) * M.at(t, j);
            if (dot != (i == j ? static_cast<std::int64_t>(M.n) : 0)) return false;
        }
    return true;
}

inline bool is_symmetric(const HadamardMatrix& M) {
    for (std::uint32_t i = 0; i < M.n; ++i)
        for (std::uint32_t j = i + 1; j < M.n; ++j)
            if (M.at(i, j) != M.at(j, i)) return false;
    return true;
}

/// Constant row sum (and then automatically constant column sum for Hadamard M).
inline bool is_regular(const HadamardMatrix& M, std::int64_t* row_sum_out = nullptr) {
    std::int64_t s0 = 0;
    for (std::uint32_t j = 0; j < M.n; ++j) s0 += M.at(0, j);
    for (std::uint32_t i = 1; i < M.n; ++i) {
        std::int64_t s = 0;
        for (std::uint32_t j = 0; j < M.n; ++j) s += M.at(i, j);
        if (s != s0) return false;
    }
    for (std::uint32_t j = 0; j < M.n; ++j) {
        std::int64_t s = 0;
        for (std::uint32_t i = 0; i < M.n; ++i) s += M.at(i, j);
        if (s != s0) return false;
    }
    if (row_sum_out) *row_sum_out = s0;
    return true;
}

/// Block structure of order 4h^2 with 2h x 2h blocks: all-one diagonal blocks,
/// zero row and column sums in every off-diagonal block.
inline bool is_bush_type(const HadamardMatrix& M) {
    std::uint32_t n = M.n;
    std::uint32_t h2 = 0;
    // n = 4 h^2 with block size 2h
    for (std::uint32_t h = 1; 4 * h * h <= n; ++h)
        if (4 * h * h == n) h2 = h;
    if (h2 == 0) return false;
    std::uint32_t s = 2 * h2;
    for (std::uint32_t bi = 0; bi < s; ++bi)
        for (std::uint32_t bj = 0; bj < s; ++bj) {
            if (bi == bj) {
                for (std::uint32_t i = 0; i < s; ++i)
                    for (std::uint32_t j = 0; j < s; ++j)
                        if (M.at(bi * s + i, bj * s + j) != 1) return false;
            } else {
                for (std::uint32_t i = 0; i < s; ++i) {
                    std::int64_t rs = 0;
                    for (std::uint32_t j = 0; j < s; ++j) rs += M.at(bi * s + i, bj * s + j);
                    if (rs != 0) return false;
                }
                for (std::uint32_t j = 0; j < s; ++j) {
                    std::int64_t cs = 0;
                    for (std::uint32_t i = 0; i < s; ++i) cs += M.at(bi * s + i, bj * s + j);
                    if (cs != 0) return false;
                }
            }
        }
    return true;
}

/// Scale rows then columns by -1 until the first row and column are all-ones.
inline HadamardMatrix normalize_hadamard(HadamardMatrix M) {
    for (std::uint32_t i = 0; i < M.n; ++i)
        if (M.at(i, 0) == -1)
            for (std::uint32_t j = 0; j < M.n; ++j) M.at(i, j) = -M.at(i, j);
    for (std::uint32_t j = 0; j < M.n; ++j)
        if (M.at(0, j) == -1)
            for (std::uint32_t i = 0; i < M.n; ++i) M.at(i, j) = -M.at(i, j);
    return M;
}

// --- matrix file format: line 1 = n, then n lines of n chars in {+,-} ---

inline HadamardMatrix read_hadamard(std::istream& is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), ErrorKind::ParseError, "missing order line");
    std::uint32_t n = 0;
    {
        std::istringstream ss(line);
        std::string tail;
        require(static_cast<bool>(ss >> n) && !(ss >> tail) && n > 0, ErrorKind::ParseError,
                "expected matrix order on line 1");
    }
    HadamardMatrix M;
    M.n = n;
    M.e.assign(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        require(static_cast<bool>(std::getline(is, line)), ErrorKind::ParseError, "unexpected end of matrix file");
        require(line.size() == n, ErrorKind::ParseError,
                "line " + std::to_string(i + 2) + ": expected " + std::to_string(n) + " entries");
        for (std::uint32_t j = 0; j < n; ++j) {
            require(line[j] == '+' || line[j] == '-', ErrorKind::ParseError, "entries must be '+' or '-'");
            M.at(i, j) = line[j] == '+' ? 1 : -1;
        }
    }
    return M;
}

inline HadamardMatrix read_hadamard(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    require(f.good(), ErrorKind::ParseError, "cannot open " + path);
    return read_hadamard(f);
}

inline void write_hadamard(const HadamardMatrix& M, std::ostream& os) {
    os << M.n << "\n";
    for (std::uint32_t i = 0; i < M.n; ++i) {
        for (std::uint32_t j = 0; j < M.n; ++j) os << (M.at(i, j) > 0 ? '+' : '-');
        os << "\n";
    }
}

// ---------------------------------------------------------------------------
// Paley / Hadamard designs
// ---------------------------------------------------------------------------

/// Jacobsthal-based Hadamard matrix of order 2(q+1), q = 1 mod 4:
/// the tensor construction over the quadratic character.
inline HadamardMatrix paley_tensor_hadamard(const GF& F) {
    require(F.q() % 4 == 1, ErrorKind::BadResidueClass, "q must be 1 mod 4");
    std::uint32_t q = static_cast<std::uint32_t>(F.q());
    std::uint32_t m = q + 1; // indices: 0 = infinity, 1..q = field elements
    auto chi_ext = [&](std::uint32_t a, std::uint32_t b) -> int {
        // chi(row - col) with infinity rules: chi(infinity) = 1, chi(0) = 0
        if (a == b) return 0;
        if (a == 0 || b == 0) return 1;
        return F.quadratic_character(F.sub(static_cast<GFElem>(a - 1), static_cast<GFElem>(b - 1)));
    };
    HadamardMatrix M;
    M.n = 2 * m;
    M.e.assign(static_cast<std::size_t>(M.n) * M.n, 0);
    // base(x,y) = 0 on the diagonal, 1 in row/col infinity, chi(x-y) otherwise
    for (std::uint32_t x = 0; x < m; ++x)
        for (std::uint32_t y = 0; y < m; ++y) {
            int base = chi_ext(x, y);
            int t11, t1m, tm1, tmm; // tensor blocks for (i,j) in {1,-1}^2
            if (x == y) {
                t11 = 1, t1m = -1, tm1 = -1, tmm = -1;
            } else {
                t11 = t1m = tm1 = base;
                tmm = -base;
            }
            M.at(2 * x, 2 * y) = static_cast<std::int8_t>(t11);
            M.at(2 * x, 2 * y + 1) = static_cast<std::int8_t>(t1m);
            M.at(2 * x + 1, 2 * y) = static_cast<std::int8_t>(tm1);
            M.at(2 * x + 1, 2 * y + 1) = static_cast<std::int8_t>(tmm);
        }
    return M;
}

struct PaleyDesign {
    IncidenceStructure D;
    /// Natural polarity: sigma[point index] = block index of B_P.
    std::vector<std::uint32_t> sigma;
    GF field;
    /// Point indexing: infinity = 0, then (x, +1) = 1 + 2 code(x), (x, -1) = 2 + 2 code(x).
    std::uint32_t point_infinity() const { return 0; }
    std::uint32_t point_of(GFElem x, int sign) const { return 1 + 2 * x + (sign < 0 ? 1 : 0); }
};

/// The Hadamard design HD(q) on (F_q x {1,-1}) u {infinity}, q = 1 mod 4, with
/// its natural polarity P <-> B_P.
inline PaleyDesign paley_hadamard_design(const GF& F) {
    require(F.q() % 2 == 1, ErrorKind::BadResidueClass, "q must be odd");
    require(F.q() % 4 == 1, ErrorKind::BadResidueClass,
            "q = " + std::to_string(F.q()) + " is not 1 mod 4");
    std::uint32_t q = static_cast<std::uint32_t>(F.q());
    std::uint32_t v = 2 * q + 1;
    auto pt = [&](GFElem x, int sign) { return 1 + 2 * x + (sign < 0 ? 1 : 0); };

    // blocks in point order of their defining point: B_infinity, B_(0,1), B_(0,-1), B_(1,1), ...
    std::vector<std::vector<std::uint32_t>> blocks(v);
    {
        auto& binf = blocks[0];
        for (std::uint32_t x = 0; x < q; ++x) binf.push_back(pt(static_cast<GFElem>(x), -1));
        std::sort(binf.begin(), binf.end());
    }
    for (std::uint32_t x = 0; x < q; ++x) {
        auto& bplus = blocks[pt(static_cast<GFElem>(x), +1)];
        for (std::uint32_t y = 0; y < q; ++y)
            if (F.quadratic_character(F.sub(static_cast<GFElem>(x), static_cast<GFElem>(y))) == 1) {
                bplus.push_back(pt(static_cast<GFElem>(y), +1));
                bplus.push_back(pt(static_cast<GFElem>(y), -1));
            }
        bplus.push_back(pt(static_cast<GFElem>(x), +1));
        std::sort(bplus.begin(), bplus.end());

        auto& bminus = blocks[pt(static_cast<GFElem>(x), -1)];
        bminus.push_back(0); // infinity
        for (std::uint32_t y = 0; y < q; ++y) {
            int c = F.quadratic_character(F.sub(static_cast<GFElem>(y), static_cast<GFElem>(x)));
            if (c == 1) bminus.push_back(pt(static_cast<GFElem>(y), +1));
            if (c == -1) bminus.push_back(pt(static_cast<GFElem>(y), -1));
        }
        std::sort(bminus.begin(), bminus.end());
    }

    std::vector<std::uint32_t> old_to_new;
    auto D = IncidenceStructure::from_blocks(v, std::move(blocks), /*canonical=*/true, &old_to_new);
    // block of point i was emitted at position i, so old_to_new is exactly sigma
    return PaleyDesign{std::move(D), std::move(old_to_new), F};
}

/// The subfield F_{sqrt q} as a clique of the Paley graph of order q (q an
/// even power of an odd prime); the clique property is re-verified on every
/// difference via the quadratic character.
inline std::vector<GFElem> paley_clique(const GF& F) {
    require(F.q() % 2 == 1, ErrorKind::NonSquareOrder, "Paley graphs need odd q");
    require(F.h() % 2 == 0, ErrorKind::NonSquareOrder,
            "q = " + std::to_string(F.q()) + " is not a square");
    auto clique = F.subfield(F.h() / 2);
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            require(F.quadratic_character(F.sub(clique[i], clique[j])) == 1, ErrorKind::Internal,
                    "subfield difference is a non-square");
    return clique;
}

// ---------------------------------------------------------------------------
// Menon designs and Bush-type matrices
// ---------------------------------------------------------------------------

/// Menon design with incidence matrix (J + eps M)/2 from a regular Hadamard
/// matrix of order 4h^2. Rows become blocks, columns are points.
inline IncidenceStructure menon_from_hadamard(const HadamardMatrix& M, int eps) {
    require(eps == 1 || eps == -1, ErrorKind::OutOfRange, "eps must be +-1");
    require(is_hadamard(M), ErrorKind::NotRegular, "matrix is not Hadamard");
    std::int64_t row_sum = 0;
    require(is_regular(M, &row_sum), ErrorKind::NotRegular, "matrix is not regular");
    std::uint32_t h = 0;
    for (std::uint32_t t = 1; 4 * t * t <= M.n; ++t)
        if (4 * t * t == M.n) h = t;
    require(h != 0, ErrorKind::NotRegular, "order is not 4h^2");

    // parameters 2-(4h^2, 2h^2 + e h, h^2 + e h) with e = eps * sign(row sum)
    std::int64_t e = eps * (row_sum >= 0 ? 1 : -1);
    std::int64_t lambda = static_cast<std::int64_t>(h) * h + e * h;
    require(lambda >= 1, ErrorKind::DegenerateLambda,
            "lambda = h^2 " + std::string(e > 0 ? "+" : "-") + " h = " + std::to_string(lambda) +
                " violates the lambda >= 1 convention");

    std::vector<std::vector<std::uint32_t>> blocks(M.n);
    for (std::uint32_t i = 0; i < M.n; ++i)
        for (std::uint32_t j = 0; j < M.n; ++j)
            if (eps * M.at(i, j) == 1) blocks[i].push_back(j);
    return IncidenceStructure::from_blocks(M.n, std::move(blocks));
}

/// Symmetric regular Bush-type Hadamard matrix of order 4h^2 for h in {1,2},
/// built from rank-one blocks r_a^T r_a of a normalized Hadamard matrix of
/// order 2h arranged by the XOR Latin square; predicate-verified before return.
/// Other h values need a user-supplied matrix (verify with the predicates).
inline HadamardMatrix bush_type_hadamard(std::uint32_t h) {
    require(h == 1 || h == 2, ErrorKind::NoSeedAvailable,
            "no built-in seed for h = " + std::to_string(h) + "; supply a matrix file");
    std::uint32_t s = 2 * h; // block size; 2 or 4, both Sylvester orders
    std::vector<std::vector<int>> K(s, std::vector<int>(s, 1));
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < s; ++j) {
            std::uint32_t bits = i & j;
            int par = std::popcount(bits) & 1 ? -1 : 1; // Sylvester K(i,j) = (-1)^{<i,j>}
            K[i][j] = par;
        }
    HadamardMatrix M;
    M.n = 4 * h * h;
    M.e.assign(static_cast<std::size_t>(M.n) * M.n, 0);
    for (std::uint32_t bi = 0; bi < s; ++bi)
        for (std::uint32_t bj = 0; bj < s; ++bj) {
            std::uint32_t a = bi ^ bj; // XOR Latin square, constant 0 diagonal
            for (std::uint32_t i = 0; i < s; ++i)
                for (std::uint32_t j = 0; j < s; ++j)
                    M.at(bi * s + i, bj * s + j) = static_cast<std::int8_t>(K[a][i] * K[a][j]);
        }
    require(is_hadamard(M) && is_symmetric(M) && is_bush_type(M) && is_regular(M), ErrorKind::Internal,
            "seed construction failed the Bush-type predicate");
    return M;
}

} // namespace edom
