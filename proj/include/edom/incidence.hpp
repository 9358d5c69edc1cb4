#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edom/bitset.hpp"
#include "edom/error.hpp"

namespace edom {

inline constexpr std::uint32_t kMaxSide = 1u << 20; // desk-scale guardrail
// Dense point/block bitsets are kept only while they fit comfortably in memory;
// beyond this the sorted adjacency lists serve both directions.
inline constexpr std::uint64_t kBitsetBudget = 1ull << 28;

/// Points are 0..v-1, blocks are sorted lists of point indices.
/// Immutable after construction; adjacency is stored in both directions.
class IncidenceStructure {
public:
    /// Validates, optionally sorts blocks lexicographically (the canonical form
    /// all generators emit), and builds the transpose. `old_to_new`, when given,
    /// receives the block permutation applied by canonicalization.
    static IncidenceStructure from_blocks(std::uint32_t v, std::vector<std::vector<std::uint32_t>> blocks,
                                          bool canonical = true, std::vector<std::uint32_t>* old_to_new = nullptr,
                                          bool multiset = false) {
        require(v <= kMaxSide && blocks.size() <= kMaxSide, ErrorKind::TooLarge,
                "structure exceeds the v,b <= 2^20 guardrail");
        for (auto& blk : blocks) {
            require(!blk.empty(), ErrorKind::EmptyBlock, "empty block");
            for (std::size_t i = 0; i < blk.size(); ++i) {
                require(blk[i] < v, ErrorKind::IndexOutOfRange,
                        "point index " + std::to_string(blk[i]) + " out of range [0," + std::to_string(v) + ")");
                require(i == 0 || blk[i - 1] < blk[i], ErrorKind::ParseError,
                        "block indices must be strictly increasing");
            }
        }

        IncidenceStructure D;
        D.v_ = v;
        if (canonical) {
            std::vector<std::uint32_t> order(blocks.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return blocks[a] < blocks[b]; });
            std::vector<std::vector<std::uint32_t>> sorted(blocks.size());
            for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = std::move(blocks[order[i]]);
            blocks = std::move(sorted);
            if (old_to_new) {
                old_to_new->assign(order.size(), 0);
                for (std::uint32_t i = 0; i < order.size(); ++i) (*old_to_new)[order[i]] = i;
            }
        } else if (old_to_new) {
            old_to_new->resize(blocks.size());
            std::iota(old_to_new->begin(), old_to_new->end(), 0);
        }
        if (!multiset) {
            if (canonical) {
                for (std::size_t i = 1; i < blocks.size(); ++i)
                    require(blocks[i - 1] != blocks[i], ErrorKind::DuplicateBlock, "repeated block");
            } else {
                auto copy = blocks;
                std::sort(copy.begin(), copy.end());
                for (std::size_t i = 1; i < copy.size(); ++i)
                    require(copy[i - 1] != copy[i], ErrorKind::DuplicateBlock, "repeated block");
            }
        }
        D.blocks_ = std::move(blocks);
        D.build_transpose();
        return D;
    }

    std::uint32_t v() const { return v_; }
    std::uint32_t b() const { return static_cast<std::uint32_t>(blocks_.size()); }
    std::uint64_t edge_count() const { return edges_; }

    const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
    const std::vector<std::uint32_t>& block(std::uint32_t j) const { return blocks_[j]; }
    /// Blocks through a point, ascending.
    const std::vector<std::uint32_t>& point_row(std::uint32_t i) const { return point_rows_[i]; }

    std::uint32_t block_size(std::uint32_t j) const { return static_cast<std::uint32_t>(blocks_[j].size()); }
    std::uint32_t point_degree(std::uint32_t i) const { return static_cast<std::uint32_t>(point_rows_[i].size()); }

    bool incident(std::uint32_t point, std::uint32_t blk) const {
        if (has_bitsets()) return block_bits_[blk].test(point);
        const auto& B = blocks_[blk];
        return std::binary_search(B.begin(), B.end(), point);
    }

    bool has_bitsets() const { return !block_bits_.empty(); }
    /// Point set of a block as a bitset (only when has_bitsets()).
    const DynBitset& block_bits(std::uint32_t j) const { return block_bits_[j]; }
    /// Block set through a point as a bitset (only when has_bitsets()).
    const DynBitset& point_bits(std::uint32_t i) const { return point_bits_[i]; }

    IncidenceStructure dual() const {
        // transpose verbatim: dual(dual(D)) reproduces D's block lists exactly;
        // repeated point rows are legal, so the transpose is taken as a multiset
        return from_blocks(b(), point_rows_, /*canonical=*/false, nullptr, /*multiset=*/true);
    }

    std::optional<std::vector<std::string>> point_labels;
    std::optional<std::vector<std::string>> block_labels;

private:
    void build_transpose() {
        point_rows_.assign(v_, {});
        std::vector<std::uint32_t> deg(v_, 0);
        edges_ = 0;
        for (const auto& blk : blocks_) {
            edges_ += blk.size();
            for (auto p : blk) ++deg[p];
        }
        for (std::uint32_t i = 0; i < v_; ++i) point_rows_[i].reserve(deg[i]);
        for (std::uint32_t j = 0; j < blocks_.size(); ++j)
            for (auto p : blocks_[j]) point_rows_[p].push_back(j);
        if (static_cast<std::uint64_t>(v_) * blocks_.size() <= kBitsetBudget) {
            block_bits_.assign(blocks_.size(), DynBitset(v_));
            point_bits_.assign(v_, DynBitset(blocks_.size()));
            for (std::uint32_t j = 0; j < blocks_.size(); ++j)
                for (auto p : blocks_[j]) {
                    block_bits_[j].set(p);
                    point_bits_[p].set(j);
                }
        }
    }

    std::uint32_t v_ = 0;
    std::uint64_t edges_ = 0;
    std::vector<std::vector<std::uint32_t>> blocks_;
    std::vector<std::vector<std::uint32_t>> point_rows_;
    std::vector<DynBitset> block_bits_;
    std::vector<DynBitset> point_bits_;
};

/// Parameters and classification flags of an incidence structure.
/// lambda is the *maximum* pair-coincidence count; is_design records whether
/// every pair attains it.
struct StructureParams {
    std::uint32_t v = 0, b = 0;
    std::optional<std::uint32_t> k; // block size, if uniform
    std::optional<std::uint32_t> r; // replication number, if uniform
    std::uint32_t lambda = 0;       // max #blocks through a point pair (0 if v < 2 or no coincident pair)
    std::uint32_t max_block_intersection = 0;

    bool is_tactical = false;
    bool is_design = false;
    bool is_sis = false;
    bool is_symmetric_design = false;
    bool is_semi_biplane = false;
    bool is_divisible_sbp = false;
    bool connected = false;
    std::uint32_t divisible_class_size = 0; // d, when is_divisible_sbp
};

namespace detail {

/// Max pair-coincidence count and whether all pairs attain it, via one
/// counter sweep per point. O(sum of block-size^2).
inline void pair_counts(const IncidenceStructure& D, std::uint32_t& max_out, bool& all_equal_out) {
    std::uint32_t v = D.v();
    std::vector<std::uint32_t> cnt(v, 0);
    std::vector<std::uint32_t> touched;
    std::uint32_t maxc = 0, minc = UINT32_MAX;
    bool any_pair = v >= 2;
    for (std::uint32_t p = 0; p < v; ++p) {
        touched.clear();
        for (auto blk : D.point_row(p))
            for (auto q : D.block(blk)) {
                if (q <= p) continue;
                if (cnt[q]++ == 0) touched.push_back(q);
            }
        std::uint32_t reached = static_cast<std::uint32_t>(touched.size());
        if (v - p - 1 > reached) minc = 0; // some pair beyond p shares no block
        for (auto q : touched) {
            maxc = std::max(maxc, cnt[q]);
            minc = std::min(minc, cnt[q]);
            cnt[q] = 0;
        }
    }
    max_out = any_pair ? maxc : 0;
    all_equal_out = any_pair && maxc > 0 && minc == maxc;
}

inline bool incidence_connected(const IncidenceStructure& D) {
    std::uint32_t v = D.v(), b = D.b();
    if (v + b == 0) return true;
    std::vector<char> seen_p(v, 0), seen_b(b, 0);
    std::vector<std::uint32_t> stack{0};
    seen_p[0] = 1;
    std::uint64_t visited = 1;
    // vertices: points as-is, blocks offset by v
    while (!stack.empty()) {
        std::uint32_t x = stack.back();
        stack.pop_back();
        if (x < v) {
            for (auto blk : D.point_row(x))
                if (!seen_b[blk]) {
                    seen_b[blk] = 1;
                    ++visited;
                    stack.push_back(v + blk);
                }
        } else {
            for (auto p : D.block(x - v))
                if (!seen_p[p]) {
                    seen_p[p] = 1;
                    ++visited;
                    stack.push_back(p);
                }
        }
    }
    return visited == static_cast<std::uint64_t>(v) + b;
}

/// Complete-multipartite test for the collinearity graph; returns the class
/// size d, or 0 when not divisible. Needs bitsets.
inline std::uint32_t divisible_class_size(const IncidenceStructure& D) {
    std::uint32_t v = D.v();
    std::vector<DynBitset> noncol(v, DynBitset(v));
    for (std::uint32_t p = 0; p < v; ++p) {
        DynBitset col(v);
        for (auto blk : D.point_row(p)) col |= D.block_bits(blk);
        noncol[p] = col.complement();
        noncol[p].set(p);
    }
    // Equivalence classes: all members of a class must share the same row.
    std::vector<char> done(v, 0);
    std::uint32_t d = 0;
    for (std::uint32_t p = 0; p < v; ++p) {
        if (done[p]) continue;
        std::uint32_t cls = static_cast<std::uint32_t>(noncol[p].count());
        if (d == 0) d = cls;
        if (cls != d) return 0;
        bool ok = true;
        noncol[p].for_each_set([&](std::size_t q) {
            done[q] = 1;
            if (!(noncol[q] == noncol[p])) ok = false;
        });
        if (!ok) return 0;
    }
    return d;
}

} // namespace detail

inline StructureParams classify(const IncidenceStructure& D) {
    StructureParams P;
    P.v = D.v();
    P.b = D.b();
    if (P.b > 0) {
        std::uint32_t k0 = D.block_size(0);
        bool uniform = true;
        for (std::uint32_t j = 1; j < P.b; ++j) uniform &= D.block_size(j) == k0;
        if (uniform) P.k = k0;
    }
    if (P.v > 0) {
        std::uint32_t r0 = D.point_degree(0);
        bool uniform = true;
        for (std::uint32_t i = 1; i < P.v; ++i) uniform &= D.point_degree(i) == r0;
        if (uniform) P.r = r0;
    }
    P.is_tactical = P.k.has_value() && P.r.has_value();
    P.connected = detail::incidence_connected(D);

    bool pairs_all_equal = false;
    detail::pair_counts(D, P.lambda, pairs_all_equal);
    P.is_design = P.is_tactical && pairs_all_equal && P.lambda >= 1;

    if (P.v == P.b && P.v > 0 && P.is_tactical) {
        bool dual_all_equal = false;
        detail::pair_counts(D.dual(), P.max_block_intersection, dual_all_equal);
        P.is_sis = P.is_tactical && *P.k == *P.r && P.lambda >= 1 && P.max_block_intersection == P.lambda;
        P.is_symmetric_design = P.is_design && P.is_sis;

        // pair counts and block intersections both confined to {0, 2}, connected
        if (P.is_tactical && P.lambda == 2 && P.max_block_intersection == 2 && P.connected) {
            bool ok = true;
            // re-walk pair counts rejecting count 1 (max==2 alone does not exclude it)
            std::vector<std::uint32_t> cnt(P.v, 0);
            std::vector<std::uint32_t> touched;
            for (std::uint32_t p = 0; p < P.v && ok; ++p) {
                touched.clear();
                for (auto blk : D.point_row(p))
                    for (auto q : D.block(blk)) {
                        if (q <= p) continue;
                        if (cnt[q]++ == 0) touched.push_back(q);
                    }
                for (auto q : touched) {
                    if (cnt[q] != 2) ok = false;
                    cnt[q] = 0;
                }
            }
            auto Dd = D.dual();
            for (std::uint32_t p = 0; p < P.b && ok; ++p) {
                touched.clear();
                for (auto blk : Dd.point_row(p))
                    for (auto q : Dd.block(blk)) {
                        if (q <= p) continue;
                        if (cnt[q]++ == 0) touched.push_back(q);
                    }
                for (auto q : touched) {
                    if (cnt[q] != 2) ok = false;
                    cnt[q] = 0;
                }
            }
            P.is_semi_biplane = ok;
            if (ok && D.has_bitsets()) {
                P.divisible_class_size = detail::divisible_class_size(D);
                P.is_divisible_sbp = P.divisible_class_size > 0;
            }
        }
    }
    return P;
}

// ---------------------------------------------------------------------------
// .inc file format (bit-exact):
//   optional '#' comment lines, then "v b", then b lines "k i1 i2 ... ik"
//   with 0-based strictly increasing indices, single spaces, '\n' endings.
// ---------------------------------------------------------------------------

inline void write_inc(const IncidenceStructure& D, std::ostream& os,
                      const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) os << "# " << c << "\n";
    os << D.v() << " " << D.b() << "\n";
    for (std::uint32_t j = 0; j < D.b(); ++j) {
        const auto& blk = D.block(j);
        os << blk.size();
        for (auto p : blk) os << " " << p;
        os << "\n";
    }
}

inline void write_inc(const IncidenceStructure& D, const std::string& path,
                      const std::vector<std::string>& comments = {}) {
    std::ofstream f(path, std::ios::binary);
    require(f.good(), ErrorKind::ParseError, "cannot open " + path + " for writing");
    write_inc(D, f, comments);
}

inline IncidenceStructure read_inc(std::istream& is, std::vector<std::string>* comments_out = nullptr) {
    std::string line;
    std::size_t lineno = 0;
    auto parse_error = [&](const std::string& msg) {
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
    };

    // comments, then the header
    std::uint64_t v = 0, b = 0;
    while (true) {
        if (!std::getline(is, line)) parse_error("missing header line");
        ++lineno;
        if (!line.empty() && line[0] == '#') {
            if (comments_out) {
                std::string c = line.substr(1);
                if (!c.empty() && c[0] == ' ') c.erase(0, 1);
                comments_out->push_back(c);
            }
            continue;
        }
        std::istringstream hs(line);
        std::string tail;
        if (!(hs >> v >> b) || (hs >> tail)) parse_error("expected header 'v b'");
        break;
    }
    if (v > kMaxSide || b > kMaxSide) fail(ErrorKind::TooLarge, "structure exceeds the v,b <= 2^20 guardrail");

    std::vector<std::vector<std::uint32_t>> blocks(b);
    for (std::uint64_t j = 0; j < b; ++j) {
        if (!std::getline(is, line)) parse_error("unexpected end of file, expected " + std::to_string(b) + " blocks");
        ++lineno;
        if (!line.empty() && line.back() == '\r') parse_error("CR line ending");
        if (line.empty() || line.back() == ' ') parse_error("empty block line or trailing whitespace");
        std::istringstream bs(line);
        std::uint64_t k = 0;
        if (!(bs >> k) || k == 0) parse_error("expected positive block size");
        auto& blk = blocks[j];
        blk.resize(k);
        for (std::uint64_t t = 0; t < k; ++t) {
            std::int64_t idx;
            if (!(bs >> idx)) parse_error("expected " + std::to_string(k) + " point indices");
            if (idx < 0 || static_cast<std::uint64_t>(idx) >= v)
                fail(ErrorKind::IndexOutOfRange,
                     "line " + std::to_string(lineno) + ": point index " + std::to_string(idx) + " out of range");
            blk[t] = static_cast<std::uint32_t>(idx);
            if (t > 0 && blk[t - 1] >= blk[t]) parse_error("indices not strictly increasing");
        }
        std::string tail;
        if (bs >> tail) parse_error("trailing tokens");
    }
    // Out-of-order files are accepted and canonicalized; round-trip byte identity
    // is promised on canonical form only.
    return IncidenceStructure::from_blocks(static_cast<std::uint32_t>(v), std::move(blocks), /*canonical=*/true);
}

inline IncidenceStructure read_inc(const std::string& path, std::vector<std::string>* comments_out = nullptr) {
    std::ifstream f(path, std::ios::binary);
    require(f.good(), ErrorKind::ParseError, "cannot open " + path);
    return read_inc(f, comments_out);
}

} // namespace edom
