#include <catch2/catch_amalgamated.hpp>

#include "edom/gamma.hpp"
#include "edom/matching.hpp"
#include "test_util.hpp"

using namespace edom;

namespace {

// Independent oracle: minimum maximal matching by enumerating all edge subsets
// of size <= cap as combinations and scanning each for matching + domination.
std::uint32_t brute_force_gamma(const IncidenceStructure& D, std::uint32_t cap) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> all_edges;
    for (std::uint32_t j = 0; j < D.b(); ++j)
        for (auto p : D.block(j)) all_edges.emplace_back(p, j);
    std::sort(all_edges.begin(), all_edges.end());
    std::uint32_t m = static_cast<std::uint32_t>(all_edges.size());

    for (std::uint32_t size = 0; size <= cap; ++size) {
        std::vector<std::uint32_t> idx(size);
        for (std::uint32_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> sel;
            for (auto i : idx) sel.push_back(all_edges[i]);
            if (is_matching(D, sel) && is_edge_dominating(D, sel)) return size;
            // next combination
            if (size == 0) break;
            std::int32_t t = static_cast<std::int32_t>(size) - 1;
            while (t >= 0 && idx[t] == m - size + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (std::uint32_t s = t + 1; s < size; ++s) idx[s] = idx[s - 1] + 1;
        }
    }
    return UINT32_MAX;
}

} // namespace

TEST_CASE("maximum matching on the Fano incidence graph is perfect") {
    auto D = testutil::fano();
    auto M = max_matching(D);
    CHECK(M.size() == 7);
    CHECK(is_matching(D, M.edges));
}

TEST_CASE("maximum matching handles complete and empty bipartite graphs") {
    BipGraph K35;
    K35.nu = 3;
    K35.nv = 5;
    K35.adj = {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
    K35.u_orig = {0, 1, 2};
    K35.v_orig = {0, 1, 2, 3, 4};
    CHECK(max_matching(K35).size() == 3);

    BipGraph empty;
    CHECK(max_matching(empty).size() == 0);
}

TEST_CASE("biregular graphs cover their small side") {
    auto D = testutil::fano();
    // delete point 0; keep its 3 lines: biregular, matching covers all 3 lines
    std::vector<std::uint32_t> pts{1, 2, 3, 4, 5, 6};
    auto G = BipGraph::induced(D, pts, D.point_row(0));
    auto M = biregular_cover_matching(G);
    CHECK(M.size() == 3);

    // 2-vs-3 biregular instance
    auto E = IncidenceStructure::from_blocks(6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {2, 4, 5}});
    auto M2 = biregular_cover_matching(BipGraph::full(E.dual()));
    CHECK(M2.size() == 4); // block side is the small side

    // k-regular bipartite: perfect matching
    auto M3 = biregular_cover_matching(BipGraph::full(D));
    CHECK(M3.size() == 7);

    BipGraph bad;
    bad.nu = 2;
    bad.nv = 2;
    bad.adj = {{0, 1}, {0}};
    bad.u_orig = {0, 1};
    bad.v_orig = {0, 1};
    CHECK_THROWS_AS(biregular_cover_matching(bad), Error);
}

TEST_CASE("complement perfect matchings and Hall violators") {
    auto D = testutil::fano();

    SECTION("two points and the two lines missing both") {
        std::vector<std::uint32_t> X{0, 1};
        std::vector<std::uint32_t> Y;
        for (std::uint32_t j = 0; j < 7; ++j)
            if (!D.incident(0, j) && !D.incident(1, j)) Y.push_back(j);
        REQUIRE(Y.size() == 2);
        auto cert = complement_perfect_matching(D, X, Y);
        REQUIRE(cert.has_matching());
        CHECK(cert.perfect->size() == 5);
    }

    SECTION("empty pair on a symmetric design gives a perfect matching") {
        auto cert = complement_perfect_matching(D, {}, {});
        REQUIRE(cert.has_matching());
        CHECK(cert.perfect->size() == 7);
    }

    SECTION("unequal sides are rejected") {
        CHECK_THROWS_AS(complement_perfect_matching(D, {0}, {}), Error);
    }

    SECTION("a starved point lands in the Hall violator") {
        auto E = IncidenceStructure::from_blocks(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        // point 3 lies only on block {2,3}; removing that block and point 0 starves it
        auto cert = complement_perfect_matching(E, {0}, {3});
        REQUIRE(!cert.has_matching());
        CHECK(std::find(cert.violator.begin(), cert.violator.end(), 3u) != cert.violator.end());
        CHECK(cert.violator_neighborhood.size() < cert.violator.size());
    }
}

TEST_CASE("gamma_exact certifies the Fano value against the brute-force oracle") {
    auto D = testutil::fano();
    std::uint32_t oracle = brute_force_gamma(D, 7);
    REQUIRE(oracle == 5);

    auto res = gamma_exact(D);
    CHECK(res.gamma == 5);
    CHECK(res.certified);
    CHECK(res.witness.size() == 5);
    CHECK(is_matching(D, res.witness));
    CHECK(is_edge_dominating(D, res.witness));
}

TEST_CASE("gamma_exact with a tiny budget returns an uncertified interval") {
    auto D = testutil::fano();
    auto res = gamma_exact(D, 3);
    CHECK_FALSE(res.certified);
    CHECK(res.lower_bound <= 5);
    CHECK(res.gamma >= 5);
}

TEST_CASE("trivial and v-1 dominating constructions") {
    auto D = testutil::fano();
    auto triv = dominating_trivial(D);
    CHECK(triv.size() == 7);
    CHECK(is_edge_dominating(D, triv.edges));

    auto vm1 = dominating_v_minus_1(D, 3, 7);
    CHECK(vm1.size() == 6);
    CHECK(is_edge_dominating(D, vm1.edges));

    CHECK_THROWS_AS(dominating_v_minus_1(D, 7, 7), Error);

    auto iso = IncidenceStructure::from_blocks(3, {{0, 1}});
    CHECK_THROWS_AS(dominating_trivial(iso), Error);
}

TEST_CASE("dominating_from_ifpair turns the Fano optimum into a size-5 set") {
    auto D = testutil::fano();
    IncidenceFreePair pair;
    pair.X = {0, 1};
    for (std::uint32_t j = 0; j < 7; ++j)
        if (!D.incident(0, j) && !D.incident(1, j)) pair.Y.push_back(j);
    auto res = dominating_from_ifpair(D, pair);
    REQUIRE(res.dominating.has_value());
    CHECK(res.dominating->size() == 5);
    CHECK(res.dominating->is_maximal_matching);
    CHECK(is_edge_dominating(D, res.dominating->edges));
}
