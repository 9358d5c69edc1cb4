#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "edom/hadamard.hpp"
#include "edom/ifpair.hpp"

using namespace edom;

TEST_CASE("the Paley tensor matrix is Hadamard") {
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{5, 1}, {3, 2}, {13, 1}}) {
        auto F = GF::create(p, h);
        auto M = paley_tensor_hadamard(F);
        INFO("q = " << F.q());
        CHECK(M.n == 2 * (F.q() + 1));
        CHECK(is_hadamard(M));
    }
}

TEST_CASE("normalization yields an all-ones first row and column") {
    auto F = GF::create(5, 1);
    auto M = normalize_hadamard(paley_tensor_hadamard(F));
    CHECK(is_hadamard(M));
    for (std::uint32_t i = 0; i < M.n; ++i) {
        CHECK(M.at(0, i) == 1);
        CHECK(M.at(i, 0) == 1);
    }
}

TEST_CASE("a normalized Hadamard matrix of order 4u carries a (4u-1, 2u-1, u-1) design") {
    auto F = GF::create(5, 1);
    auto M = normalize_hadamard(paley_tensor_hadamard(F)); // order 12, u = 3
    std::uint32_t m = M.n - 1;
    std::vector<std::vector<std::uint32_t>> blocks(m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            if (M.at(i + 1, j + 1) == 1) blocks[i].push_back(j);
    auto D = IncidenceStructure::from_blocks(m, std::move(blocks));
    auto P = classify(D);
    CHECK(P.v == 11);
    CHECK(P.k == 5);
    CHECK(P.lambda == 2);
    CHECK(P.is_symmetric_design);
}

TEST_CASE("HD(q) has the stated parameters and natural polarity") {
    SECTION("q = 5 gives the (11,5,2) biplane") {
        auto F = GF::create(5, 1);
        auto hd = paley_hadamard_design(F);
        auto P = classify(hd.D);
        CHECK(P.v == 11);
        CHECK(P.k == 5);
        CHECK(P.lambda == 2);
        CHECK(P.is_symmetric_design);
        CHECK(is_polarity(hd.D, hd.sigma));
    }
    SECTION("q = 9 gives the (19,9,4) design") {
        auto F = GF::create(3, 2);
        auto hd = paley_hadamard_design(F);
        auto P = classify(hd.D);
        CHECK(P.v == 19);
        CHECK(P.k == 9);
        CHECK(P.lambda == 4);
        CHECK(P.is_symmetric_design);
        CHECK(is_polarity(hd.D, hd.sigma));
    }
    SECTION("q = 13 gives the (27,13,6) design") {
        auto F = GF::create(13, 1);
        auto hd = paley_hadamard_design(F);
        auto P = classify(hd.D);
        CHECK(P.v == 27);
        CHECK(P.k == 13);
        CHECK(P.lambda == 6);
        CHECK(P.is_symmetric_design);
    }
    SECTION("q = 7 is rejected") {
        auto F = GF::create(7, 1);
        CHECK_THROWS_AS(paley_hadamard_design(F), Error);
    }
}

TEST_CASE("Paley cliques are subfields, verified by character") {
    auto F9 = GF::create(3, 2);
    CHECK(paley_clique(F9) == std::vector<GFElem>{0, 1, 2});

    auto F25 = GF::create(5, 2);
    CHECK(paley_clique(F25).size() == 5);

    auto F27 = GF::create(3, 3);
    CHECK_THROWS_AS(paley_clique(F27), Error);
}

TEST_CASE("built-in Bush-type matrices pass every predicate") {
    SECTION("h = 1 is the block matrix [[J,K],[K,J]]") {
        auto M = bush_type_hadamard(1);
        CHECK(M.n == 4);
        std::vector<std::int8_t> expect{1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, 1};
        CHECK(M.e == expect);
        CHECK(is_hadamard(M));
        CHECK(is_symmetric(M));
        CHECK(is_bush_type(M));
        CHECK(is_regular(M));
    }
    SECTION("h = 2") {
        auto M = bush_type_hadamard(2);
        CHECK(M.n == 16);
        CHECK(is_hadamard(M));
        CHECK(is_symmetric(M));
        CHECK(is_bush_type(M));
        std::int64_t rs = 0;
        CHECK(is_regular(M, &rs));
        CHECK(rs == 4); // 2h
    }
    SECTION("h = 3 needs a supplied matrix") { CHECK_THROWS_AS(bush_type_hadamard(3), Error); }
}

TEST_CASE("Menon designs from the Bush-type seed") {
    auto M = bush_type_hadamard(2);
    SECTION("eps = -1: the (16,6,2) design") {
        auto D = menon_from_hadamard(M, -1);
        auto P = classify(D);
        CHECK(P.v == 16);
        CHECK(P.k == 6);
        CHECK(P.lambda == 2);
        CHECK(P.is_symmetric_design);
    }
    SECTION("eps = +1: the (16,10,6) design") {
        auto D = menon_from_hadamard(M, +1);
        auto P = classify(D);
        CHECK(P.k == 10);
        CHECK(P.lambda == 6);
        CHECK(P.is_symmetric_design);
    }
    SECTION("h = 1 with eps = -1 degenerates") {
        CHECK_THROWS_AS(menon_from_hadamard(bush_type_hadamard(1), -1), Error);
    }
    SECTION("non-regular matrices are rejected") {
        auto F = GF::create(5, 1);
        auto H = paley_tensor_hadamard(F); // order 12, not regular
        CHECK_THROWS_AS(menon_from_hadamard(H, -1), Error);
    }
}

TEST_CASE("the 2h-point class of the Bush Menon design is a maximal arc of order h") {
    auto M = bush_type_hadamard(2);
    auto D = menon_from_hadamard(M, -1);
    std::vector<std::uint32_t> cls{0, 1, 2, 3};
    auto ord = is_maximal_arc(D, cls);
    REQUIRE(ord.has_value());
    CHECK(*ord == 2);
    CHECK(dual_arc(D, cls).size() == 4);
}

TEST_CASE("matrix file round trip") {
    auto M = bush_type_hadamard(2);
    std::ostringstream os;
    write_hadamard(M, os);
    std::istringstream is(os.str());
    auto M2 = read_hadamard(is);
    CHECK(M2.n == M.n);
    CHECK(M2.e == M.e);

    std::istringstream bad("2\n++\n+x\n");
    CHECK_THROWS_AS(read_hadamard(bad), Error);
}
